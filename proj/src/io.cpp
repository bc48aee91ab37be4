#include "lik/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace lik {

namespace fs = std::filesystem;

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const Matrix& m, const std::string& path) {
    if (!m.allFinite()) fail(Status::io_error, "write_csv: non-finite entries for " + path);
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) fail(Status::io_error, "cannot open " + path + ": " + std::strerror(errno));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) std::fputc(',', f);
            std::fprintf(f, "%.17g", m(r, c));
        }
        std::fputc('\n', f);
    }
    if (std::fclose(f) != 0) fail(Status::io_error, "failed writing " + path);
}

Matrix read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Status::io_error, "cannot open " + path + ": " + std::strerror(errno));
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        const char* ptr = line.c_str();
        char* end = nullptr;
        while (*ptr) {
            const double v = std::strtod(ptr, &end);
            if (end == ptr) fail(Status::io_error, "bad numeric field in " + path);
            row.push_back(v);
            ptr = end;
            if (*ptr == ',') ++ptr;
            else if (*ptr == '\r' || *ptr == '\0') break;
            else fail(Status::io_error, "unexpected character in " + path);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            fail(Status::io_error, "ragged rows in " + path);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(Status::io_error, "empty matrix file " + path);
    Matrix m(static_cast<Eigen::Index>(rows.size()),
             static_cast<Eigen::Index>(rows.front().size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            m(r, c) = rows[std::size_t(r)][std::size_t(c)];
    if (!m.allFinite()) fail(Status::io_error, "non-finite entries in " + path);
    return m;
}

void write_meta(const std::map<std::string, std::string>& kv, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Status::io_error, "cannot open " + path);
    for (const auto& [key, value] : kv) out << key << "=" << value << "\n";
    if (!out) fail(Status::io_error, "failed writing " + path);
}

std::map<std::string, std::string> read_meta(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Status::io_error, "cannot open " + path + ": " + std::strerror(errno));
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) fail(Status::io_error, "bad meta line in " + path);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

void save_panel(const PanelData& panel, const LatentModel& model, const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) fail(Status::io_error, "cannot create " + dir + ": " + ec.message());
    write_csv(panel.y, dir + "/Y.csv");
    for (std::int64_t f = 0; f < panel.k; ++f)
        write_csv(panel.x[std::size_t(f)], dir + "/X_f" + std::to_string(f) + ".csv");
    write_csv(gram_matrix(model.z, model.kernel), dir + "/K_true.csv");
    write_meta(
        {
            {"d", std::to_string(panel.d)},
            {"n", std::to_string(panel.n)},
            {"k", std::to_string(panel.k)},
            {"r", std::to_string(model.r)},
            {"kernel", model.kernel.to_string()},
            {"sigma_xi", format_g17(model.sigma_xi)},
            {"seed", std::to_string(model.seed)},
        },
        dir + "/meta.txt");
}

LoadedPanel load_panel(const std::string& dir) {
    LoadedPanel out;
    out.meta = read_meta(dir + "/meta.txt");
    if (!out.meta.count("k")) fail(Status::io_error, "meta.txt in " + dir + " lacks k");
    const auto k = std::stoll(out.meta.at("k"));
    out.panel.y = read_csv(dir + "/Y.csv");
    out.panel.n = out.panel.y.rows();
    out.panel.d = out.panel.y.cols();
    out.panel.k = k;
    for (std::int64_t f = 0; f < k; ++f) {
        Matrix slice = read_csv(dir + "/X_f" + std::to_string(f) + ".csv");
        if (slice.rows() != out.panel.n || slice.cols() != out.panel.d)
            fail(Status::io_error, "feature slice shape mismatch in " + dir);
        out.panel.x.push_back(std::move(slice));
    }
    return out;
}

}  // namespace lik
