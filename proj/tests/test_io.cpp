#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "lik/io.hpp"
#include "lik/rng.hpp"

using namespace lik;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path(liktest::temp_path(name)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("csv round-trip preserves full double precision") {
    TempFile tmp("roundtrip.csv");
    SplitMix64 rng(3);
    Matrix m(12, 7);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            // mix magnitudes: tiny, huge, subnormal-ish, negative
            const double base = rng.normal();
            const int exp10 = static_cast<int>(rng.uniform_int(61)) - 30;
            m(r, c) = base * std::pow(10.0, exp10);
        }
    m(0, 0) = 0.1;
    m(0, 1) = -1.0 / 3.0;
    m(0, 2) = 1e-300;
    write_csv(m, tmp.path);
    const Matrix back = read_csv(tmp.path);
    REQUIRE(back.rows() == m.rows());
    REQUIRE(back.cols() == m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) CHECK(back(r, c) == m(r, c));
}

TEST_CASE("csv writes are byte-identical across runs") {
    TempFile a("bytes_a.csv"), b("bytes_b.csv");
    const Matrix m = liktest::random_matrix(9, 5, 17);
    write_csv(m, a.path);
    write_csv(m, b.path);
    std::ifstream fa(a.path, std::ios::binary), fb(b.path, std::ios::binary);
    const std::string sa((std::istreambuf_iterator<char>(fa)), {});
    const std::string sb((std::istreambuf_iterator<char>(fb)), {});
    CHECK(sa == sb);
    CHECK(!sa.empty());
}

TEST_CASE("csv rejects malformed input") {
    TempFile tmp("bad.csv");
    {
        std::ofstream out(tmp.path);
        out << "1,2,3\n4,5\n";
    }
    CHECK_THROWS_AS(read_csv(tmp.path), Error);
    {
        std::ofstream out(tmp.path);
        out << "1,abc\n";
    }
    CHECK_THROWS_AS(read_csv(tmp.path), Error);
    {
        std::ofstream out(tmp.path);
        out << "1,nan\n";
    }
    CHECK_THROWS_AS(read_csv(tmp.path), Error);
    CHECK_THROWS_AS(read_csv("liktest_does_not_exist.csv"), Error);

    Matrix bad = Matrix::Zero(1, 1);
    bad(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(write_csv(bad, tmp.path), Error);
}

TEST_CASE("meta files round-trip") {
    TempFile tmp("meta.txt");
    write_meta({{"d", "100"}, {"kernel", "gaussian:1"}, {"sigma_xi", "0.5"}}, tmp.path);
    auto kv = read_meta(tmp.path);
    CHECK(kv.at("d") == "100");
    CHECK(kv.at("kernel") == "gaussian:1");
    CHECK(kv.size() == 3);
}

TEST_CASE("panel save/load round-trips the matrices exactly") {
    namespace fs = std::filesystem;
    const std::string dir = liktest::temp_path("panel_dir");
    auto model = make_latent_model(8, 2, KernelSpec::gaussian_kernel(1.0),
                                   SignalFn::parse("poly:0,1"), 0.3, 5);
    auto panel = generate_panel(model, 20, 2, 6);
    save_panel(panel, model, dir);

    auto loaded = load_panel(dir);
    CHECK(loaded.panel.n == 20);
    CHECK(loaded.panel.d == 8);
    CHECK(loaded.panel.k == 2);
    CHECK((loaded.panel.y - panel.y).cwiseAbs().maxCoeff() == 0.0);
    CHECK((loaded.panel.x[1] - panel.x[1]).cwiseAbs().maxCoeff() == 0.0);
    CHECK(loaded.meta.at("d") == "8");
    CHECK(loaded.meta.at("seed") == "5");
    CHECK(fs::exists(dir + "/K_true.csv"));
    fs::remove_all(dir);
}
