#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace likcli {

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "model.d",      "model.r",          "model.kernel", "model.g",
        "model.sigma_xi",
        "data.n_train", "data.n_test",      "data.k",       "data.seed",
        "kestim.delta", "kestim.hints",     "kestim.betas", "kestim.exponentiate",
        "gest.ell",     "gest.c",
        "pvel.eta",     "pvel.rounds",
        "eval.nw_lag",  "eval.quantile",    "eval.annualization", "eval.weights",
    };
    return keys;
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    auto end = s.find_last_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void usage_fail(const std::string& msg) {
    throw std::runtime_error("usage-error: " + msg);
}

}  // namespace

Config Config::defaults() {
    Config c;
    c.kv_ = {
        {"model.d", "100"},
        {"model.r", "2"},
        {"model.kernel", "gaussian:1"},
        {"model.g", "poly:0,0,0,1"},
        {"model.sigma_xi", "1"},
        {"data.n_train", "1000"},
        {"data.n_test", "250"},
        {"data.k", "1"},
        {"data.seed", "0"},
        {"kestim.delta", "auto"},
        {"kestim.hints", ""},
        {"kestim.betas", ""},
        {"kestim.exponentiate", "0"},
        {"gest.ell", "10"},
        {"gest.c", "0.5"},
        {"pvel.eta", "0.1"},
        {"pvel.rounds", "50"},
        {"eval.nw_lag", "4"},
        {"eval.quantile", "0.2"},
        {"eval.annualization", "50.4"},
        {"eval.weights", ""},
    };
    return c;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("io-error: cannot open config " + path);
    Config c = defaults();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        auto eq = text.find('=');
        if (eq == std::string::npos)
            usage_fail(path + ":" + std::to_string(lineno) + ": expected key=value");
        c.set(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
    }
    return c;
}

bool Config::is_known(const std::string& key) const { return known_keys().count(key) > 0; }

void Config::set(const std::string& key, const std::string& value) {
    if (!is_known(key)) usage_fail("unknown config key '" + key + "'");
    kv_[key] = value;
}

const std::string& Config::get(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) usage_fail("unknown config key '" + key + "'");
    return it->second;
}

std::int64_t Config::get_int(const std::string& key) const {
    const std::string& v = get(key);
    try {
        std::size_t used = 0;
        const long long parsed = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return parsed;
    } catch (const std::exception&) {
        usage_fail("config key " + key + " needs an integer, got '" + v + "'");
    }
}

double Config::get_real(const std::string& key) const {
    const std::string& v = get(key);
    try {
        std::size_t used = 0;
        const double parsed = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return parsed;
    } catch (const std::exception&) {
        usage_fail("config key " + key + " needs a number, got '" + v + "'");
    }
}

std::uint64_t Config::get_seed(const std::string& key) const {
    const std::string& v = get(key);
    try {
        std::size_t used = 0;
        const unsigned long long parsed = std::stoull(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return parsed;
    } catch (const std::exception&) {
        usage_fail("config key " + key + " needs a non-negative integer, got '" + v + "'");
    }
}

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char ch : text) {
        if (ch == sep) {
            if (!current.empty()) out.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

}  // namespace likcli
