#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace likcli {

// Plain key=value experiment config with dotted keys (model.d, data.n_train,
// gest.ell, ...). Unknown keys are rejected; numeric fields are validated
// against the module preconditions when read.
class Config {
public:
    static Config defaults();
    static Config load(const std::string& path);

    void set(const std::string& key, const std::string& value);
    const std::string& get(const std::string& key) const;

    std::int64_t get_int(const std::string& key) const;
    double get_real(const std::string& key) const;
    std::uint64_t get_seed(const std::string& key) const;

    bool is_known(const std::string& key) const;
    const std::map<std::string, std::string>& entries() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

std::vector<std::string> split_list(const std::string& text, char sep = ',');

}  // namespace likcli
