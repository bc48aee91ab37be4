#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace likcli {

// Thrown by commands; main turns it into the exit code.
// 0 success, 1 IO/usage, 2 typed algorithmic failure.
struct CmdError {
    int exit_code;
    std::string message;
};

int cmd_generate(const Config& cfg, const std::string& out_dir, const std::string& role);
int cmd_estimate_k(const Config& cfg, const std::string& panel_dir, const std::string& out_dir);
int cmd_fit_g(const Config& cfg, const std::string& panel_dir, const std::string& k_hat_spec,
              const std::string& method, const std::string& out_dir);
int cmd_predict(const Config& cfg, const std::string& panel_dir, const std::string& model_path,
                const std::string& k_hat_spec, const std::string& method,
                const std::string& out_path);
int cmd_evaluate(const Config& cfg, const std::string& y_path, const std::string& y_hat_path,
                 const std::string& weights_path, const std::string& out_dir);
int cmd_consolidate(const std::vector<std::string>& forecast_paths,
                    const std::vector<double>& tstats, const std::string& out_path);
int cmd_sweep(const Config& cfg, const std::string& stage, const std::string& axis,
              const std::vector<std::string>& values, std::int64_t seeds,
              const std::string& out_path);

}  // namespace likcli
