#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"

namespace {

using likcli::CmdError;
using likcli::Config;

// Flags mirror config keys; a flag set on the command line overrides the
// config file value.
struct Overrides {
    std::map<std::string, std::string> values;

    void add(CLI::App* app, const std::string& flag, const std::string& key,
             const std::string& help) {
        app->add_option_function<std::string>(
            flag, [this, key](const std::string& v) { values[key] = v; }, help);
    }

    void apply(Config& cfg) const {
        for (const auto& [key, value] : values) cfg.set(key, value);
    }
};

Config resolve_config(const std::string& path, const Overrides& overrides) {
    Config cfg = path.empty() ? Config::defaults() : Config::load(path);
    overrides.apply(cfg);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lik — latent influence kernel toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value config file")->expected(1);

    Overrides overrides;
    std::string out = "out";
    std::string panel_dir;
    std::string role = "train";
    std::string k_hat_spec = "identity";
    std::string method = "pvel";
    std::string model_path;
    std::string y_path, y_hat_path, weights_path;
    std::string inputs_list, tstats_list;
    std::string stage = "kestim", axis = "data.n_train", values_list;
    std::int64_t sweep_seeds = 5;

    auto add_model_flags = [&](CLI::App* cmd) {
        overrides.add(cmd, "--d", "model.d", "entity count");
        overrides.add(cmd, "--r", "model.r", "latent dimension");
        overrides.add(cmd, "--kernel", "model.kernel", "kernel spec");
        overrides.add(cmd, "--g", "model.g", "signal spec");
        overrides.add(cmd, "--sigma-xi", "model.sigma_xi", "noise std-dev");
        overrides.add(cmd, "--n", "data.n_train", "training days");
        overrides.add(cmd, "--n-test", "data.n_test", "test days");
        overrides.add(cmd, "--k", "data.k", "feature dimension");
        overrides.add(cmd, "--seed", "data.seed", "RNG seed");
    };

    auto* generate = app.add_subcommand("generate", "write a synthetic panel directory");
    generate->fallthrough();
    add_model_flags(generate);
    generate->add_option("--out", out, "output directory");
    generate->add_option("--role", role, "train|test (picks n and the panel stream)");

    auto* estimate = app.add_subcommand("estimate-k", "estimate K from Y.csv");
    estimate->fallthrough();
    estimate->add_option("--panel", panel_dir, "panel directory")->required();
    estimate->add_option("--out", out, "output directory");
    overrides.add(estimate, "--delta", "kestim.delta", "gap parameter or 'auto'");
    overrides.add(estimate, "--hints", "kestim.hints", "comma-separated hint matrix paths");
    overrides.add(estimate, "--betas", "kestim.betas", "comma-separated hint coefficients");
    overrides.add(estimate, "--exponentiate", "kestim.exponentiate",
                  "1 = entrywise exp of the hint combination");

    auto* fit = app.add_subcommand("fit-g", "fit a signal model on a panel");
    fit->fallthrough();
    fit->add_option("--panel", panel_dir, "panel directory")->required();
    fit->add_option("--k-hat", k_hat_spec, "K_hat.csv path or 'identity'");
    fit->add_option("--method", method, "nparam|pvel|linear");
    fit->add_option("--out", out, "output directory");
    overrides.add(fit, "--ell", "gest.ell", "partition cells");
    overrides.add(fit, "--c", "gest.c", "flip-sign threshold constant");
    overrides.add(fit, "--eta", "pvel.eta", "boosting learning rate");
    overrides.add(fit, "--rounds", "pvel.rounds", "boosting rounds");
    overrides.add(fit, "--seed", "data.seed", "RNG seed");
    overrides.add(fit, "--nw-lag", "eval.nw_lag", "Newey-West lag for the in-sample report");

    auto* predict = app.add_subcommand("predict", "forecast a panel with a fitted model");
    predict->fallthrough();
    predict->add_option("--panel", panel_dir, "panel directory")->required();
    predict->add_option("--model", model_path, "model file")->required();
    predict->add_option("--method", method, "nparam|pvel|linear");
    predict->add_option("--k-hat", k_hat_spec, "K_hat.csv path or 'identity'");
    predict->add_option("--out", out, "output forecast CSV path");

    auto* evaluate = app.add_subcommand("evaluate", "score a forecast against realized Y");
    evaluate->fallthrough();
    evaluate->add_option("--y", y_path, "realized matrix CSV")->required();
    evaluate->add_option("--yhat", y_hat_path, "forecast matrix CSV")->required();
    evaluate->add_option("--weights", weights_path, "positive weights CSV");
    evaluate->add_option("--out", out, "output directory");
    overrides.add(evaluate, "--nw-lag", "eval.nw_lag", "Newey-West lag");
    overrides.add(evaluate, "--quantile", "eval.quantile", "PnL selection quantile");
    overrides.add(evaluate, "--annualization", "eval.annualization", "Sharpe annualization");

    auto* consolidate = app.add_subcommand("consolidate", "t-stat weighted forecast blend");
    consolidate->fallthrough();
    consolidate->add_option("--inputs", inputs_list, "comma-separated forecast CSVs")
        ->required();
    consolidate->add_option("--tstats", tstats_list, "comma-separated in-sample t-stats")
        ->required();
    consolidate->add_option("--out", out, "output CSV path");

    auto* sweep = app.add_subcommand("sweep", "re-run a stage across one config axis");
    sweep->fallthrough();
    add_model_flags(sweep);
    sweep->add_option("--stage", stage, "kestim|gest|pvel");
    sweep->add_option("--axis", axis, "config key to vary");
    sweep->add_option("--values", values_list, "comma-separated axis values")->required();
    sweep->add_option("--seeds", sweep_seeds, "seeds per value");
    sweep->add_option("--out", out, "output CSV path");
    overrides.add(sweep, "--ell", "gest.ell", "partition cells");
    overrides.add(sweep, "--c", "gest.c", "flip-sign threshold constant");
    overrides.add(sweep, "--eta", "pvel.eta", "boosting learning rate");
    overrides.add(sweep, "--rounds", "pvel.rounds", "boosting rounds");

    CLI11_PARSE(app, argc, argv);

    try {
        const Config cfg = resolve_config(config_path, overrides);
        if (generate->parsed()) return likcli::cmd_generate(cfg, out, role);
        if (estimate->parsed()) return likcli::cmd_estimate_k(cfg, panel_dir, out);
        if (fit->parsed()) return likcli::cmd_fit_g(cfg, panel_dir, k_hat_spec, method, out);
        if (predict->parsed())
            return likcli::cmd_predict(cfg, panel_dir, model_path, k_hat_spec, method, out);
        if (evaluate->parsed())
            return likcli::cmd_evaluate(cfg, y_path, y_hat_path, weights_path, out);
        if (consolidate->parsed()) {
            std::vector<double> tstats;
            for (const auto& t : likcli::split_list(tstats_list)) tstats.push_back(std::stod(t));
            return likcli::cmd_consolidate(likcli::split_list(inputs_list), tstats, out);
        }
        if (sweep->parsed())
            return likcli::cmd_sweep(cfg, stage, axis, likcli::split_list(values_list),
                                     sweep_seeds, out);
    } catch (const CmdError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        // Config::load/set raise plain runtime_errors tagged usage-error/io-error.
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
