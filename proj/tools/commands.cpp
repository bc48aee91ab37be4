#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "handles.hpp"

namespace likcli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(lik_status st) {
    switch (st) {
        case LIK_ERR_IO:
        case LIK_ERR_USAGE:
        case LIK_ERR_INVALID_DIMENSION:
        case LIK_ERR_INVALID_ARGUMENT:
        case LIK_ERR_INVALID_WEIGHT:
        case LIK_ERR_INSUFFICIENT_DATA:
            return 1;
        default:
            return 2;
    }
}

void check(lik_status st) {
    if (st == LIK_OK) return;
    throw CmdError{exit_code_for(st),
                   std::string(lik_status_name(st)) + ": " + lik_last_error()};
}

[[noreturn]] void usage(const std::string& msg) { throw CmdError{1, "usage-error: " + msg}; }
[[noreturn]] void io_fail(const std::string& msg) { throw CmdError{1, "io-error: " + msg}; }

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

MatrixHandle read_matrix(const std::string& path) {
    lik_matrix* m = nullptr;
    check(lik_matrix_read_csv(path.c_str(), &m));
    return MatrixHandle(m);
}

void write_matrix(const lik_matrix* m, const std::string& path) {
    check(lik_matrix_write_csv(m, path.c_str()));
}

// Panel seeds derive from the config seed; the test role uses a shifted
// stream so train/test share the latent model but not the draws.
std::uint64_t role_seed(std::uint64_t seed, const std::string& role) {
    if (role == "train") return seed;
    if (role == "test") return seed ^ 0x7465737470616e65ULL;
    usage("role must be train or test, got '" + role + "'");
}

ModelHandle build_model(const Config& cfg) {
    const auto d = cfg.get_int("model.d");
    const auto r = cfg.get_int("model.r");
    lik_model* model = nullptr;
    check(lik_model_create(d, r, cfg.get("model.kernel").c_str(), cfg.get("model.g").c_str(),
                           cfg.get_real("model.sigma_xi"), cfg.get_seed("data.seed"), &model));
    return ModelHandle(model);
}

PanelHandle load_panel_dir(const std::string& dir) {
    lik_panel* panel = nullptr;
    check(lik_panel_load(dir.c_str(), &panel));
    return PanelHandle(panel);
}

std::vector<MatrixHandle> panel_slices(const lik_panel* panel) {
    std::vector<MatrixHandle> slices;
    for (std::int64_t f = 0; f < lik_panel_k(panel); ++f) {
        lik_matrix* x = nullptr;
        check(lik_panel_x(panel, f, &x));
        slices.emplace_back(x);
    }
    return slices;
}

std::vector<const lik_matrix*> raw(const std::vector<MatrixHandle>& slices) {
    std::vector<const lik_matrix*> out;
    out.reserve(slices.size());
    for (const auto& s : slices) out.push_back(s.get());
    return out;
}

MatrixHandle resolve_k_hat(const std::string& spec, std::int64_t d) {
    if (spec == "identity") {
        lik_matrix* eye = nullptr;
        check(lik_matrix_identity(d, &eye));
        return MatrixHandle(eye);
    }
    auto k_hat = read_matrix(spec);
    if (lik_matrix_rows(k_hat.get()) != d || lik_matrix_cols(k_hat.get()) != d)
        usage("K_hat at " + spec + " is not " + std::to_string(d) + "x" + std::to_string(d));
    return k_hat;
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) io_fail("cannot create " + dir + ": " + ec.message());
}

void write_report_csv(const lik_eval_report* report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) io_fail("cannot open " + path);
    out << "corr," << g17(lik_eval_report_corr(report)) << "\n";
    out << "w_corr," << g17(lik_eval_report_w_corr(report)) << "\n";
    out << "t_stat," << g17(lik_eval_report_t_stat(report)) << "\n";
    out << "w_t_stat," << g17(lik_eval_report_w_t_stat(report)) << "\n";
    out << "pnl_total," << g17(lik_eval_report_pnl_total(report)) << "\n";
    out << "sharpe," << g17(lik_eval_report_sharpe(report)) << "\n";
    out << "n_days," << lik_eval_report_n_days(report) << "\n";
    if (!out) io_fail("failed writing " + path);
}

void write_pnl_csv(const lik_eval_report* report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) io_fail("cannot open " + path);
    out << "day,pnl,cumulative\n";
    double cumulative = 0.0;
    for (std::int64_t t = 0; t < lik_eval_report_n_days(report); ++t) {
        const double pnl = lik_eval_report_pnl_day(report, t);
        cumulative += pnl;
        out << t << "," << g17(pnl) << "," << g17(cumulative) << "\n";
    }
    if (!out) io_fail("failed writing " + path);
}

ReportHandle run_evaluate(const Config& cfg, const lik_matrix* y, const lik_matrix* y_hat,
                          const lik_matrix* weights) {
    lik_eval_report* report = nullptr;
    check(lik_evaluate(y, y_hat, weights, cfg.get_int("eval.nw_lag"),
                       cfg.get_real("eval.quantile"), cfg.get_real("eval.annualization"),
                       &report));
    return ReportHandle(report);
}

// Calibration sample for the partition: every feature value of the panel.
MatrixHandle calibration_matrix(const std::vector<MatrixHandle>& slices) {
    const auto n = lik_matrix_rows(slices.front().get());
    const auto d = lik_matrix_cols(slices.front().get());
    const auto k = static_cast<std::int64_t>(slices.size());
    lik_matrix* calib = nullptr;
    check(lik_matrix_create(n * d, k, &calib));
    MatrixHandle out(calib);
    for (std::int64_t f = 0; f < k; ++f)
        for (std::int64_t t = 0; t < n; ++t)
            for (std::int64_t i = 0; i < d; ++i)
                check(lik_matrix_set(out.get(), t * d + i, f,
                                     lik_matrix_get(slices[std::size_t(f)].get(), t, i)));
    return out;
}

struct NparamFit {
    PiecewiseHandle g;
    double c_used = 0.0;
};

// Halve c (up to 4 times) while any cell comes back empty; keep the first
// attempt where every cell found signal, else the last attempt.
NparamFit fit_nparam(const Config& cfg, const std::vector<MatrixHandle>& slices,
                     const lik_matrix* y, const lik_matrix* k_hat) {
    const auto ell = cfg.get_int("gest.ell");
    auto calib = calibration_matrix(slices);
    lik_partition* part_raw = nullptr;
    check(lik_partition_build(calib.get(), ell, &part_raw));
    PartitionHandle partition(part_raw);

    double c = cfg.get_real("gest.c");
    const auto seed = cfg.get_seed("data.seed");
    auto x_raw = raw(slices);
    NparamFit best;
    for (int attempt = 0; attempt <= 4; ++attempt) {
        lik_piecewise_g* fit = nullptr;
        check(lik_estimate_g(x_raw.data(), static_cast<std::int64_t>(x_raw.size()), y, k_hat,
                             partition.get(), c, seed, &fit));
        best = NparamFit{PiecewiseHandle(fit), c};
        bool all_used = true;
        for (std::int64_t j = 0; j < lik_piecewise_g_cells(fit); ++j)
            if (lik_piecewise_g_n_used(fit, j) == 0) all_used = false;
        if (all_used) return best;
        c *= 0.5;
    }
    bool any_used = false;
    for (std::int64_t j = 0; j < lik_piecewise_g_cells(best.g.get()); ++j)
        if (lik_piecewise_g_n_used(best.g.get(), j) > 0) any_used = true;
    if (!any_used)
        throw CmdError{2, "no-signal: every cell stayed empty after halving c 4 times"};
    return best;
}

}  // namespace

int cmd_generate(const Config& cfg, const std::string& out_dir, const std::string& role) {
    auto model = build_model(cfg);
    const auto n = role == "test" ? cfg.get_int("data.n_test") : cfg.get_int("data.n_train");
    if (n < 1) usage("panel size for role '" + role + "' must be >= 1 (got " +
                     std::to_string(n) + ")");
    lik_panel* panel_raw = nullptr;
    check(lik_panel_generate(model.get(), n, cfg.get_int("data.k"),
                             role_seed(cfg.get_seed("data.seed"), role), &panel_raw));
    PanelHandle panel(panel_raw);
    ensure_dir(out_dir);
    check(lik_panel_save(panel.get(), model.get(), out_dir.c_str()));
    std::cout << "wrote panel (" << lik_panel_n(panel.get()) << "x" << lik_panel_d(panel.get())
              << ", k=" << lik_panel_k(panel.get()) << ") to " << out_dir << "\n";
    return 0;
}

int cmd_estimate_k(const Config& cfg, const std::string& panel_dir, const std::string& out_dir) {
    auto y = read_matrix(panel_dir + "/Y.csv");
    ensure_dir(out_dir);

    GramHandle estimate;
    const std::string hints = cfg.get("kestim.hints");
    if (!hints.empty()) {
        std::vector<MatrixHandle> matrices;
        std::vector<const lik_matrix*> ptrs;
        for (const auto& path : split_list(hints)) {
            matrices.push_back(read_matrix(path));
            ptrs.push_back(matrices.back().get());
        }
        std::vector<double> betas;
        for (const auto& b : split_list(cfg.get("kestim.betas"))) betas.push_back(std::stod(b));
        if (betas.size() != ptrs.size())
            usage("kestim.betas must list one value per hint matrix");
        lik_gram_estimate* est = nullptr;
        check(lik_hint_consolidate(ptrs.data(), betas.data(),
                                   static_cast<std::int64_t>(ptrs.size()),
                                   cfg.get_int("kestim.exponentiate") ? 1 : 0, &est));
        estimate.reset(est);
    } else if (cfg.get("kestim.delta") == "auto") {
        lik_gram_estimate* est = nullptr;
        check(lik_estimate_k_auto(y.get(), &est));
        estimate.reset(est);
    } else {
        lik_gram_estimate* est = nullptr;
        check(lik_estimate_k_dd(y.get(), cfg.get_real("kestim.delta"), &est));
        estimate.reset(est);
    }

    lik_matrix* k_hat = nullptr;
    check(lik_gram_estimate_matrix(estimate.get(), &k_hat));
    MatrixHandle k_hat_h(k_hat);
    write_matrix(k_hat_h.get(), out_dir + "/K_hat.csv");

    lik_matrix* evals = nullptr;
    check(lik_gram_estimate_eigenvalues(estimate.get(), &evals));
    MatrixHandle evals_h(evals);
    std::ofstream spectrum(out_dir + "/spectrum.csv", std::ios::binary);
    if (!spectrum) io_fail("cannot open " + out_dir + "/spectrum.csv");
    for (std::int64_t i = 0; i < lik_matrix_rows(evals_h.get()); ++i)
        spectrum << i << "," << g17(lik_matrix_get(evals_h.get(), i, 0)) << "\n";

    std::cout << "i*=" << lik_gram_estimate_rank(estimate.get())
              << " delta=" << g17(lik_gram_estimate_delta(estimate.get())) << "\n";
    return 0;
}

int cmd_fit_g(const Config& cfg, const std::string& panel_dir, const std::string& k_hat_spec,
              const std::string& method, const std::string& out_dir) {
    auto panel = load_panel_dir(panel_dir);
    auto slices = panel_slices(panel.get());
    lik_matrix* y_raw = nullptr;
    check(lik_panel_y(panel.get(), &y_raw));
    MatrixHandle y(y_raw);
    auto k_hat = resolve_k_hat(k_hat_spec, lik_panel_d(panel.get()));
    ensure_dir(out_dir);

    MatrixHandle y_hat;
    if (method == "nparam") {
        auto fit = fit_nparam(cfg, slices, y.get(), k_hat.get());
        check(lik_piecewise_g_save(fit.g.get(), (out_dir + "/g_hat.csv").c_str()));
        auto x_raw = raw(slices);
        lik_matrix* pred = nullptr;
        check(lik_piecewise_g_predict(fit.g.get(), x_raw.data(),
                                      static_cast<std::int64_t>(x_raw.size()), k_hat.get(),
                                      &pred));
        y_hat.reset(pred);
        std::cout << "nparam fit: ell=" << lik_piecewise_g_cells(fit.g.get())
                  << " c=" << g17(fit.c_used) << "\n";
    } else if (method == "pvel" || method == "linear") {
        const bool plain = method == "linear";
        const double eta = plain ? 1.0 : cfg.get_real("pvel.eta");
        const auto rounds = plain ? 1 : cfg.get_int("pvel.rounds");
        auto x_raw = raw(slices);
        lik_boosted_model* model_raw = nullptr;
        check(lik_boost_fit(y.get(), x_raw.data(), static_cast<std::int64_t>(x_raw.size()),
                            k_hat.get(), eta, rounds, plain ? 0 : 1, &model_raw));
        BoostHandle model(model_raw);
        const std::string model_path = out_dir + "/model_" + method + ".csv";
        check(lik_boosted_model_save(model.get(), model_path.c_str()));

        std::ofstream log(out_dir + "/" + method + "_log.csv", std::ios::binary);
        if (!log) io_fail("cannot open fit log in " + out_dir);
        log << "round,mse\n";
        for (std::int64_t m = 0; m < lik_boosted_model_rounds(model.get()); ++m)
            log << m << "," << g17(lik_boosted_model_mse(model.get(), m)) << "\n";

        lik_matrix* pred = nullptr;
        check(lik_boost_predict(model.get(), x_raw.data(),
                                static_cast<std::int64_t>(x_raw.size()), k_hat.get(), &pred));
        y_hat.reset(pred);
        std::cout << method << " fit: rounds=" << lik_boosted_model_rounds(model.get())
                  << " eta=" << g17(eta) << "\n";
    } else {
        usage("method must be nparam, pvel or linear (got '" + method + "')");
    }

    auto report = run_evaluate(cfg, y.get(), y_hat.get(), nullptr);
    write_report_csv(report.get(), out_dir + "/report.csv");
    std::cout << "in-sample corr=" << g17(lik_eval_report_corr(report.get()))
              << " t_stat=" << g17(lik_eval_report_t_stat(report.get())) << "\n";
    return 0;
}

int cmd_predict(const Config& cfg, const std::string& panel_dir, const std::string& model_path,
                const std::string& k_hat_spec, const std::string& method,
                const std::string& out_path) {
    (void)cfg;
    auto panel = load_panel_dir(panel_dir);
    auto slices = panel_slices(panel.get());
    auto x_raw = raw(slices);
    auto k_hat = resolve_k_hat(k_hat_spec, lik_panel_d(panel.get()));

    MatrixHandle y_hat;
    if (method == "nparam") {
        lik_piecewise_g* g = nullptr;
        check(lik_piecewise_g_load(model_path.c_str(), &g));
        PiecewiseHandle fit(g);
        lik_matrix* pred = nullptr;
        check(lik_piecewise_g_predict(fit.get(), x_raw.data(),
                                      static_cast<std::int64_t>(x_raw.size()), k_hat.get(),
                                      &pred));
        y_hat.reset(pred);
    } else if (method == "pvel" || method == "linear") {
        lik_boosted_model* model = nullptr;
        check(lik_boosted_model_load(model_path.c_str(), &model));
        BoostHandle fit(model);
        lik_matrix* pred = nullptr;
        check(lik_boost_predict(fit.get(), x_raw.data(),
                                static_cast<std::int64_t>(x_raw.size()), k_hat.get(), &pred));
        y_hat.reset(pred);
    } else {
        usage("method must be nparam, pvel or linear (got '" + method + "')");
    }
    write_matrix(y_hat.get(), out_path);
    std::cout << "wrote forecast to " << out_path << "\n";
    return 0;
}

int cmd_evaluate(const Config& cfg, const std::string& y_path, const std::string& y_hat_path,
                 const std::string& weights_path, const std::string& out_dir) {
    auto y = read_matrix(y_path);
    auto y_hat = read_matrix(y_hat_path);
    MatrixHandle weights;
    if (!weights_path.empty()) weights = read_matrix(weights_path);
    auto report = run_evaluate(cfg, y.get(), y_hat.get(), weights.get());
    ensure_dir(out_dir);
    write_report_csv(report.get(), out_dir + "/report.csv");
    write_pnl_csv(report.get(), out_dir + "/pnl.csv");
    std::cout << "corr=" << g17(lik_eval_report_corr(report.get()))
              << " t_stat=" << g17(lik_eval_report_t_stat(report.get()))
              << " sharpe=" << g17(lik_eval_report_sharpe(report.get())) << "\n";
    return 0;
}

int cmd_consolidate(const std::vector<std::string>& forecast_paths,
                    const std::vector<double>& tstats, const std::string& out_path) {
    if (forecast_paths.empty()) usage("consolidate needs at least one forecast file");
    if (forecast_paths.size() != tstats.size())
        usage("consolidate needs one t-stat per forecast file");
    std::vector<MatrixHandle> matrices;
    std::vector<const lik_matrix*> ptrs;
    for (const auto& path : forecast_paths) {
        matrices.push_back(read_matrix(path));
        ptrs.push_back(matrices.back().get());
    }
    lik_matrix* blended = nullptr;
    check(lik_consolidate(ptrs.data(), tstats.data(),
                          static_cast<std::int64_t>(ptrs.size()), &blended));
    MatrixHandle out(blended);
    write_matrix(out.get(), out_path);
    std::cout << "wrote consolidated forecast to " << out_path << "\n";
    return 0;
}

namespace {

struct SweepPoint {
    double value = 0.0;
    std::vector<double> metrics;
};

// One pipeline run per (axis value, seed); metrics averaged over the fixed
// seed list. Stages: kestim -> gram_error, cov_error; gest -> sup_error;
// pvel -> oos_corr, nw_t.
SweepPoint sweep_point(const Config& base, const std::string& stage, const std::string& axis,
                       const std::string& value, std::int64_t seeds) {
    SweepPoint point;
    point.value = std::stod(value);
    std::vector<double> acc;

    for (std::int64_t s = 0; s < seeds; ++s) {
        Config cfg = base;
        cfg.set(axis, value);
        cfg.set("data.seed", std::to_string(base.get_seed("data.seed") + std::uint64_t(s)));

        auto model = build_model(cfg);
        lik_matrix* k_true_raw = nullptr;
        check(lik_model_gram(model.get(), &k_true_raw));
        MatrixHandle k_true(k_true_raw);

        lik_panel* train_raw = nullptr;
        check(lik_panel_generate(model.get(), cfg.get_int("data.n_train"),
                                 cfg.get_int("data.k"),
                                 role_seed(cfg.get_seed("data.seed"), "train"), &train_raw));
        PanelHandle train(train_raw);
        lik_matrix* y_raw = nullptr;
        check(lik_panel_y(train.get(), &y_raw));
        MatrixHandle y(y_raw);

        if (stage == "kestim") {
            lik_gram_estimate* est = nullptr;
            check(lik_estimate_k_auto(y.get(), &est));
            GramHandle estimate(est);
            lik_matrix* k_hat = nullptr;
            check(lik_gram_estimate_matrix(estimate.get(), &k_hat));
            MatrixHandle k_hat_h(k_hat);
            double err = 0.0;
            check(lik_gram_error(k_hat_h.get(), k_true.get(), &err));

            lik_matrix* target = nullptr;
            check(lik_covariance_target(y.get(), &target));
            MatrixHandle target_h(target);
            const auto d = lik_matrix_rows(k_true.get());
            double cov_err = 0.0;
            for (std::int64_t i = 0; i < d; ++i)
                for (std::int64_t j = 0; j < d; ++j) {
                    double k2 = 0.0;
                    for (std::int64_t m = 0; m < d; ++m)
                        k2 += lik_matrix_get(k_true.get(), i, m) *
                              lik_matrix_get(k_true.get(), m, j);
                    const double diff = lik_matrix_get(target_h.get(), i, j) - k2;
                    cov_err += diff * diff;
                }
            cov_err = std::sqrt(cov_err) / (double(d) * double(d));
            if (acc.empty()) acc.assign(2, 0.0);
            acc[0] += err;
            acc[1] += cov_err;
        } else if (stage == "gest") {
            auto slices = panel_slices(train.get());
            auto x_raw = raw(slices);
            auto fit = fit_nparam(cfg, slices, y.get(), k_true.get());
            // sup error vs the model's own cell means, Monte-Carlo per cell
            const auto ell = lik_piecewise_g_cells(fit.g.get());
            double sup = 0.0;
            // k = 1 sweep only: reconstruct cell edges from the saved format
            const std::string tmp = "sweep_gest_cells.csv";
            check(lik_piecewise_g_save(fit.g.get(), tmp.c_str()));
            auto cells = read_matrix(tmp);
            std::remove(tmp.c_str());
            for (std::int64_t j = 0; j < ell; ++j) {
                const double lo = lik_matrix_get(cells.get(), j, 1);
                const double hi = lik_matrix_get(cells.get(), j, 2);
                double mean = 0.0;
                const int draws = 20000;
                for (int i = 0; i < draws; ++i) {
                    const double xv = lo + (hi - lo) * (double(i) + 0.5) / double(draws);
                    double gv = 0.0;
                    check(lik_model_signal_eval(model.get(), &xv, 1, &gv));
                    mean += gv;
                }
                mean /= double(draws);
                sup = std::max(sup, std::abs(lik_matrix_get(cells.get(), j, 3) - mean));
            }
            if (acc.empty()) acc.assign(1, 0.0);
            acc[0] += sup;
        } else if (stage == "pvel") {
            lik_panel* test_raw = nullptr;
            check(lik_panel_generate(model.get(), cfg.get_int("data.n_test"),
                                     cfg.get_int("data.k"),
                                     role_seed(cfg.get_seed("data.seed"), "test"), &test_raw));
            PanelHandle test(test_raw);

            lik_gram_estimate* est = nullptr;
            check(lik_estimate_k_auto(y.get(), &est));
            GramHandle estimate(est);
            lik_matrix* k_hat = nullptr;
            check(lik_gram_estimate_matrix(estimate.get(), &k_hat));
            MatrixHandle k_hat_h(k_hat);

            auto slices = panel_slices(train.get());
            auto x_raw = raw(slices);
            lik_boosted_model* fit_raw = nullptr;
            check(lik_boost_fit(y.get(), x_raw.data(),
                                static_cast<std::int64_t>(x_raw.size()), k_hat_h.get(),
                                cfg.get_real("pvel.eta"), cfg.get_int("pvel.rounds"), 1,
                                &fit_raw));
            BoostHandle fit(fit_raw);

            auto test_slices = panel_slices(test.get());
            auto test_raw_ptrs = raw(test_slices);
            lik_matrix* pred = nullptr;
            check(lik_boost_predict(fit.get(), test_raw_ptrs.data(),
                                    static_cast<std::int64_t>(test_raw_ptrs.size()),
                                    k_hat_h.get(), &pred));
            MatrixHandle y_hat(pred);
            lik_matrix* y_test_raw = nullptr;
            check(lik_panel_y(test.get(), &y_test_raw));
            MatrixHandle y_test(y_test_raw);

            auto report = run_evaluate(cfg, y_test.get(), y_hat.get(), nullptr);
            if (acc.empty()) acc.assign(2, 0.0);
            acc[0] += lik_eval_report_corr(report.get());
            acc[1] += lik_eval_report_t_stat(report.get());
        } else {
            usage("sweep stage must be kestim, gest or pvel (got '" + stage + "')");
        }
    }
    for (double& v : acc) v /= double(seeds);
    point.metrics = std::move(acc);
    return point;
}

}  // namespace

int cmd_sweep(const Config& cfg, const std::string& stage, const std::string& axis,
              const std::vector<std::string>& values, std::int64_t seeds,
              const std::string& out_path) {
    if (values.empty()) usage("sweep needs a non-empty --values list");
    if (seeds < 1) usage("sweep needs --seeds >= 1");
    if (!cfg.is_known(axis)) usage("unknown sweep axis '" + axis + "'");

    std::vector<SweepPoint> points;
    for (const auto& value : values)
        points.push_back(sweep_point(cfg, stage, axis, value, seeds));

    std::ofstream out(out_path, std::ios::binary);
    if (!out) io_fail("cannot open " + out_path);
    if (stage == "kestim") out << "value,gram_error,cov_error\n";
    else if (stage == "gest") out << "value,sup_error\n";
    else out << "value,oos_corr,nw_t\n";
    for (const auto& p : points) {
        out << g17(p.value);
        for (double m : p.metrics) out << "," << g17(m);
        out << "\n";
    }
    std::cout << "wrote " << points.size() << " sweep rows to " << out_path << "\n";
    return 0;
}

}  // namespace likcli
