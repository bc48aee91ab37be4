#include "lik.h"

#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "lik/evalkit.hpp"
#include "lik/gest.hpp"
#include "lik/io.hpp"
#include "lik/kestim.hpp"
#include "lik/pvel.hpp"
#include "lik/synth.hpp"

using lik::Matrix;

struct lik_matrix {
    Matrix m;
};
struct lik_model {
    lik::LatentModel m;
};
struct lik_panel {
    lik::PanelData p;
};
struct lik_gram_estimate {
    lik::GramEstimate e;
};
struct lik_partition {
    lik::PartitionSpec p;
};
struct lik_piecewise_g {
    lik::PiecewiseG g;
};
struct lik_boosted_model {
    lik::BoostedModel m;
    std::vector<double> mse;
};
struct lik_eval_report {
    lik::EvalReport r;
};

namespace {

thread_local std::string g_last_error;

lik_status set_error(const std::exception& e, lik_status code) {
    g_last_error = e.what();
    return code;
}

lik_status map_status(lik::Status s) { return static_cast<lik_status>(s); }

template <typename Fn>
lik_status guarded(Fn&& fn) {
    try {
        fn();
        return LIK_OK;
    } catch (const lik::Error& e) {
        return set_error(e, map_status(e.status()));
    } catch (const std::bad_alloc& e) {
        return set_error(e, LIK_ERR_NUMERIC);
    } catch (const std::exception& e) {
        return set_error(e, LIK_ERR_INVALID_ARGUMENT);
    }
}

std::vector<Matrix> collect_slices(const lik_matrix* const* x_slices, int64_t k) {
    std::vector<Matrix> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int64_t f = 0; f < k; ++f) {
        if (!x_slices[f]) lik::fail(lik::Status::invalid_argument, "null feature slice");
        out.push_back(x_slices[f]->m);
    }
    return out;
}

}  // namespace

extern "C" {

const char* lik_status_name(lik_status s) {
    return lik::status_name(static_cast<lik::Status>(s));
}

const char* lik_last_error(void) { return g_last_error.c_str(); }

/* matrix ------------------------------------------------------------------ */

lik_status lik_matrix_create(int64_t rows, int64_t cols, lik_matrix** out) {
    return guarded([&] {
        if (rows < 1 || cols < 1)
            lik::fail(lik::Status::invalid_dimension, "matrix dimensions must be >= 1");
        *out = new lik_matrix{Matrix::Zero(rows, cols)};
    });
}

lik_status lik_matrix_from_data(const double* row_major, int64_t rows, int64_t cols,
                                lik_matrix** out) {
    return guarded([&] {
        if (!row_major) lik::fail(lik::Status::invalid_argument, "null data pointer");
        if (rows < 1 || cols < 1)
            lik::fail(lik::Status::invalid_dimension, "matrix dimensions must be >= 1");
        Matrix m(rows, cols);
        for (int64_t r = 0; r < rows; ++r)
            for (int64_t c = 0; c < cols; ++c) m(r, c) = row_major[r * cols + c];
        *out = new lik_matrix{std::move(m)};
    });
}

lik_status lik_matrix_identity(int64_t dim, lik_matrix** out) {
    return guarded([&] {
        if (dim < 1) lik::fail(lik::Status::invalid_dimension, "identity needs dim >= 1");
        *out = new lik_matrix{Matrix::Identity(dim, dim)};
    });
}

lik_status lik_matrix_clone(const lik_matrix* m, lik_matrix** out) {
    return guarded([&] {
        if (!m) lik::fail(lik::Status::invalid_argument, "null matrix");
        *out = new lik_matrix{m->m};
    });
}

void lik_matrix_destroy(lik_matrix* m) { delete m; }
int64_t lik_matrix_rows(const lik_matrix* m) { return m ? m->m.rows() : 0; }
int64_t lik_matrix_cols(const lik_matrix* m) { return m ? m->m.cols() : 0; }

double lik_matrix_get(const lik_matrix* m, int64_t row, int64_t col) {
    return m->m(row, col);
}

lik_status lik_matrix_set(lik_matrix* m, int64_t row, int64_t col, double value) {
    return guarded([&] {
        if (!m) lik::fail(lik::Status::invalid_argument, "null matrix");
        if (row < 0 || row >= m->m.rows() || col < 0 || col >= m->m.cols())
            lik::fail(lik::Status::invalid_dimension, "matrix index out of range");
        m->m(row, col) = value;
    });
}

lik_status lik_matrix_read_csv(const char* path, lik_matrix** out) {
    return guarded([&] { *out = new lik_matrix{lik::read_csv(path)}; });
}

lik_status lik_matrix_write_csv(const lik_matrix* m, const char* path) {
    return guarded([&] {
        if (!m) lik::fail(lik::Status::invalid_argument, "null matrix");
        lik::write_csv(m->m, path);
    });
}

/* generator ---------------------------------------------------------------- */

lik_status lik_model_create(int64_t d, int64_t r, const char* kernel_spec, const char* g_spec,
                            double sigma_xi, uint64_t seed, lik_model** out) {
    return guarded([&] {
        *out = new lik_model{lik::make_latent_model(d, r, lik::KernelSpec::parse(kernel_spec),
                                                    lik::SignalFn::parse(g_spec), sigma_xi,
                                                    seed)};
    });
}

void lik_model_destroy(lik_model* m) { delete m; }

lik_status lik_model_gram(const lik_model* m, lik_matrix** k_true) {
    return guarded([&] {
        if (!m) lik::fail(lik::Status::invalid_argument, "null model");
        *k_true = new lik_matrix{lik::gram_matrix(m->m.z, m->m.kernel)};
    });
}

lik_status lik_model_signal_eval(const lik_model* m, const double* x, int64_t k, double* out) {
    return guarded([&] {
        if (!m || !x || !out) lik::fail(lik::Status::invalid_argument, "null argument");
        lik::Vector v(k);
        for (int64_t i = 0; i < k; ++i) v[i] = x[i];
        *out = m->m.g_true.eval(v);
    });
}

lik_status lik_panel_generate(const lik_model* m, int64_t n, int64_t k, uint64_t seed,
                              lik_panel** out) {
    return guarded([&] {
        if (!m) lik::fail(lik::Status::invalid_argument, "null model");
        *out = new lik_panel{lik::generate_panel(m->m, n, k, seed)};
    });
}

void lik_panel_destroy(lik_panel* p) { delete p; }
int64_t lik_panel_n(const lik_panel* p) { return p ? p->p.n : 0; }
int64_t lik_panel_d(const lik_panel* p) { return p ? p->p.d : 0; }
int64_t lik_panel_k(const lik_panel* p) { return p ? p->p.k : 0; }

lik_status lik_panel_y(const lik_panel* p, lik_matrix** out) {
    return guarded([&] {
        if (!p) lik::fail(lik::Status::invalid_argument, "null panel");
        *out = new lik_matrix{p->p.y};
    });
}

lik_status lik_panel_signal(const lik_panel* p, lik_matrix** out) {
    return guarded([&] {
        if (!p || p->p.s.size() == 0)
            lik::fail(lik::Status::invalid_argument, "panel has no stored signal");
        *out = new lik_matrix{p->p.s};
    });
}

lik_status lik_panel_x(const lik_panel* p, int64_t feature, lik_matrix** out) {
    return guarded([&] {
        if (!p) lik::fail(lik::Status::invalid_argument, "null panel");
        if (feature < 0 || feature >= p->p.k)
            lik::fail(lik::Status::invalid_dimension, "feature index out of range");
        *out = new lik_matrix{p->p.x[static_cast<std::size_t>(feature)]};
    });
}

lik_status lik_panel_save(const lik_panel* p, const lik_model* m, const char* dir) {
    return guarded([&] {
        if (!p || !m) lik::fail(lik::Status::invalid_argument, "null panel/model");
        lik::save_panel(p->p, m->m, dir);
    });
}

lik_status lik_panel_load(const char* dir, lik_panel** out) {
    return guarded([&] { *out = new lik_panel{lik::load_panel(dir).panel}; });
}

/* K estimation -------------------------------------------------------------- */

lik_status lik_covariance_target(const lik_matrix* y, lik_matrix** out) {
    return guarded([&] {
        if (!y) lik::fail(lik::Status::invalid_argument, "null matrix");
        *out = new lik_matrix{lik::covariance_target(y->m)};
    });
}

lik_status lik_estimate_k_dd(const lik_matrix* y, double delta, lik_gram_estimate** out) {
    return guarded([&] {
        if (!y) lik::fail(lik::Status::invalid_argument, "null matrix");
        *out = new lik_gram_estimate{lik::estimate_k_dd(y->m, delta)};
    });
}

lik_status lik_estimate_k_auto(const lik_matrix* y, lik_gram_estimate** out) {
    return guarded([&] {
        if (!y) lik::fail(lik::Status::invalid_argument, "null matrix");
        *out = new lik_gram_estimate{lik::estimate_k_auto(y->m)};
    });
}

void lik_gram_estimate_destroy(lik_gram_estimate* e) { delete e; }

lik_status lik_gram_estimate_matrix(const lik_gram_estimate* e, lik_matrix** k_hat) {
    return guarded([&] {
        if (!e) lik::fail(lik::Status::invalid_argument, "null estimate");
        *k_hat = new lik_matrix{e->e.k_hat};
    });
}

int64_t lik_gram_estimate_rank(const lik_gram_estimate* e) { return e ? e->e.rank_star : 0; }
double lik_gram_estimate_delta(const lik_gram_estimate* e) { return e ? e->e.delta : 0.0; }

lik_status lik_gram_estimate_eigenvalues(const lik_gram_estimate* e, lik_matrix** out) {
    return guarded([&] {
        if (!e) lik::fail(lik::Status::invalid_argument, "null estimate");
        *out = new lik_matrix{Matrix(e->e.spectrum.eigenvalues)};
    });
}

lik_status lik_gram_error(const lik_matrix* k_hat, const lik_matrix* k_true, double* out) {
    return guarded([&] {
        if (!k_hat || !k_true || !out) lik::fail(lik::Status::invalid_argument, "null argument");
        *out = lik::gram_error(k_hat->m, k_true->m);
    });
}

lik_status lik_hint_consolidate(const lik_matrix* const* hints, const double* betas,
                                int64_t count, int exponentiate, lik_gram_estimate** out) {
    return guarded([&] {
        if (!hints || !betas) lik::fail(lik::Status::invalid_argument, "null argument");
        lik::HintSet hs;
        hs.exponentiate = exponentiate != 0;
        for (int64_t i = 0; i < count; ++i) {
            if (!hints[i]) lik::fail(lik::Status::invalid_argument, "null hint matrix");
            hs.hints.push_back(hints[i]->m);
            hs.betas.push_back(betas[i]);
        }
        *out = new lik_gram_estimate{lik::hint_consolidate(hs)};
    });
}

lik_status lik_ema_update(const lik_matrix* prev, const lik_matrix* current, int64_t window,
                          lik_matrix** out) {
    return guarded([&] {
        if (!prev || !current) lik::fail(lik::Status::invalid_argument, "null matrix");
        *out = new lik_matrix{lik::ema_update(prev->m, current->m, window)};
    });
}

/* piecewise g ---------------------------------------------------------------- */

lik_status lik_partition_build(const lik_matrix* calibration, int64_t ell,
                               lik_partition** out) {
    return guarded([&] {
        if (!calibration) lik::fail(lik::Status::invalid_argument, "null calibration");
        *out = new lik_partition{lik::build_partition(calibration->m, ell)};
    });
}

void lik_partition_destroy(lik_partition* p) { delete p; }
int64_t lik_partition_cells(const lik_partition* p) { return p ? p->p.ell : 0; }

lik_status lik_estimate_g(const lik_matrix* const* x_slices, int64_t k, const lik_matrix* y,
                          const lik_matrix* k_hat, const lik_partition* partition, double c,
                          uint64_t seed, lik_piecewise_g** out) {
    return guarded([&] {
        if (!x_slices || !y || !k_hat || !partition)
            lik::fail(lik::Status::invalid_argument, "null argument");
        *out = new lik_piecewise_g{
            lik::estimate_g(collect_slices(x_slices, k), y->m, k_hat->m, partition->p, c, seed)};
    });
}

void lik_piecewise_g_destroy(lik_piecewise_g* g) { delete g; }
int64_t lik_piecewise_g_cells(const lik_piecewise_g* g) { return g ? g->g.partition.ell : 0; }
double lik_piecewise_g_mu(const lik_piecewise_g* g, int64_t cell) { return g->g.mu[cell]; }

int64_t lik_piecewise_g_n_used(const lik_piecewise_g* g, int64_t cell) {
    return g->g.n_used[static_cast<std::size_t>(cell)];
}

lik_status lik_piecewise_g_eval(const lik_piecewise_g* g, const double* x, int64_t k,
                                double* out) {
    return guarded([&] {
        if (!g || !x || !out) lik::fail(lik::Status::invalid_argument, "null argument");
        lik::Vector v(k);
        for (int64_t i = 0; i < k; ++i) v[i] = x[i];
        *out = lik::eval_piecewise(g->g, v);
    });
}

lik_status lik_piecewise_g_predict(const lik_piecewise_g* g, const lik_matrix* const* x_slices,
                                   int64_t k, const lik_matrix* k_hat, lik_matrix** out) {
    return guarded([&] {
        if (!g || !x_slices || !k_hat) lik::fail(lik::Status::invalid_argument, "null argument");
        *out = new lik_matrix{
            lik::predict_piecewise(g->g, collect_slices(x_slices, k), k_hat->m)};
    });
}

lik_status lik_piecewise_g_save(const lik_piecewise_g* g, const char* path) {
    return guarded([&] {
        if (!g) lik::fail(lik::Status::invalid_argument, "null model");
        if (g->g.partition.k != 1)
            lik::fail(lik::Status::invalid_dimension, "g_hat.csv format is k = 1 only");
        const auto& breaks = g->g.partition.axes[0];
        Matrix rows(g->g.partition.ell, 5);
        for (int64_t j = 0; j < g->g.partition.ell; ++j) {
            rows(j, 0) = static_cast<double>(j);
            rows(j, 1) = breaks[static_cast<std::size_t>(j)];
            rows(j, 2) = breaks[static_cast<std::size_t>(j) + 1];
            rows(j, 3) = g->g.mu[j];
            rows(j, 4) = static_cast<double>(g->g.n_used[static_cast<std::size_t>(j)]);
        }
        lik::write_csv(rows, path);
    });
}

lik_status lik_piecewise_g_load(const char* path, lik_piecewise_g** out) {
    return guarded([&] {
        const Matrix rows = lik::read_csv(path);
        if (rows.cols() != 5) lik::fail(lik::Status::io_error, "g_hat.csv needs 5 columns");
        lik::PiecewiseG g;
        g.partition.k = 1;
        g.partition.ell = rows.rows();
        g.partition.axis_cells = {rows.rows()};
        std::vector<double> breaks;
        breaks.push_back(rows(0, 1));
        for (Eigen::Index j = 0; j < rows.rows(); ++j) breaks.push_back(rows(j, 2));
        g.partition.axes = {std::move(breaks)};
        g.mu = rows.col(3);
        for (Eigen::Index j = 0; j < rows.rows(); ++j)
            g.n_used.push_back(static_cast<std::int64_t>(rows(j, 4)));
        *out = new lik_piecewise_g{std::move(g)};
    });
}

/* boosted model --------------------------------------------------------------- */

lik_status lik_boost_fit(const lik_matrix* y, const lik_matrix* const* x_slices, int64_t k,
                         const lik_matrix* k_hat, double eta, int64_t rounds, int interactions,
                         lik_boosted_model** out) {
    return guarded([&] {
        if (!y || !x_slices || !k_hat) lik::fail(lik::Status::invalid_argument, "null argument");
        auto result =
            lik::boost(y->m, collect_slices(x_slices, k), k_hat->m, eta, rounds,
                       interactions != 0);
        *out = new lik_boosted_model{std::move(result.model), std::move(result.mse)};
    });
}

void lik_boosted_model_destroy(lik_boosted_model* m) { delete m; }

int64_t lik_boosted_model_rounds(const lik_boosted_model* m) {
    return m ? static_cast<int64_t>(m->m.learners.size()) : 0;
}

double lik_boosted_model_eta(const lik_boosted_model* m) { return m ? m->m.eta : 0.0; }

double lik_boosted_model_mse(const lik_boosted_model* m, int64_t round) {
    return m->mse[static_cast<std::size_t>(round)];
}

lik_status lik_boost_predict(const lik_boosted_model* m, const lik_matrix* const* x_slices,
                             int64_t k, const lik_matrix* k_hat, lik_matrix** out) {
    return guarded([&] {
        if (!m || !x_slices || !k_hat) lik::fail(lik::Status::invalid_argument, "null argument");
        *out = new lik_matrix{lik::predict(m->m, collect_slices(x_slices, k), k_hat->m)};
    });
}

lik_status lik_boosted_model_save(const lik_boosted_model* m, const char* path) {
    return guarded([&] {
        if (!m) lik::fail(lik::Status::invalid_argument, "null model");
        const auto rounds = static_cast<Eigen::Index>(m->m.learners.size());
        Matrix rows(rounds, 10);
        for (Eigen::Index i = 0; i < rounds; ++i) {
            const auto& g = m->m.learners[static_cast<std::size_t>(i)];
            rows(i, 0) = static_cast<double>(i);
            for (int p = 0; p < 3; ++p) rows(i, 1 + p) = static_cast<double>(g.idx[std::size_t(p)]);
            for (int p = 0; p < 6; ++p) rows(i, 4 + p) = g.beta[std::size_t(p)];
        }
        lik::write_csv(rows, path);
        lik::write_meta(
            {
                {"eta", lik::format_g17(m->m.eta)},
                {"k", std::to_string(m->m.k)},
                {"interactions", m->m.interactions ? "1" : "0"},
                {"rounds", std::to_string(rounds)},
            },
            std::string(path) + ".meta.txt");
    });
}

lik_status lik_boosted_model_load(const char* path, lik_boosted_model** out) {
    return guarded([&] {
        const Matrix rows = lik::read_csv(path);
        if (rows.cols() != 10) lik::fail(lik::Status::io_error, "model CSV needs 10 columns");
        const auto meta = lik::read_meta(std::string(path) + ".meta.txt");
        lik::BoostedModel model;
        model.eta = std::stod(meta.at("eta"));
        model.k = std::stoll(meta.at("k"));
        model.interactions = meta.count("interactions") ? meta.at("interactions") == "1" : true;
        for (Eigen::Index i = 0; i < rows.rows(); ++i) {
            lik::LinearLearner g;
            for (int p = 0; p < 3; ++p)
                g.idx[std::size_t(p)] = static_cast<std::int64_t>(rows(i, 1 + p));
            for (int p = 0; p < 6; ++p) g.beta[std::size_t(p)] = rows(i, 4 + p);
            model.learners.push_back(g);
        }
        *out = new lik_boosted_model{std::move(model), {}};
    });
}

/* evaluation ------------------------------------------------------------------ */

lik_status lik_evaluate(const lik_matrix* y, const lik_matrix* y_hat,
                        const lik_matrix* weights, int64_t nw_lag, double quantile,
                        double annualization, lik_eval_report** out) {
    return guarded([&] {
        if (!y || !y_hat) lik::fail(lik::Status::invalid_argument, "null matrix");
        *out = new lik_eval_report{lik::evaluate(y->m, y_hat->m, weights ? &weights->m : nullptr,
                                                 nw_lag, quantile, annualization)};
    });
}

void lik_eval_report_destroy(lik_eval_report* r) { delete r; }
double lik_eval_report_corr(const lik_eval_report* r) { return r->r.corr; }
double lik_eval_report_w_corr(const lik_eval_report* r) { return r->r.w_corr; }
double lik_eval_report_t_stat(const lik_eval_report* r) { return r->r.t_stat; }
double lik_eval_report_w_t_stat(const lik_eval_report* r) { return r->r.w_t_stat; }
double lik_eval_report_pnl_total(const lik_eval_report* r) { return r->r.pnl_total; }
double lik_eval_report_sharpe(const lik_eval_report* r) { return r->r.sharpe; }
int64_t lik_eval_report_n_days(const lik_eval_report* r) { return r->r.n_days; }
double lik_eval_report_pnl_day(const lik_eval_report* r, int64_t day) {
    return r->r.pnl_series[day];
}

lik_status lik_daily_corr_mean(const lik_matrix* y, const lik_matrix* y_hat, double* out) {
    return guarded([&] {
        if (!y || !y_hat || !out) lik::fail(lik::Status::invalid_argument, "null argument");
        *out = lik::daily_corr(y->m, y_hat->m).mean;
    });
}

lik_status lik_newey_west_tstat(const double* series, int64_t n, int64_t lag, double* out) {
    return guarded([&] {
        if (!series || !out) lik::fail(lik::Status::invalid_argument, "null argument");
        lik::Vector v(n);
        for (int64_t i = 0; i < n; ++i) v[i] = series[i];
        *out = lik::newey_west_tstat(v, lag);
    });
}

lik_status lik_consolidate(const lik_matrix* const* forecasts, const double* tstats,
                           int64_t count, lik_matrix** out) {
    return guarded([&] {
        if (!forecasts || !tstats) lik::fail(lik::Status::invalid_argument, "null argument");
        std::vector<Matrix> f;
        std::vector<double> w;
        for (int64_t i = 0; i < count; ++i) {
            if (!forecasts[i]) lik::fail(lik::Status::invalid_argument, "null forecast");
            f.push_back(forecasts[i]->m);
            w.push_back(tstats[i]);
        }
        *out = new lik_matrix{lik::consolidate(f, w)};
    });
}

}  // extern "C"
