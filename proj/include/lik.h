/* lik — latent influence kernel toolkit, C API.
 *
 * Every function returns a lik_status (LIK_OK on success) and reports results
 * through out-parameters holding opaque handles. lik_last_error() returns a
 * thread-local human-readable detail message for the most recent failure;
 * lik_status_name() maps a code to its stable kebab-case name (the same name
 * the CLI prints, e.g. "gap-not-found").
 *
 * Handles are created by lik_*_create/estimate/fit functions and released with
 * the matching lik_*_destroy. Matrices are dense row-major doubles.
 */
#ifndef LIK_H
#define LIK_H

#include <stdint.h>

#if defined(_WIN32)
#define LIK_API __declspec(dllexport)
#else
#define LIK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t lik_status;

enum {
    LIK_OK = 0,
    LIK_ERR_INVALID_DIMENSION = 1,
    LIK_ERR_INVALID_ARGUMENT = 2,
    LIK_ERR_NUMERIC = 3,
    LIK_ERR_GAP_NOT_FOUND = 4,
    LIK_ERR_DEGENERATE_SPECTRUM = 5,
    LIK_ERR_NO_SIGNAL = 6,
    LIK_ERR_DEGENERATE_VARIANCE = 7,
    LIK_ERR_DEGENERATE_WEIGHTS = 8,
    LIK_ERR_INSUFFICIENT_DATA = 9,
    LIK_ERR_INVALID_WEIGHT = 10,
    LIK_ERR_UNDEFINED_BETA = 11,
    LIK_ERR_IO = 12,
    LIK_ERR_USAGE = 13
};

LIK_API const char* lik_status_name(lik_status s);
LIK_API const char* lik_last_error(void);

/* ------------------------------------------------------------------ matrix */

typedef struct lik_matrix lik_matrix;

LIK_API lik_status lik_matrix_create(int64_t rows, int64_t cols, lik_matrix** out);
LIK_API lik_status lik_matrix_from_data(const double* row_major, int64_t rows, int64_t cols,
                                        lik_matrix** out);
LIK_API lik_status lik_matrix_identity(int64_t dim, lik_matrix** out);
LIK_API lik_status lik_matrix_clone(const lik_matrix* m, lik_matrix** out);
LIK_API void lik_matrix_destroy(lik_matrix* m);
LIK_API int64_t lik_matrix_rows(const lik_matrix* m);
LIK_API int64_t lik_matrix_cols(const lik_matrix* m);
LIK_API double lik_matrix_get(const lik_matrix* m, int64_t row, int64_t col);
LIK_API lik_status lik_matrix_set(lik_matrix* m, int64_t row, int64_t col, double value);

/* CSV: comma-separated rows, '.' decimal, no header, 17 significant digits
 * (round-trip exact for doubles). */
LIK_API lik_status lik_matrix_read_csv(const char* path, lik_matrix** out);
LIK_API lik_status lik_matrix_write_csv(const lik_matrix* m, const char* path);

/* --------------------------------------------------------------- generator */

typedef struct lik_model lik_model;
typedef struct lik_panel lik_panel;

/* kernel_spec: "gaussian:<sigma>" | "imq:<c>,<alpha>" | "inner"
 * g_spec:      "poly:c0,c1,..." | "piecewise:b0,..,bm;v1,..,vm" | "sin:f,a" | "zero" */
LIK_API lik_status lik_model_create(int64_t d, int64_t r, const char* kernel_spec,
                                    const char* g_spec, double sigma_xi, uint64_t seed,
                                    lik_model** out);
LIK_API void lik_model_destroy(lik_model* m);
LIK_API lik_status lik_model_gram(const lik_model* m, lik_matrix** k_true);
LIK_API lik_status lik_model_signal_eval(const lik_model* m, const double* x, int64_t k,
                                         double* out);

LIK_API lik_status lik_panel_generate(const lik_model* m, int64_t n, int64_t k, uint64_t seed,
                                      lik_panel** out);
LIK_API void lik_panel_destroy(lik_panel* p);
LIK_API int64_t lik_panel_n(const lik_panel* p);
LIK_API int64_t lik_panel_d(const lik_panel* p);
LIK_API int64_t lik_panel_k(const lik_panel* p);
LIK_API lik_status lik_panel_y(const lik_panel* p, lik_matrix** out);
LIK_API lik_status lik_panel_signal(const lik_panel* p, lik_matrix** out);
LIK_API lik_status lik_panel_x(const lik_panel* p, int64_t feature, lik_matrix** out);

/* Writes Y.csv, X_f<j>.csv, K_true.csv, meta.txt into dir. */
LIK_API lik_status lik_panel_save(const lik_panel* p, const lik_model* m, const char* dir);
/* Reads a saved panel directory (Y + feature slices; S is not stored). */
LIK_API lik_status lik_panel_load(const char* dir, lik_panel** out);

/* ------------------------------------------------------------- K estimation */

typedef struct lik_gram_estimate lik_gram_estimate;

LIK_API lik_status lik_covariance_target(const lik_matrix* y, lik_matrix** out);
LIK_API lik_status lik_estimate_k_dd(const lik_matrix* y, double delta,
                                     lik_gram_estimate** out);
/* delta from the data-dependent rule; never fails on a non-degenerate panel. */
LIK_API lik_status lik_estimate_k_auto(const lik_matrix* y, lik_gram_estimate** out);
LIK_API void lik_gram_estimate_destroy(lik_gram_estimate* e);
LIK_API lik_status lik_gram_estimate_matrix(const lik_gram_estimate* e, lik_matrix** k_hat);
LIK_API int64_t lik_gram_estimate_rank(const lik_gram_estimate* e);
LIK_API double lik_gram_estimate_delta(const lik_gram_estimate* e);
/* Column vector of the covariance-target eigenvalues, descending. */
LIK_API lik_status lik_gram_estimate_eigenvalues(const lik_gram_estimate* e, lik_matrix** out);

LIK_API lik_status lik_gram_error(const lik_matrix* k_hat, const lik_matrix* k_true,
                                  double* out);
LIK_API lik_status lik_hint_consolidate(const lik_matrix* const* hints, const double* betas,
                                        int64_t count, int exponentiate,
                                        lik_gram_estimate** out);
LIK_API lik_status lik_ema_update(const lik_matrix* prev, const lik_matrix* current,
                                  int64_t window, lik_matrix** out);

/* ---------------------------------------------------- piecewise g estimation */

typedef struct lik_partition lik_partition;
typedef struct lik_piecewise_g lik_piecewise_g;

LIK_API lik_status lik_partition_build(const lik_matrix* calibration, int64_t ell,
                                       lik_partition** out);
LIK_API void lik_partition_destroy(lik_partition* p);
LIK_API int64_t lik_partition_cells(const lik_partition* p);

/* x_slices: k matrices of n x d feature values. */
LIK_API lik_status lik_estimate_g(const lik_matrix* const* x_slices, int64_t k,
                                  const lik_matrix* y, const lik_matrix* k_hat,
                                  const lik_partition* partition, double c, uint64_t seed,
                                  lik_piecewise_g** out);
LIK_API void lik_piecewise_g_destroy(lik_piecewise_g* g);
LIK_API int64_t lik_piecewise_g_cells(const lik_piecewise_g* g);
LIK_API double lik_piecewise_g_mu(const lik_piecewise_g* g, int64_t cell);
LIK_API int64_t lik_piecewise_g_n_used(const lik_piecewise_g* g, int64_t cell);
LIK_API lik_status lik_piecewise_g_eval(const lik_piecewise_g* g, const double* x, int64_t k,
                                        double* out);
/* Model-equation forecast yhat(t,i) = sum_j K_hat(i,j) g(x_{t,j}). */
LIK_API lik_status lik_piecewise_g_predict(const lik_piecewise_g* g,
                                           const lik_matrix* const* x_slices, int64_t k,
                                           const lik_matrix* k_hat, lik_matrix** out);
/* g_hat.csv rows: bin index, left edge, right edge, mu, n_used (k = 1 only). */
LIK_API lik_status lik_piecewise_g_save(const lik_piecewise_g* g, const char* path);
LIK_API lik_status lik_piecewise_g_load(const char* path, lik_piecewise_g** out);

/* ------------------------------------------------------------- boosted model */

typedef struct lik_boosted_model lik_boosted_model;

/* interactions = 0 fits plain 3-feature linear learners (beta4..6 = 0). */
LIK_API lik_status lik_boost_fit(const lik_matrix* y, const lik_matrix* const* x_slices,
                                 int64_t k, const lik_matrix* k_hat, double eta,
                                 int64_t rounds, int interactions, lik_boosted_model** out);
LIK_API void lik_boosted_model_destroy(lik_boosted_model* m);
LIK_API int64_t lik_boosted_model_rounds(const lik_boosted_model* m);
LIK_API double lik_boosted_model_eta(const lik_boosted_model* m);
/* In-sample MSE after round i (0-based). */
LIK_API double lik_boosted_model_mse(const lik_boosted_model* m, int64_t round);
LIK_API lik_status lik_boost_predict(const lik_boosted_model* m,
                                     const lik_matrix* const* x_slices, int64_t k,
                                     const lik_matrix* k_hat, lik_matrix** out);
/* Model CSV rows: round, j1, j2, j3, beta1..beta6; eta/k/interactions live in
 * a sidecar "<path>.meta.txt". */
LIK_API lik_status lik_boosted_model_save(const lik_boosted_model* m, const char* path);
LIK_API lik_status lik_boosted_model_load(const char* path, lik_boosted_model** out);

/* ---------------------------------------------------------------- evaluation */

typedef struct lik_eval_report lik_eval_report;

/* weights may be NULL (uniform). Degenerate t-stats are reported as +-inf/nan
 * rather than failing, so a report can always be produced. */
LIK_API lik_status lik_evaluate(const lik_matrix* y, const lik_matrix* y_hat,
                                const lik_matrix* weights, int64_t nw_lag, double quantile,
                                double annualization, lik_eval_report** out);
LIK_API void lik_eval_report_destroy(lik_eval_report* r);
LIK_API double lik_eval_report_corr(const lik_eval_report* r);
LIK_API double lik_eval_report_w_corr(const lik_eval_report* r);
LIK_API double lik_eval_report_t_stat(const lik_eval_report* r);
LIK_API double lik_eval_report_w_t_stat(const lik_eval_report* r);
LIK_API double lik_eval_report_pnl_total(const lik_eval_report* r);
LIK_API double lik_eval_report_sharpe(const lik_eval_report* r);
LIK_API int64_t lik_eval_report_n_days(const lik_eval_report* r);
LIK_API double lik_eval_report_pnl_day(const lik_eval_report* r, int64_t day);

LIK_API lik_status lik_daily_corr_mean(const lik_matrix* y, const lik_matrix* y_hat,
                                       double* out);
LIK_API lik_status lik_newey_west_tstat(const double* series, int64_t n, int64_t lag,
                                        double* out);
LIK_API lik_status lik_consolidate(const lik_matrix* const* forecasts, const double* tstats,
                                   int64_t count, lik_matrix** out);

#ifdef __cplusplus
}
#endif

#endif /* LIK_H */
