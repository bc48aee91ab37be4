#pragma once

#include <cstdint>
#include <vector>

#include "lik/kernels.hpp"

namespace lik {

// Per-day cross-sectional series; flagged days (zero variance on either side)
// carry 0 and are excluded from the mean.
struct CorrSeries {
    Vector per_day;
    std::vector<char> flagged;
    double mean = 0.0;
};

CorrSeries daily_corr(const Matrix& y, const Matrix& y_hat);
CorrSeries weighted_corr(const Matrix& y, const Matrix& y_hat, const Matrix& w);

/// No-intercept slope <y, yhat>/<yhat, yhat>; throws undefined-beta on yhat = 0.
double daily_beta(const Vector& y_t, const Vector& y_hat_t);

/// t = mean / se with Bartlett-kernel long-run variance:
/// se^2 = (1/n) [g0 + 2 sum_{l<=lag} (1 - l/(lag+1)) g_l].
double newey_west_tstat(const Vector& beta_series, std::int64_t lag);

struct PnlResult {
    Vector pnl_series;
    double pnl_total = 0.0;
    double sharpe = 0.0;
    bool sharpe_valid = false;  // false when the PnL series has zero variance
};

/// Keeps the ceil(quantile*d) entities with largest |yhat| per day;
/// day PnL = mean over kept of sign(yhat)*y; sharpe = sqrt(annualization)*mean/std.
PnlResult pnl_sharpe(const Matrix& y, const Matrix& y_hat, double quantile,
                     double annualization);

struct EvalReport {
    double corr = 0.0;
    double w_corr = 0.0;
    double t_stat = 0.0;
    double w_t_stat = 0.0;
    Vector pnl_series;
    double pnl_total = 0.0;
    double sharpe = 0.0;
    std::int64_t n_days = 0;
};

/// Full report; weights may be null (uniform). Degenerate t-stats are recorded
/// as +-inf instead of aborting the report.
EvalReport evaluate(const Matrix& y, const Matrix& y_hat, const Matrix* weights,
                    std::int64_t nw_lag, double quantile, double annualization);

/// t-stat weighted blend of forecasts, each rescaled to unit daily
/// cross-sectional std before weighting; output rescaled the same way.
Matrix consolidate(const std::vector<Matrix>& forecasts, const std::vector<double>& tstats);

}  // namespace lik
