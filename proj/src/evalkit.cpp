#include "lik/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace lik {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(Status::invalid_dimension, std::string(who) + ": shape mismatch");
}

double sample_std(const Vector& v) {
    const auto n = v.size();
    if (n < 2) return 0.0;
    const double mean = v.mean();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) acc += (v[i] - mean) * (v[i] - mean);
    return std::sqrt(acc / static_cast<double>(n - 1));
}

}  // namespace

CorrSeries daily_corr(const Matrix& y, const Matrix& y_hat) {
    require_same_shape(y, y_hat, "daily_corr");
    if (y.cols() < 3) fail(Status::invalid_dimension, "daily_corr: needs d >= 3 entities");
    const auto n = y.rows();
    CorrSeries out;
    out.per_day = Vector::Zero(n);
    out.flagged.assign(static_cast<std::size_t>(n), 0);
    double acc = 0.0;
    std::int64_t used = 0;
    for (Eigen::Index t = 0; t < n; ++t) {
        const Vector a = y.row(t);
        const Vector b = y_hat.row(t);
        const double ma = a.mean(), mb = b.mean();
        double cov = 0.0, va = 0.0, vb = 0.0;
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            cov += (a[i] - ma) * (b[i] - mb);
            va += (a[i] - ma) * (a[i] - ma);
            vb += (b[i] - mb) * (b[i] - mb);
        }
        if (va <= 0.0 || vb <= 0.0) {
            out.flagged[static_cast<std::size_t>(t)] = 1;
            continue;
        }
        out.per_day[t] = cov / std::sqrt(va * vb);
        acc += out.per_day[t];
        ++used;
    }
    out.mean = used ? acc / static_cast<double>(used) : 0.0;
    return out;
}

CorrSeries weighted_corr(const Matrix& y, const Matrix& y_hat, const Matrix& w) {
    require_same_shape(y, y_hat, "weighted_corr");
    require_same_shape(y, w, "weighted_corr");
    if ((w.array() <= 0.0).any())
        fail(Status::invalid_weight, "weighted_corr: weights must be positive");
    const auto n = y.rows();
    const auto d = y.cols();
    CorrSeries out;
    out.per_day = Vector::Zero(n);
    out.flagged.assign(static_cast<std::size_t>(n), 0);
    double acc = 0.0;
    std::int64_t used = 0;
    for (Eigen::Index t = 0; t < n; ++t) {
        const double wsum = w.row(t).sum();
        const double wmax = w.row(t).maxCoeff();
        // weight mass collapsed onto a single entity leaves no cross-section
        if (wmax / wsum >= 1.0 - 1e-12) {
            out.flagged[static_cast<std::size_t>(t)] = 1;
            continue;
        }
        double ma = 0.0, mb = 0.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            ma += w(t, i) * y(t, i);
            mb += w(t, i) * y_hat(t, i);
        }
        ma /= wsum;
        mb /= wsum;
        double cov = 0.0, va = 0.0, vb = 0.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            const double wi = w(t, i) / wsum;
            cov += wi * (y(t, i) - ma) * (y_hat(t, i) - mb);
            va += wi * (y(t, i) - ma) * (y(t, i) - ma);
            vb += wi * (y_hat(t, i) - mb) * (y_hat(t, i) - mb);
        }
        if (va <= 0.0 || vb <= 0.0) {
            out.flagged[static_cast<std::size_t>(t)] = 1;
            continue;
        }
        out.per_day[t] = cov / std::sqrt(va * vb);
        acc += out.per_day[t];
        ++used;
    }
    out.mean = used ? acc / static_cast<double>(used) : 0.0;
    return out;
}

double daily_beta(const Vector& y_t, const Vector& y_hat_t) {
    if (y_t.size() != y_hat_t.size())
        fail(Status::invalid_dimension, "daily_beta: length mismatch");
    const double denom = y_hat_t.squaredNorm();
    if (denom <= 0.0) fail(Status::undefined_beta, "daily_beta: forecast is all zero");
    return y_t.dot(y_hat_t) / denom;
}

double newey_west_tstat(const Vector& beta_series, std::int64_t lag) {
    const auto n = beta_series.size();
    if (lag < 0) fail(Status::invalid_argument, "newey_west_tstat: lag must be >= 0");
    if (n < lag + 2)
        fail(Status::invalid_argument, "newey_west_tstat: series too short for lag " +
                                           std::to_string(lag));
    const double mean = beta_series.mean();
    Vector centered = beta_series.array() - mean;

    auto gamma = [&](std::int64_t l) {
        double acc = 0.0;
        for (Eigen::Index t = l; t < n; ++t) acc += centered[t] * centered[t - l];
        return acc / static_cast<double>(n);
    };

    double longrun = gamma(0);
    for (std::int64_t l = 1; l <= lag; ++l)
        longrun += 2.0 * (1.0 - double(l) / double(lag + 1)) * gamma(l);
    const double se2 = longrun / static_cast<double>(n);
    if (se2 <= 0.0) fail(Status::degenerate_variance, "newey_west_tstat: zero long-run variance");
    return mean / std::sqrt(se2);
}

PnlResult pnl_sharpe(const Matrix& y, const Matrix& y_hat, double quantile,
                     double annualization) {
    require_same_shape(y, y_hat, "pnl_sharpe");
    if (!(quantile > 0.0) || quantile > 1.0)
        fail(Status::invalid_argument, "pnl_sharpe: quantile must be in (0, 1]");
    const auto n = y.rows();
    const auto d = y.cols();
    const auto keep = static_cast<std::int64_t>(
        std::min<double>(double(d), std::ceil(quantile * static_cast<double>(d))));

    PnlResult out;
    out.pnl_series = Vector::Zero(n);
    std::vector<std::int64_t> order(static_cast<std::size_t>(d));
    for (Eigen::Index t = 0; t < n; ++t) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
            return std::abs(y_hat(t, a)) > std::abs(y_hat(t, b));
        });
        double acc = 0.0;
        for (std::int64_t j = 0; j < keep; ++j) {
            const auto i = order[static_cast<std::size_t>(j)];
            const double f = y_hat(t, i);
            const double sign = f > 0.0 ? 1.0 : (f < 0.0 ? -1.0 : 0.0);
            acc += sign * y(t, i);
        }
        out.pnl_series[t] = acc / static_cast<double>(keep);
    }
    out.pnl_total = out.pnl_series.sum();
    const double sd = sample_std(out.pnl_series);
    if (sd > 0.0) {
        out.sharpe = std::sqrt(annualization) * out.pnl_series.mean() / sd;
        out.sharpe_valid = true;
    } else {
        out.sharpe = std::numeric_limits<double>::quiet_NaN();
        out.sharpe_valid = false;
    }
    return out;
}

namespace {

// beta series over days with a usable forecast; weighted variant normalizes
// weights per day (the slope is invariant to that, kept for clarity).
Vector beta_series(const Matrix& y, const Matrix& y_hat, const Matrix* weights) {
    std::vector<double> betas;
    betas.reserve(static_cast<std::size_t>(y.rows()));
    for (Eigen::Index t = 0; t < y.rows(); ++t) {
        double num = 0.0, den = 0.0;
        for (Eigen::Index i = 0; i < y.cols(); ++i) {
            const double wi = weights ? (*weights)(t, i) : 1.0;
            num += wi * y(t, i) * y_hat(t, i);
            den += wi * y_hat(t, i) * y_hat(t, i);
        }
        if (den > 0.0) betas.push_back(num / den);
    }
    return Eigen::Map<Vector>(betas.data(), static_cast<Eigen::Index>(betas.size()));
}

double tstat_or_inf(const Vector& betas, std::int64_t lag) {
    if (betas.size() < lag + 2) return std::numeric_limits<double>::quiet_NaN();
    try {
        return newey_west_tstat(betas, lag);
    } catch (const Error& e) {
        if (e.status() != Status::degenerate_variance) throw;
        const double mean = betas.mean();
        if (mean == 0.0) return std::numeric_limits<double>::quiet_NaN();
        return mean > 0.0 ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
    }
}

}  // namespace

EvalReport evaluate(const Matrix& y, const Matrix& y_hat, const Matrix* weights,
                    std::int64_t nw_lag, double quantile, double annualization) {
    require_same_shape(y, y_hat, "evaluate");
    EvalReport report;
    report.n_days = y.rows();
    report.corr = daily_corr(y, y_hat).mean;
    report.w_corr = weights ? weighted_corr(y, y_hat, *weights).mean : report.corr;
    report.t_stat = tstat_or_inf(beta_series(y, y_hat, nullptr), nw_lag);
    report.w_t_stat =
        weights ? tstat_or_inf(beta_series(y, y_hat, weights), nw_lag) : report.t_stat;
    auto pnl = pnl_sharpe(y, y_hat, quantile, annualization);
    report.pnl_series = std::move(pnl.pnl_series);
    report.pnl_total = pnl.pnl_total;
    report.sharpe = pnl.sharpe;
    return report;
}

Matrix consolidate(const std::vector<Matrix>& forecasts, const std::vector<double>& tstats) {
    if (forecasts.empty()) fail(Status::invalid_argument, "consolidate: no forecasts");
    if (forecasts.size() != tstats.size())
        fail(Status::invalid_argument, "consolidate: forecasts/tstats length mismatch");
    for (const auto& f : forecasts) require_same_shape(forecasts.front(), f, "consolidate");
    bool any = false;
    for (double w : tstats)
        if (w != 0.0) any = true;
    if (!any) fail(Status::degenerate_weights, "consolidate: all t-stat weights are zero");

    const auto n = forecasts.front().rows();
    const auto d = forecasts.front().cols();
    auto unit_daily_std = [d](Matrix m) {
        for (Eigen::Index t = 0; t < m.rows(); ++t) {
            const double mean = m.row(t).mean();
            double var = 0.0;
            for (Eigen::Index i = 0; i < d; ++i)
                var += (m(t, i) - mean) * (m(t, i) - mean);
            const double sd = std::sqrt(var / static_cast<double>(d));
            if (sd > 0.0) m.row(t) /= sd;
        }
        return m;
    };

    Matrix blend = Matrix::Zero(n, d);
    for (std::size_t j = 0; j < forecasts.size(); ++j)
        blend += tstats[j] * unit_daily_std(forecasts[j]);
    return unit_daily_std(std::move(blend));
}

}  // namespace lik
