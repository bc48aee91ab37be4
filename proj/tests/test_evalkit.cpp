#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "lik/evalkit.hpp"
#include "lik/rng.hpp"

using namespace lik;
using liktest::random_matrix;

TEST_CASE("daily_corr perfect, inverted, and null forecasts") {
    const Matrix y = random_matrix(40, 10, 3);
    CHECK(daily_corr(y, y).mean == doctest::Approx(1.0));
    CHECK(daily_corr(y, Matrix(-y)).mean == doctest::Approx(-1.0));

    const Matrix noise = random_matrix(100, 1000, 5);
    const Matrix y_big = random_matrix(100, 1000, 7);
    CHECK(std::abs(daily_corr(y_big, noise).mean) < 0.05);

    CHECK_THROWS_AS(daily_corr(y, Matrix::Zero(3, 3)), Error);
    CHECK_THROWS_AS(daily_corr(Matrix::Zero(5, 2), Matrix::Zero(5, 2)), Error);

    // zero-variance day flagged, excluded from the mean
    Matrix flat = y;
    flat.row(0).setConstant(1.0);
    auto series = daily_corr(y, flat);
    CHECK(series.flagged[0] == 1);
    CHECK(series.per_day[0] == doctest::Approx(0.0));
}

TEST_CASE("daily_corr is invariant to positive per-day rescaling") {
    const Matrix y = random_matrix(30, 12, 11);
    Matrix y_hat = random_matrix(30, 12, 13);
    auto base = daily_corr(y, y_hat);
    SplitMix64 rng(17);
    for (Eigen::Index t = 0; t < y_hat.rows(); ++t) y_hat.row(t) *= rng.uniform(0.1, 5.0);
    auto scaled = daily_corr(y, y_hat);
    CHECK((base.per_day - scaled.per_day).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("weighted_corr reduces to daily_corr under uniform weights") {
    const Matrix y = random_matrix(25, 8, 19);
    const Matrix y_hat = random_matrix(25, 8, 23);
    const Matrix w = Matrix::Constant(25, 8, 2.5);
    auto plain = daily_corr(y, y_hat);
    auto weighted = weighted_corr(y, y_hat, w);
    CHECK((plain.per_day - weighted.per_day).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(plain.mean == doctest::Approx(weighted.mean).epsilon(1e-12));

    CHECK_THROWS_AS(weighted_corr(y, y_hat, Matrix::Zero(25, 8)), Error);
    try {
        weighted_corr(y, y_hat, Matrix::Zero(25, 8));
    } catch (const Error& e) {
        CHECK(e.status() == Status::invalid_weight);
    }
}

TEST_CASE("weighted_corr two-entity hand case and degenerate concentration") {
    // d = 3 with nearly all weight on one entity -> weighted variance ~ 0 is
    // exercised via an exact two-point hand computation on entities 0, 1
    Matrix y(1, 3), y_hat(1, 3), w(1, 3);
    y << 1.0, 3.0, 2.0;
    y_hat << 2.0, 5.0, 1.0;
    w << 1.0, 3.0, 1e-12;

    // closed-form weighted covariance with weights (1, 3) on the first two
    const double wsum = 4.0;
    const double my = (1.0 * 1.0 + 3.0 * 3.0) / wsum;
    const double mf = (1.0 * 2.0 + 3.0 * 5.0) / wsum;
    double cov = 0, vy = 0, vf = 0;
    const double ws[2] = {1.0 / wsum, 3.0 / wsum};
    const double ys[2] = {1.0, 3.0};
    const double fs[2] = {2.0, 5.0};
    for (int i = 0; i < 2; ++i) {
        cov += ws[i] * (ys[i] - my) * (fs[i] - mf);
        vy += ws[i] * (ys[i] - my) * (ys[i] - my);
        vf += ws[i] * (fs[i] - mf) * (fs[i] - mf);
    }
    auto series = weighted_corr(y, y_hat, w);
    CHECK(series.per_day[0] == doctest::Approx(cov / std::sqrt(vy * vf)).epsilon(1e-6));

    // all weight on one entity: flagged zero-variance day
    Matrix w_one(1, 3);
    w_one << 1.0, 1e-300, 1e-300;
    auto degenerate = weighted_corr(y, y_hat, w_one);
    CHECK(degenerate.flagged[0] == 1);
}

TEST_CASE("daily_beta") {
    Vector y(3), f(3);
    f << 1.0, 2.0, 3.0;
    y = 2.0 * f;
    CHECK(daily_beta(y, f) == doctest::Approx(2.0));

    Vector orth(3);
    orth << -2.0, 1.0, 0.0;  // orthogonal to f
    CHECK(daily_beta(orth, f) == doctest::Approx(0.0));

    // closed-form oracle on a random case
    SplitMix64 rng(29);
    Vector a(20), b(20);
    for (int i = 0; i < 20; ++i) {
        a[i] = rng.normal();
        b[i] = rng.normal();
    }
    CHECK(daily_beta(a, b) == doctest::Approx(a.dot(b) / b.dot(b)).epsilon(1e-12));

    CHECK_THROWS_AS(daily_beta(y, Vector::Zero(3)), Error);
    try {
        daily_beta(y, Vector::Zero(3));
    } catch (const Error& e) {
        CHECK(e.status() == Status::undefined_beta);
    }
}

TEST_CASE("newey_west_tstat trivial and classical reductions") {
    Vector alternating(10);
    for (int i = 0; i < 10; ++i) alternating[i] = i % 2 ? 1.0 : -1.0;
    CHECK(newey_west_tstat(alternating, 0) == doctest::Approx(0.0));

    SplitMix64 rng(31);
    Vector iid(500);
    for (int i = 0; i < 500; ++i) iid[i] = 0.3 + rng.normal();
    const double mean = iid.mean();
    double var = 0.0;
    for (int i = 0; i < 500; ++i) var += (iid[i] - mean) * (iid[i] - mean);
    var /= 500.0;  // population variance, matching gamma_0
    const double classical = mean * std::sqrt(500.0) / std::sqrt(var);
    CHECK(newey_west_tstat(iid, 0) == doctest::Approx(classical).epsilon(1e-10));

    CHECK_THROWS_AS(newey_west_tstat(Vector::Zero(3), 5), Error);
    CHECK_THROWS_AS(newey_west_tstat(Vector::Ones(50), 2), Error);  // zero variance
}

TEST_CASE("newey_west_tstat matches a direct-summation oracle on AR(1)") {
    const std::int64_t n = 10000, lag = 10;
    SplitMix64 rng(37);
    Vector series(n);
    double prev = 0.0;
    for (std::int64_t t = 0; t < n; ++t) {
        prev = 0.5 * prev + rng.normal();
        series[t] = 0.1 + prev;
    }

    // direct summation of the same formula
    const double mean = series.mean();
    auto gamma = [&](std::int64_t l) {
        double acc = 0.0;
        for (std::int64_t t = l; t < n; ++t) acc += (series[t] - mean) * (series[t - l] - mean);
        return acc / static_cast<double>(n);
    };
    double longrun = gamma(0);
    for (std::int64_t l = 1; l <= lag; ++l)
        longrun += 2.0 * (1.0 - double(l) / double(lag + 1)) * gamma(l);
    const double oracle = mean / std::sqrt(longrun / double(n));

    CHECK(newey_west_tstat(series, lag) == doctest::Approx(oracle).epsilon(1e-10));

    // positive autocorrelation inflates the standard error vs iid
    const double t_iid = newey_west_tstat(series, 0);
    CHECK(std::abs(newey_west_tstat(series, lag)) < std::abs(t_iid));
}

TEST_CASE("pnl_sharpe sign quality and quantile selection") {
    const Matrix y = random_matrix(60, 20, 41);
    auto perfect = pnl_sharpe(y, y, 1.0, 252.0);
    for (Eigen::Index t = 0; t < 60; ++t)
        CHECK(perfect.pnl_series[t] == doctest::Approx(y.row(t).cwiseAbs().mean()));
    CHECK(perfect.sharpe_valid);

    // independent forecast: mean day PnL statistically near zero
    const Matrix y_big = random_matrix(400, 50, 43);
    const Matrix noise = random_matrix(400, 50, 47);
    auto null_run = pnl_sharpe(y_big, noise, 0.2, 252.0);
    const double mean = null_run.pnl_series.mean();
    double sd = 0.0;
    for (Eigen::Index t = 0; t < 400; ++t)
        sd += (null_run.pnl_series[t] - mean) * (null_run.pnl_series[t] - mean);
    sd = std::sqrt(sd / 399.0);
    CHECK(std::abs(mean) < 3.0 * sd / std::sqrt(400.0));

    // selection is invariant to positive per-day rescaling of the forecast
    Matrix y_hat = random_matrix(30, 15, 53);
    auto base = pnl_sharpe(y_big.topRows(30).leftCols(15), y_hat, 0.2, 252.0);
    SplitMix64 rng(59);
    Matrix scaled = y_hat;
    for (Eigen::Index t = 0; t < 30; ++t) scaled.row(t) *= rng.uniform(0.5, 4.0);
    auto rescaled = pnl_sharpe(y_big.topRows(30).leftCols(15), scaled, 0.2, 252.0);
    CHECK((base.pnl_series - rescaled.pnl_series).cwiseAbs().maxCoeff() <= 1e-12);

    auto flat = pnl_sharpe(Matrix::Ones(5, 4), Matrix::Ones(5, 4), 0.5, 252.0);
    CHECK_FALSE(flat.sharpe_valid);
    CHECK(flat.pnl_total == doctest::Approx(5.0));

    CHECK_THROWS_AS(pnl_sharpe(y, y, 0.0, 252.0), Error);
    CHECK_THROWS_AS(pnl_sharpe(y, y, 1.5, 252.0), Error);
}

TEST_CASE("evaluate produces a full report and tolerates degeneracy") {
    const Matrix y = random_matrix(50, 12, 61);
    auto report = evaluate(y, y, nullptr, 4, 0.2, 50.4);
    CHECK(report.corr == doctest::Approx(1.0));
    CHECK(report.w_corr == doctest::Approx(1.0));
    CHECK(report.n_days == 50);
    // perfect forecast: constant beta series -> +inf t-stat, report still valid
    CHECK(std::isinf(report.t_stat));
    CHECK(report.t_stat > 0.0);

    const Matrix w = random_matrix(50, 12, 63, 0.5, 2.0);
    auto weighted = evaluate(y, 0.5 * y, &w, 4, 0.2, 50.4);
    CHECK(weighted.corr == doctest::Approx(1.0));
    CHECK(weighted.w_corr == doctest::Approx(1.0));
}

TEST_CASE("consolidate reproduces the 3:5 blend and rescales") {
    const std::int64_t n = 40, d = 15;
    // inputs already at unit daily std so the blend is exactly 3*a + 5*b
    auto unit_rows = [](Matrix m) {
        for (Eigen::Index t = 0; t < m.rows(); ++t) {
            const double mean = m.row(t).mean();
            double var = 0.0;
            for (Eigen::Index i = 0; i < m.cols(); ++i)
                var += (m(t, i) - mean) * (m(t, i) - mean);
            m.row(t) /= std::sqrt(var / double(m.cols()));
        }
        return m;
    };
    const Matrix a = unit_rows(random_matrix(n, d, 67));
    const Matrix b = unit_rows(random_matrix(n, d, 71));
    const Matrix blended = consolidate({a, b}, {3.0, 5.0});
    const Matrix reference = 3.0 * a + 5.0 * b;
    auto corr = daily_corr(reference, blended);
    CHECK(corr.mean == doctest::Approx(1.0).epsilon(1e-9));

    // single forecast comes back rescaled but perfectly correlated
    auto single = consolidate({a}, {2.0});
    CHECK(daily_corr(a, single).mean == doctest::Approx(1.0).epsilon(1e-9));

    // two identical forecasts correlate 1.0 with either input
    auto twin = consolidate({a, a}, {1.0, 4.0});
    CHECK(daily_corr(a, twin).mean == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(consolidate({a, b}, {0.0, 0.0}), Error);
    try {
        consolidate({a, b}, {0.0, 0.0});
    } catch (const Error& e) {
        CHECK(e.status() == Status::degenerate_weights);
    }
    CHECK_THROWS_AS(consolidate({a, Matrix::Zero(2, 2)}, {1.0, 1.0}), Error);
    CHECK_THROWS_AS(consolidate({}, {}), Error);
}
