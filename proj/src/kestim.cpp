#include "lik/kestim.hpp"

#include <cmath>
#include <string>

#include "lik/io.hpp"

namespace lik {

Matrix covariance_target(const Matrix& y) {
    if (y.rows() < 1) fail(Status::invalid_dimension, "covariance_target: empty panel");
    if (!y.allFinite()) fail(Status::numeric_error, "covariance_target: non-finite entries");
    Matrix target = (y.transpose() * y) / static_cast<double>(y.rows());
    return 0.5 * (target + target.transpose());
}

GramEstimate estimate_k_dd(const Matrix& y, double delta) {
    if (!(delta > 0.0)) fail(Status::invalid_argument, "delta must be > 0");
    const Spectrum spec = eig_sym(covariance_target(y));
    const std::int64_t d = spec.eigenvalues.size();
    const double threshold = delta * static_cast<double>(d) * static_cast<double>(d);

    std::int64_t rank = 0;
    double largest_gap = 0.0;
    for (std::int64_t i = 0; i + 1 < d; ++i) {
        const double gap = spec.eigenvalues[i] - spec.eigenvalues[i + 1];
        largest_gap = std::max(largest_gap, gap);
        if (gap >= threshold) rank = i + 1;  // keep the largest qualifying index
    }
    if (rank == 0)
        throw GapNotFound(largest_gap,
                          "no eigenvalue gap >= " + format_g17(threshold) +
                              "; largest observed gap " + format_g17(largest_gap) +
                              " (delta <= " + format_g17(largest_gap / (double(d) * double(d))) +
                              " would fire)");

    GramEstimate est;
    est.k_hat = psd_sqrt(spec, rank);
    est.rank_star = rank;
    est.delta = delta;
    est.spectrum = spec;
    return est;
}

double auto_delta(const Spectrum& spec, std::int64_t d) {
    if (d < 2 || spec.eigenvalues.size() != d)
        fail(Status::invalid_dimension, "auto_delta: spectrum/d mismatch");
    const std::int64_t m =
        std::min<std::int64_t>(static_cast<std::int64_t>(std::ceil(std::sqrt(double(d)))), d - 1);
    const double top = spec.eigenvalues[0];
    const double head_scale = top - spec.eigenvalues[m];
    // Floor separates structural gaps from FP noise: a fraction of the average
    // head gap, with an absolute guard tied to the top eigenvalue.
    const double floor =
        std::max({head_scale * 1e-3 / static_cast<double>(m), std::abs(top) * 1e-12, 0.0});

    std::int64_t chosen = -1;
    double chosen_gap = 0.0;
    for (std::int64_t i = 0; i < m; ++i) {
        const double gap = spec.eigenvalues[i] - spec.eigenvalues[i + 1];
        if (gap >= floor && gap > 0.0) {
            chosen = i + 1;
            chosen_gap = gap;
        }
    }
    if (chosen < 0)
        fail(Status::degenerate_spectrum,
             "no usable eigenvalue gap in the top " + std::to_string(m) + " indices");
    return 0.99 * chosen_gap / (static_cast<double>(d) * static_cast<double>(d));
}

GramEstimate estimate_k_auto(const Matrix& y, double* delta_used) {
    const Spectrum spec = eig_sym(covariance_target(y));
    const std::int64_t d = spec.eigenvalues.size();
    const double delta = auto_delta(spec, d);
    if (delta_used) *delta_used = delta;

    const double threshold = delta * static_cast<double>(d) * static_cast<double>(d);
    std::int64_t rank = 0;
    for (std::int64_t i = 0; i + 1 < d; ++i)
        if (spec.eigenvalues[i] - spec.eigenvalues[i + 1] >= threshold) rank = i + 1;

    GramEstimate est;
    est.k_hat = psd_sqrt(spec, rank);
    est.rank_star = rank;
    est.delta = delta;
    est.spectrum = spec;
    return est;
}

double gram_error(const Matrix& k_hat, const Matrix& k_true) {
    if (k_hat.rows() != k_true.rows() || k_hat.cols() != k_true.cols())
        fail(Status::invalid_dimension, "gram_error: shape mismatch");
    const double d = static_cast<double>(k_hat.rows());
    return (k_hat - k_true).squaredNorm() / (d * d);
}

GramEstimate hint_consolidate(const HintSet& hs) {
    if (hs.hints.empty()) fail(Status::invalid_argument, "hint_consolidate: no hints");
    if (hs.hints.size() != hs.betas.size())
        fail(Status::invalid_argument, "hint_consolidate: hints/betas length mismatch");
    const auto d = hs.hints.front().rows();
    for (const auto& h : hs.hints)
        if (h.rows() != d || h.cols() != d)
            fail(Status::invalid_dimension, "hint_consolidate: hint dimension mismatch");
    for (double b : hs.betas)
        if (!std::isfinite(b)) fail(Status::invalid_argument, "hint_consolidate: non-finite beta");

    Matrix m = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < hs.hints.size(); ++i) m += hs.betas[i] * hs.hints[i];
    if (hs.exponentiate) m = m.array().exp().matrix();
    m = 0.5 * (m + m.transpose());

    GramEstimate est;
    est.k_hat = m;
    est.rank_star = d;
    est.delta = 0.0;
    est.spectrum = eig_sym(m);
    return est;
}

Matrix ema_update(const Matrix& prev, const Matrix& current, std::int64_t window) {
    if (window < 1) fail(Status::invalid_argument, "ema_update: window must be >= 1");
    if (prev.rows() != current.rows() || prev.cols() != current.cols())
        fail(Status::invalid_dimension, "ema_update: shape mismatch");
    const double alpha = 2.0 / (1.0 + static_cast<double>(window));
    return alpha * current + (1.0 - alpha) * prev;
}

}  // namespace lik
