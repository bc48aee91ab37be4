#pragma once

#include <cstdint>
#include <vector>

#include "lik/linalg.hpp"

namespace lik {

// Estimated Gram matrix plus the spectral metadata used to produce it.
struct GramEstimate {
    Matrix k_hat;            // d x d, symmetric
    std::int64_t rank_star;  // chosen truncation rank
    double delta;            // gap parameter used (0 for hint consolidation)
    Spectrum spectrum;       // spectrum of the normalized covariance target
};

/// Y'Y/n, the covariance target of the spectral estimator.
Matrix covariance_target(const Matrix& y);

/// Data-driven estimator: eigendecompose Y'Y/n, pick the largest index i with
/// eigenvalue gap >= delta*d^2, return the PSD square root truncated there.
/// Throws GapNotFound when no index qualifies.
GramEstimate estimate_k_dd(const Matrix& y, double delta);

/// Largest workable delta: 1% below the gap at the deepest index i <= ceil(sqrt(d))
/// whose gap clears a small noise floor. Guarantees estimate_k_dd succeeds.
double auto_delta(const Spectrum& spec, std::int64_t d);

/// estimate_k_dd with delta from auto_delta on the same spectrum.
GramEstimate estimate_k_auto(const Matrix& y, double* delta_used = nullptr);

/// (1/d^2) * |K_hat - K|_F^2
double gram_error(const Matrix& k_hat, const Matrix& k_true);

// Observable similarity matrices combined linearly (optionally exponentiated
// entrywise) to approximate K.
struct HintSet {
    std::vector<Matrix> hints;
    std::vector<double> betas;
    bool exponentiate = false;
};

GramEstimate hint_consolidate(const HintSet& hs);

/// alpha = 2/(1+window); alpha*current + (1-alpha)*prev.
Matrix ema_update(const Matrix& prev, const Matrix& current, std::int64_t window);

}  // namespace lik
