#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lik/kernels.hpp"

namespace lik {

// Weak learner: three distinct feature indices and six coefficients for
// (x_j1, x_j2, x_j3, x_j1*x_j2, x_j1*x_j3, x_j2*x_j3).
struct LinearLearner {
    std::array<std::int64_t, 3> idx{};
    std::array<double, 6> beta{};

    double eval(const Vector& x) const;
};

struct BoostedModel {
    std::vector<LinearLearner> learners;
    double eta = 0.1;
    std::int64_t k = 0;
    bool interactions = true;  // false: plain 3-feature linear fit (beta4..6 = 0)
};

/// k x d matrix whose column i is sum_j K_hat(i,j) * x_{t,j}.
Matrix neighbor_features(const Matrix& k_hat, const Matrix& x_t);

/// Indices of the three largest r_j, r_j = sum over days of the cross-entity
/// Pearson correlation between mixed feature j and the residual row. Ties break
/// to the lower index; zero-variance sides contribute 0.
std::array<std::int64_t, 3> select_features(const std::vector<Matrix>& x,
                                            const Matrix& k_hat, const Matrix& y_res);

/// Least-squares fit of the six neighbor-mixed regressors to the residuals
/// (pseudo-inverse, cutoff 1e-10 * max eigenvalue of the normal matrix).
LinearLearner fit_weak_learner(const Matrix& y_res, const std::vector<Matrix>& x,
                               const Matrix& k_hat, bool interactions = true);

struct BoostResult {
    BoostedModel model;
    std::vector<double> mse;  // in-sample MSE after each round
};

BoostResult boost(const Matrix& y, const std::vector<Matrix>& x, const Matrix& k_hat,
                  double eta, std::int64_t rounds, bool interactions = true);

/// yhat(t,i) = sum_j K_hat(i,j) * sum_m eta * g_m(x_{t,j}), matching the
/// eta-scaled accumulation used on training residuals.
Matrix predict(const BoostedModel& model, const std::vector<Matrix>& x,
               const Matrix& k_hat);

}  // namespace lik
