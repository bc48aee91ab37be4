#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lik/kernels.hpp"

namespace lik {

// Equal-mass partition of [-1,1]^k into ell cells. k=1: one breakpoint vector;
// k>=2: per-axis quantile grids whose cell counts multiply to ell.
// Cells are left-closed right-open, the last cell per axis closed on both ends;
// out-of-range points clamp to the boundary cell.
struct PartitionSpec {
    std::int64_t k = 1;
    std::int64_t ell = 0;
    std::vector<std::vector<double>> axes;   // per-axis ascending breakpoints
    std::vector<std::int64_t> axis_cells;    // cells per axis, product = ell

    std::int64_t cell_of1(double x) const;       // k = 1
    std::int64_t cell_of(const Vector& x) const; // any k
};

/// Breakpoints at empirical quantiles of the calibration sample (rows x k),
/// endpoints forced to -1/1, duplicates perturbed by +1e-12 cumulative.
PartitionSpec build_partition(const Matrix& calibration, std::int64_t ell);

// Per-day reduction output: loads(j) = sum of K_hat(q, m) over entities m whose
// feature that day falls in cell j. Conserves the q-th row sum of K_hat.
struct BinLoads {
    std::int64_t t = 0;
    std::int64_t q = 0;
    Vector loads;
    std::int64_t clamped = 0;  // entities whose feature fell outside [-1,1]^k
};

BinLoads map_regress(std::int64_t q, const Matrix& k_hat, const Matrix& x_t,
                     const PartitionSpec& partition);

/// loads(target) - mean of the other loads: the signed imbalance statistic.
double pi1_statistic(const BinLoads& loads, std::int64_t target_bin, std::int64_t ell);

struct GObservation {
    double y = 0.0;
    BinLoads loads;
};

struct FlipSignResult {
    double mu = 0.0;
    std::int64_t n_kept = 0;
};

/// Moment estimate of the target cell mean: observations whose imbalance
/// statistic clears +-(c/ln d)*sqrt(d/ell) keep their sign flipped onto y, the
/// rest drop out; mu = sum(b*y)/sum(b*pi1). Throws no-signal when nothing
/// survives or the denominator is not positive.
FlipSignResult flip_sign_estimate(const std::vector<GObservation>& obs,
                                  std::int64_t target_bin, double c, std::int64_t d,
                                  std::int64_t ell);

// Fitted piecewise-constant signal: one mean per cell, centered to sum 0.
struct PiecewiseG {
    PartitionSpec partition;
    Vector mu;
    double c_threshold = 0.0;
    std::vector<std::int64_t> n_used;  // observations kept per cell (0 = no signal)
};

/// Full estimator: one random row q_t per day (seeded), one map_regress per day,
/// one flip-sign solve per cell; per-cell no-signal downgrades to mu=0, n_used=0.
PiecewiseG estimate_g(const std::vector<Matrix>& x, const Matrix& y, const Matrix& k_hat,
                      const PartitionSpec& partition, double c, std::uint64_t seed);

double eval_piecewise(const PiecewiseG& g, const Vector& x);
double eval_piecewise1(const PiecewiseG& g, double x);

/// Model-equation forecast: yhat(t,i) = sum_j K_hat(i,j) * g(x_{t,j}).
Matrix predict_piecewise(const PiecewiseG& g, const std::vector<Matrix>& x,
                         const Matrix& k_hat);

}  // namespace lik
