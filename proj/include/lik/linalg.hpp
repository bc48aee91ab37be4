#pragma once

#include <cstdint>

#include "lik/kernels.hpp"

namespace lik {

// Symmetric eigendecomposition, eigenvalues sorted descending, columns of
// eigenvectors aligned with them.
struct Spectrum {
    Vector eigenvalues;
    Matrix eigenvectors;
};

/// A is symmetrized as (A+A')/2 before decomposition; gross asymmetry or
/// non-finite entries are rejected.
Spectrum eig_sym(const Matrix& a);

/// Rank-r approximation: sum of the top `rank` eigenpairs.
Matrix low_rank_project(const Spectrum& spec, std::int64_t rank);

/// PSD square root of the rank-truncated matrix; negative eigenvalues clip to 0.
Matrix psd_sqrt(const Spectrum& spec, std::int64_t rank);

double frobenius_distance(const Matrix& a, const Matrix& b);

/// Largest |eigenvalue| for symmetric input; power iteration on A'A otherwise
/// (tol 1e-10, max 1e4 iterations).
double spectral_norm(const Matrix& a);

}  // namespace lik
