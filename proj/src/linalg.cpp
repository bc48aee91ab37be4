#include "lik/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace lik {

namespace {

void require_square(const Matrix& a, const char* who) {
    if (a.rows() != a.cols())
        fail(Status::invalid_dimension, std::string(who) + ": matrix is " +
                                            std::to_string(a.rows()) + "x" +
                                            std::to_string(a.cols()));
}

void require_rank(const Spectrum& spec, std::int64_t rank, const char* who) {
    if (rank < 1 || rank > spec.eigenvalues.size())
        fail(Status::invalid_dimension, std::string(who) + ": rank " + std::to_string(rank) +
                                            " outside [1, " +
                                            std::to_string(spec.eigenvalues.size()) + "]");
}

}  // namespace

Spectrum eig_sym(const Matrix& a) {
    require_square(a, "eig_sym");
    if (!a.allFinite()) fail(Status::numeric_error, "eig_sym: non-finite entries");
    const double scale = a.cwiseAbs().maxCoeff();
    if (scale > 0.0) {
        const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
        if (asym > 1e-8 * scale)
            fail(Status::invalid_argument, "eig_sym: input asymmetry " + std::to_string(asym) +
                                               " exceeds tolerance");
    }
    Matrix sym = 0.5 * (a + a.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success) fail(Status::numeric_error, "eig_sym: solver failed");

    // Eigen returns ascending order; flip to descending.
    const auto d = a.rows();
    Spectrum spec;
    spec.eigenvalues = solver.eigenvalues().reverse();
    spec.eigenvectors.resize(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        spec.eigenvectors.col(i) = solver.eigenvectors().col(d - 1 - i);
    return spec;
}

Matrix low_rank_project(const Spectrum& spec, std::int64_t rank) {
    require_rank(spec, rank, "low_rank_project");
    const auto r = static_cast<Eigen::Index>(rank);
    const Matrix v = spec.eigenvectors.leftCols(r);
    return v * spec.eigenvalues.head(r).asDiagonal() * v.transpose();
}

Matrix psd_sqrt(const Spectrum& spec, std::int64_t rank) {
    require_rank(spec, rank, "psd_sqrt");
    const auto r = static_cast<Eigen::Index>(rank);
    Vector roots = spec.eigenvalues.head(r).cwiseMax(0.0).cwiseSqrt();
    const Matrix v = spec.eigenvectors.leftCols(r);
    return v * roots.asDiagonal() * v.transpose();
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(Status::invalid_dimension, "frobenius_distance: shape mismatch");
    return (a - b).norm();
}

double spectral_norm(const Matrix& a) {
    if (a.size() == 0) fail(Status::invalid_dimension, "spectral_norm: empty matrix");
    if (!a.allFinite()) fail(Status::numeric_error, "spectral_norm: non-finite entries");
    if (a.rows() == a.cols()) {
        const double scale = a.cwiseAbs().maxCoeff();
        if (scale == 0.0) return 0.0;
        if ((a - a.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale) {
            Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (a + a.transpose()));
            return solver.eigenvalues().cwiseAbs().maxCoeff();
        }
    }
    // power iteration on A'A
    const Matrix ata = a.transpose() * a;
    Vector v = Vector::Ones(ata.cols()).normalized();
    double lambda = 0.0;
    for (int iter = 0; iter < 10000; ++iter) {
        Vector w = ata * v;
        const double norm = w.norm();
        if (norm == 0.0) return 0.0;
        w /= norm;
        const double next = w.dot(ata * w);
        if (std::abs(next - lambda) <= 1e-10 * std::max(1.0, std::abs(next))) {
            lambda = next;
            break;
        }
        lambda = next;
        v = w;
    }
    return std::sqrt(std::max(0.0, lambda));
}

}  // namespace lik
