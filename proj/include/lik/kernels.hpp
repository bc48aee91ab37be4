#pragma once

#include <Eigen/Dense>
#include <string>

#include "lik/errors.hpp"

namespace lik {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Pairwise similarity kernel. Gaussian: exp(-|a-b|^2/sigma^2), values in (0,1];
/// IMQ: (c^2+|a-b|^2)^(-alpha), values in (0, c^(-2 alpha)]; inner product: <a,b>.
struct KernelSpec {
    enum class Kind { gaussian, imq, inner_product };

    Kind kind = Kind::gaussian;
    double sigma = 1.0;  // gaussian
    double c = 1.0;      // imq
    double alpha = 1.0;  // imq

    static KernelSpec gaussian_kernel(double sigma);
    static KernelSpec imq_kernel(double c, double alpha);
    static KernelSpec inner_product_kernel();

    /// "gaussian:<sigma>" | "imq:<c>,<alpha>" | "inner"
    static KernelSpec parse(const std::string& text);
    std::string to_string() const;
};

double kernel_eval(const KernelSpec& kernel, const Vector& a, const Vector& b);

/// Gram matrix K with K(i,j) = kernel(z_i, z_j); rows of z are positions in [-1,1]^r.
Matrix gram_matrix(const Matrix& z, const KernelSpec& kernel);

}  // namespace lik
