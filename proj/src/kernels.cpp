#include "lik/kernels.hpp"

#include <cmath>
#include <sstream>

#include "lik/io.hpp"

namespace lik {

KernelSpec KernelSpec::gaussian_kernel(double sigma) {
    if (!(sigma > 0.0)) fail(Status::invalid_argument, "gaussian sigma must be > 0");
    KernelSpec k;
    k.kind = Kind::gaussian;
    k.sigma = sigma;
    return k;
}

KernelSpec KernelSpec::imq_kernel(double c, double alpha) {
    if (!(c > 0.0) || !(alpha > 0.0))
        fail(Status::invalid_argument, "imq requires c > 0 and alpha > 0");
    KernelSpec k;
    k.kind = Kind::imq;
    k.c = c;
    k.alpha = alpha;
    return k;
}

KernelSpec KernelSpec::inner_product_kernel() {
    KernelSpec k;
    k.kind = Kind::inner_product;
    return k;
}

KernelSpec KernelSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (name == "gaussian") {
        if (args.empty()) return gaussian_kernel(1.0);
        return gaussian_kernel(std::stod(args));
    }
    if (name == "imq") {
        auto comma = args.find(',');
        if (comma == std::string::npos)
            fail(Status::invalid_argument, "imq kernel needs c,alpha: '" + text + "'");
        return imq_kernel(std::stod(args.substr(0, comma)), std::stod(args.substr(comma + 1)));
    }
    if (name == "inner") return inner_product_kernel();
    fail(Status::invalid_argument, "unknown kernel '" + text + "'");
}

std::string KernelSpec::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::gaussian: out << "gaussian:" << format_g17(sigma); break;
        case Kind::imq: out << "imq:" << format_g17(c) << "," << format_g17(alpha); break;
        case Kind::inner_product: out << "inner"; break;
    }
    return out.str();
}

double kernel_eval(const KernelSpec& kernel, const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        fail(Status::invalid_dimension, "kernel_eval: vectors of length " +
                                            std::to_string(a.size()) + " vs " +
                                            std::to_string(b.size()));
    switch (kernel.kind) {
        case KernelSpec::Kind::gaussian:
            return std::exp(-(a - b).squaredNorm() / (kernel.sigma * kernel.sigma));
        case KernelSpec::Kind::imq:
            return std::pow(kernel.c * kernel.c + (a - b).squaredNorm(), -kernel.alpha);
        case KernelSpec::Kind::inner_product:
            return a.dot(b);
    }
    fail(Status::invalid_argument, "bad kernel kind");
}

Matrix gram_matrix(const Matrix& z, const KernelSpec& kernel) {
    const auto d = z.rows();
    Matrix k(d, d);
    if (kernel.kind == KernelSpec::Kind::inner_product) {
        k.noalias() = z * z.transpose();
        return k;
    }
    for (Eigen::Index i = 0; i < d; ++i) {
        k(i, i) = kernel_eval(kernel, z.row(i), z.row(i));
        for (Eigen::Index j = i + 1; j < d; ++j) {
            const double v = kernel_eval(kernel, z.row(i), z.row(j));
            k(i, j) = v;
            k(j, i) = v;
        }
    }
    return k;
}

}  // namespace lik
