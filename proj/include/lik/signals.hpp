#pragma once

#include <string>
#include <vector>

#include "lik/kernels.hpp"

namespace lik {

// Scalar signal shape on [-1,1], centered at construction by subtracting a
// Monte-Carlo estimate of its mean (1e6 uniform draws, fixed internal seed).
// On k-dimensional input the shape is applied per coordinate and summed.
struct SignalFn {
    enum class Kind { piecewise_constant, polynomial, sinusoid };

    Kind kind = Kind::polynomial;
    std::vector<double> breaks;   // piecewise: ascending, breaks.front()=-1, breaks.back()=1
    std::vector<double> values;   // piecewise: one per cell
    std::vector<double> coeffs;   // polynomial: ascending powers, c0 + c1 x + ...
    double freq = 1.0;            // sinusoid: amp * sin(freq * x)
    double amp = 1.0;
    double offset = 0.0;          // subtracted so the scalar shape has mean ~0

    static SignalFn polynomial_fn(std::vector<double> coeffs);
    static SignalFn piecewise_fn(std::vector<double> breaks, std::vector<double> values);
    static SignalFn sinusoid_fn(double freq, double amp);
    static SignalFn zero() { return polynomial_fn({0.0}); }

    /// "poly:c0,c1,..." | "piecewise:b0,...,bm;v1,...,vm" | "sin:freq,amp"
    static SignalFn parse(const std::string& text);
    std::string to_string() const;

    /// centered scalar shape
    double eval1(double x) const;
    /// per-coordinate sum over x in [-1,1]^k
    double eval(const Vector& x) const;
};

}  // namespace lik
