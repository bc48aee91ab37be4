#pragma once

#include <string>

#include "lik/kernels.hpp"
#include "lik/rng.hpp"

namespace liktest {

inline lik::Matrix random_matrix(std::int64_t rows, std::int64_t cols, std::uint64_t seed,
                                 double lo = -1.0, double hi = 1.0) {
    lik::SplitMix64 rng(seed);
    lik::Matrix m(rows, cols);
    for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
    return m;
}

inline lik::Matrix random_symmetric(std::int64_t dim, std::uint64_t seed) {
    lik::Matrix a = random_matrix(dim, dim, seed);
    return 0.5 * (a + a.transpose());
}

inline lik::Matrix random_psd(std::int64_t dim, std::uint64_t seed) {
    lik::Matrix a = random_matrix(dim, dim, seed);
    return a * a.transpose() / static_cast<double>(dim);
}

inline std::string temp_path(const std::string& name) {
    return std::string("liktest_") + name;
}

}  // namespace liktest
