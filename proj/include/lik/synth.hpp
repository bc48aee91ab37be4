#pragma once

#include <cstdint>
#include <vector>

#include "lik/kernels.hpp"
#include "lik/signals.hpp"

namespace lik {

// Ground-truth generator state: latent positions, kernel, signal shape, noise.
struct LatentModel {
    std::int64_t d = 0;  // entity count, >= 2
    std::int64_t r = 0;  // latent dimension, >= 1
    Matrix z;            // d x r, rows in [-1,1]^r
    KernelSpec kernel;
    SignalFn g_true;
    double sigma_xi = 0.0;
    std::uint64_t seed = 0;
};

/// Samples Z and assembles the model.
LatentModel make_latent_model(std::int64_t d, std::int64_t r, const KernelSpec& kernel,
                              const SignalFn& g, double sigma_xi, std::uint64_t seed);

/// d x r matrix of iid uniform [-1,1] entries; deterministic per seed.
Matrix sample_latent_positions(std::int64_t d, std::int64_t r, std::uint64_t seed);

// Observed panel. x holds k feature slices (each n x d); y = s * K + noise
// with s(t,j) = g(x_{t,j}); s is retained for oracle checks.
struct PanelData {
    std::vector<Matrix> x;
    Matrix y;
    Matrix s;
    std::int64_t n = 0, d = 0, k = 0;

    /// day t as a d x k matrix
    Matrix day_features(std::int64_t t) const;
};

PanelData generate_panel(const LatentModel& model, std::int64_t n, std::int64_t k,
                         std::uint64_t seed);

}  // namespace lik
