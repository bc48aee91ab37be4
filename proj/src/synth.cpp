#include "lik/synth.hpp"

#include <string>

#include "lik/parallel.hpp"
#include "lik/rng.hpp"

namespace lik {

Matrix sample_latent_positions(std::int64_t d, std::int64_t r, std::uint64_t seed) {
    if (d < 2 || r < 1)
        fail(Status::invalid_dimension,
             "latent positions need d >= 2, r >= 1 (got d=" + std::to_string(d) +
                 ", r=" + std::to_string(r) + ")");
    Matrix z(d, r);
    for (std::int64_t i = 0; i < d; ++i) {
        SplitMix64 rng(seed, static_cast<std::uint64_t>(i));
        for (std::int64_t j = 0; j < r; ++j) z(i, j) = rng.uniform(-1.0, 1.0);
    }
    return z;
}

LatentModel make_latent_model(std::int64_t d, std::int64_t r, const KernelSpec& kernel,
                              const SignalFn& g, double sigma_xi, std::uint64_t seed) {
    if (sigma_xi < 0.0) fail(Status::invalid_argument, "sigma_xi must be >= 0");
    LatentModel m;
    m.d = d;
    m.r = r;
    m.z = sample_latent_positions(d, r, seed);
    m.kernel = kernel;
    m.g_true = g;
    m.sigma_xi = sigma_xi;
    m.seed = seed;
    return m;
}

Matrix PanelData::day_features(std::int64_t t) const {
    Matrix out(d, k);
    for (std::int64_t f = 0; f < k; ++f) out.col(f) = x[static_cast<std::size_t>(f)].row(t);
    return out;
}

PanelData generate_panel(const LatentModel& model, std::int64_t n, std::int64_t k,
                         std::uint64_t seed) {
    if (n < 1 || k < 1)
        fail(Status::invalid_dimension, "panel needs n >= 1, k >= 1 (got n=" +
                                            std::to_string(n) + ", k=" + std::to_string(k) + ")");
    const std::int64_t d = model.d;
    PanelData p;
    p.n = n;
    p.d = d;
    p.k = k;
    p.x.assign(static_cast<std::size_t>(k), Matrix(n, d));
    p.s.resize(n, d);
    p.y.resize(n, d);

    const Matrix gram = gram_matrix(model.z, model.kernel);

    // Row t draws its features and noise from streams 2t and 2t+1, so the
    // panel is identical regardless of how rows are scheduled.
    parallel_for(n, [&](std::int64_t t) {
        SplitMix64 feat(seed, static_cast<std::uint64_t>(2 * t));
        Vector xv(k);
        for (std::int64_t m = 0; m < d; ++m) {
            for (std::int64_t f = 0; f < k; ++f) {
                xv[f] = feat.uniform(-1.0, 1.0);
                p.x[static_cast<std::size_t>(f)](t, m) = xv[f];
            }
            p.s(t, m) = model.g_true.eval(xv);
        }
    });
    p.y.noalias() = p.s * gram;
    if (model.sigma_xi > 0.0) {
        parallel_for(n, [&](std::int64_t t) {
            SplitMix64 noise(seed, static_cast<std::uint64_t>(2 * t + 1));
            for (std::int64_t i = 0; i < d; ++i) p.y(t, i) += model.sigma_xi * noise.normal();
        });
    }
    return p;
}

}  // namespace lik
