#include "lik/gest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lik/parallel.hpp"
#include "lik/rng.hpp"

namespace lik {

namespace {

std::int64_t locate_cell(const std::vector<double>& breaks, double x) {
    const auto cells = static_cast<std::int64_t>(breaks.size()) - 1;
    auto it = std::upper_bound(breaks.begin(), breaks.end(), x);
    std::int64_t cell = static_cast<std::int64_t>(std::distance(breaks.begin(), it)) - 1;
    return std::clamp<std::int64_t>(cell, 0, cells - 1);
}

bool in_range(const std::vector<double>& breaks, double x) {
    return x >= breaks.front() && x <= breaks.back();
}

// Ascending breakpoints at quantiles j/cells of the sorted sample, endpoints
// forced to -1/1, duplicates perturbed by +1e-12 cumulative.
std::vector<double> axis_breakpoints(std::vector<double> sorted, std::int64_t cells) {
    const auto m = static_cast<std::int64_t>(sorted.size());
    std::vector<double> breaks(static_cast<std::size_t>(cells) + 1);
    breaks.front() = -1.0;
    breaks.back() = 1.0;
    for (std::int64_t j = 1; j < cells; ++j) {
        const double p = static_cast<double>(j) / static_cast<double>(cells);
        const double pos = p * static_cast<double>(m - 1);
        const auto lo = static_cast<std::int64_t>(std::floor(pos));
        const double frac = pos - static_cast<double>(lo);
        const double hi_val = sorted[static_cast<std::size_t>(std::min(lo + 1, m - 1))];
        breaks[static_cast<std::size_t>(j)] =
            sorted[static_cast<std::size_t>(lo)] * (1.0 - frac) + hi_val * frac;
    }
    for (std::size_t j = 1; j + 1 < breaks.size(); ++j)
        if (breaks[j] <= breaks[j - 1]) breaks[j] = breaks[j - 1] + 1e-12;
    return breaks;
}

// Splits ell into `axes` integer factors with product exactly ell, keeping the
// factors as equal as possible.
std::vector<std::int64_t> split_cell_counts(std::int64_t ell, std::int64_t axes) {
    std::vector<std::int64_t> counts;
    std::int64_t remaining = ell;
    for (std::int64_t a = 0; a < axes; ++a) {
        const std::int64_t left = axes - a;
        if (left == 1) {
            counts.push_back(remaining);
            break;
        }
        const double ideal = std::pow(static_cast<double>(remaining), 1.0 / double(left));
        std::int64_t best = 1;
        double best_dist = std::abs(1.0 - ideal);
        for (std::int64_t f = 1; f <= remaining; ++f) {
            if (remaining % f) continue;
            const double dist = std::abs(static_cast<double>(f) - ideal);
            if (dist < best_dist) {
                best = f;
                best_dist = dist;
            }
        }
        counts.push_back(best);
        remaining /= best;
    }
    return counts;
}

}  // namespace

std::int64_t PartitionSpec::cell_of1(double x) const { return locate_cell(axes[0], x); }

std::int64_t PartitionSpec::cell_of(const Vector& x) const {
    if (x.size() != k)
        fail(Status::invalid_dimension, "partition expects " + std::to_string(k) +
                                            "-dim features, got " + std::to_string(x.size()));
    std::int64_t idx = 0;
    for (std::int64_t a = 0; a < k; ++a) {
        idx = idx * axis_cells[static_cast<std::size_t>(a)] +
              locate_cell(axes[static_cast<std::size_t>(a)], x[a]);
    }
    return idx;
}

PartitionSpec build_partition(const Matrix& calibration, std::int64_t ell) {
    if (ell < 2) fail(Status::invalid_argument, "partition needs ell >= 2");
    const std::int64_t m = calibration.rows();
    const std::int64_t k = calibration.cols();
    if (k < 1) fail(Status::invalid_dimension, "calibration sample has no columns");
    if (m < 10 * ell)
        fail(Status::insufficient_data, "partition calibration needs >= 10*ell points (got " +
                                            std::to_string(m) + " for ell=" +
                                            std::to_string(ell) + ")");

    PartitionSpec p;
    p.k = k;
    p.ell = ell;
    p.axis_cells = split_cell_counts(ell, k);
    for (std::int64_t a = 0; a < k; ++a) {
        std::vector<double> column(static_cast<std::size_t>(m));
        for (std::int64_t i = 0; i < m; ++i)
            column[static_cast<std::size_t>(i)] = calibration(i, a);
        std::sort(column.begin(), column.end());
        p.axes.push_back(axis_breakpoints(std::move(column), p.axis_cells[std::size_t(a)]));
    }
    return p;
}

BinLoads map_regress(std::int64_t q, const Matrix& k_hat, const Matrix& x_t,
                     const PartitionSpec& partition) {
    const std::int64_t d = k_hat.rows();
    if (k_hat.cols() != d || x_t.rows() != d)
        fail(Status::invalid_dimension, "map_regress: K_hat/features shape mismatch");
    if (x_t.cols() != partition.k)
        fail(Status::invalid_dimension, "map_regress: feature dimension mismatch");
    if (q < 0 || q >= d) fail(Status::invalid_argument, "map_regress: row index out of range");

    BinLoads out;
    out.q = q;
    out.loads = Vector::Zero(partition.ell);
    for (std::int64_t mcol = 0; mcol < d; ++mcol) {
        std::int64_t cell;
        if (partition.k == 1) {
            const double x = x_t(mcol, 0);
            if (!in_range(partition.axes[0], x)) ++out.clamped;
            cell = partition.cell_of1(x);
        } else {
            for (std::int64_t a = 0; a < partition.k; ++a)
                if (!in_range(partition.axes[std::size_t(a)], x_t(mcol, a))) {
                    ++out.clamped;
                    break;
                }
            cell = partition.cell_of(x_t.row(mcol));
        }
        out.loads[cell] += k_hat(q, mcol);
    }
    return out;
}

double pi1_statistic(const BinLoads& loads, std::int64_t target_bin, std::int64_t ell) {
    if (ell < 2) fail(Status::invalid_argument, "pi1_statistic: ell must be >= 2");
    const double total = loads.loads.sum();
    const double own = loads.loads[target_bin];
    return own - (total - own) / static_cast<double>(ell - 1);
}

FlipSignResult flip_sign_estimate(const std::vector<GObservation>& obs,
                                  std::int64_t target_bin, double c, std::int64_t d,
                                  std::int64_t ell) {
    if (obs.empty()) fail(Status::invalid_argument, "flip_sign_estimate: no observations");
    if (!(c > 0.0)) fail(Status::invalid_argument, "flip_sign_estimate: c must be > 0");
    const double threshold =
        c / std::log(static_cast<double>(d)) * std::sqrt(double(d) / double(ell));

    double num = 0.0, den = 0.0;
    std::int64_t kept = 0;
    for (const auto& ob : obs) {
        const double stat = pi1_statistic(ob.loads, target_bin, ell);
        int sign = 0;
        if (stat >= threshold)
            sign = 1;
        else if (stat < -threshold)
            sign = -1;
        if (!sign) continue;
        ++kept;
        num += sign * ob.y;
        den += sign * stat;
    }
    if (kept == 0 || den <= 0.0)
        fail(Status::no_signal, "flip-sign kept " + std::to_string(kept) +
                                    " observations for bin " + std::to_string(target_bin) +
                                    " (threshold " + std::to_string(threshold) + ")");
    return {num / den, kept};
}

PiecewiseG estimate_g(const std::vector<Matrix>& x, const Matrix& y, const Matrix& k_hat,
                      const PartitionSpec& partition, double c, std::uint64_t seed) {
    const std::int64_t n = y.rows();
    const std::int64_t d = y.cols();
    const auto k = static_cast<std::int64_t>(x.size());
    if (k != partition.k)
        fail(Status::invalid_dimension, "estimate_g: feature slices vs partition k");
    for (const auto& slice : x)
        if (slice.rows() != n || slice.cols() != d)
            fail(Status::invalid_dimension, "estimate_g: feature slice shape mismatch");
    if (k_hat.rows() != d || k_hat.cols() != d)
        fail(Status::invalid_dimension, "estimate_g: K_hat shape mismatch");
    if (!(c > 0.0)) fail(Status::invalid_argument, "estimate_g: c must be > 0");

    // One random row per day, shared by every cell's estimate.
    std::vector<GObservation> obs(static_cast<std::size_t>(n));
    parallel_for(n, [&](std::int64_t t) {
        SplitMix64 rng(seed, static_cast<std::uint64_t>(t));
        const auto q = static_cast<std::int64_t>(rng.uniform_int(std::uint64_t(d)));
        Matrix x_t(d, k);
        for (std::int64_t f = 0; f < k; ++f) x_t.col(f) = x[std::size_t(f)].row(t);
        auto& ob = obs[static_cast<std::size_t>(t)];
        ob.loads = map_regress(q, k_hat, x_t, partition);
        ob.loads.t = t;
        ob.y = y(t, q);
    });

    PiecewiseG g;
    g.partition = partition;
    g.c_threshold = c;
    g.mu = Vector::Zero(partition.ell);
    g.n_used.assign(static_cast<std::size_t>(partition.ell), 0);
    parallel_for(partition.ell, [&](std::int64_t j) {
        try {
            const auto fit = flip_sign_estimate(obs, j, c, d, partition.ell);
            g.mu[j] = fit.mu;
            g.n_used[static_cast<std::size_t>(j)] = fit.n_kept;
        } catch (const Error& e) {
            if (e.status() != Status::no_signal) throw;
            g.mu[j] = 0.0;  // downgraded: cell recorded as empty
        }
    });
    g.mu.array() -= g.mu.mean();
    return g;
}

double eval_piecewise(const PiecewiseG& g, const Vector& x) {
    return g.mu[g.partition.cell_of(x)];
}

double eval_piecewise1(const PiecewiseG& g, double x) {
    return g.mu[g.partition.cell_of1(x)];
}

Matrix predict_piecewise(const PiecewiseG& g, const std::vector<Matrix>& x,
                         const Matrix& k_hat) {
    if (x.empty() || static_cast<std::int64_t>(x.size()) != g.partition.k)
        fail(Status::invalid_dimension, "predict_piecewise: feature slices vs partition k");
    const std::int64_t n = x.front().rows();
    const std::int64_t d = x.front().cols();
    if (k_hat.rows() != d || k_hat.cols() != d)
        fail(Status::invalid_dimension, "predict_piecewise: K_hat shape mismatch");

    Matrix fitted(n, d);
    const auto k = g.partition.k;
    parallel_for(n, [&](std::int64_t t) {
        Vector xv(k);
        for (std::int64_t m = 0; m < d; ++m) {
            for (std::int64_t f = 0; f < k; ++f) xv[f] = x[std::size_t(f)](t, m);
            fitted(t, m) = g.mu[g.partition.cell_of(xv)];
        }
    });
    return fitted * k_hat.transpose();
}

}  // namespace lik
