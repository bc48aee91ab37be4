#include "lik/pvel.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace lik {

namespace {

void require_panel(const std::vector<Matrix>& x, const Matrix& k_hat, const char* who) {
    if (x.empty()) fail(Status::invalid_dimension, std::string(who) + ": no feature slices");
    const auto n = x.front().rows();
    const auto d = x.front().cols();
    for (const auto& slice : x)
        if (slice.rows() != n || slice.cols() != d)
            fail(Status::invalid_dimension, std::string(who) + ": ragged feature slices");
    if (k_hat.rows() != d || k_hat.cols() != d)
        fail(Status::invalid_dimension, std::string(who) + ": K_hat shape mismatch");
}

// Mixed slices M_f = X_f * K_hat', reused across boosting rounds.
std::vector<Matrix> mix_slices(const std::vector<Matrix>& x, const Matrix& k_hat) {
    std::vector<Matrix> mixed;
    mixed.reserve(x.size());
    for (const auto& slice : x) mixed.emplace_back(slice * k_hat.transpose());
    return mixed;
}

// Sum over days of the cross-entity Pearson correlation; zero-variance days
// contribute 0.
double correlation_score(const Matrix& mixed_f, const Matrix& y_res) {
    const auto n = mixed_f.rows();
    const auto d = mixed_f.cols();
    double score = 0.0;
    for (Eigen::Index t = 0; t < n; ++t) {
        const auto a = mixed_f.row(t);
        const auto b = y_res.row(t);
        const double ma = a.mean(), mb = b.mean();
        double cov = 0.0, va = 0.0, vb = 0.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            const double da = a[i] - ma, db = b[i] - mb;
            cov += da * db;
            va += da * da;
            vb += db * db;
        }
        if (va > 0.0 && vb > 0.0) score += cov / std::sqrt(va * vb);
    }
    return score;
}

std::array<std::int64_t, 3> top3(const std::vector<double>& scores) {
    std::vector<std::int64_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
        return scores[std::size_t(a)] > scores[std::size_t(b)];
    });
    return {order[0], order[1], order[2]};
}

LinearLearner fit_from_mixed(const Matrix& y_res, const std::vector<Matrix>& x,
                             const std::vector<Matrix>& mixed, const Matrix& k_hat,
                             bool interactions) {
    const auto k = static_cast<std::int64_t>(x.size());
    if (k < 3) fail(Status::invalid_dimension, "weak learner needs k >= 3 features");

    std::vector<double> scores(static_cast<std::size_t>(k));
    for (std::int64_t f = 0; f < k; ++f)
        scores[std::size_t(f)] = correlation_score(mixed[std::size_t(f)], y_res);
    LinearLearner learner;
    learner.idx = top3(scores);
    const auto [j1, j2, j3] = learner.idx;

    const int terms = interactions ? 6 : 3;
    std::vector<Matrix> regressors;
    regressors.reserve(static_cast<std::size_t>(terms));
    regressors.push_back(mixed[std::size_t(j1)]);
    regressors.push_back(mixed[std::size_t(j2)]);
    regressors.push_back(mixed[std::size_t(j3)]);
    if (interactions) {
        regressors.push_back(x[std::size_t(j1)].cwiseProduct(x[std::size_t(j2)]) *
                             k_hat.transpose());
        regressors.push_back(x[std::size_t(j1)].cwiseProduct(x[std::size_t(j3)]) *
                             k_hat.transpose());
        regressors.push_back(x[std::size_t(j2)].cwiseProduct(x[std::size_t(j3)]) *
                             k_hat.transpose());
    }

    Matrix normal = Matrix::Zero(terms, terms);
    Vector rhs = Vector::Zero(terms);
    for (int p = 0; p < terms; ++p) {
        rhs[p] = regressors[std::size_t(p)].cwiseProduct(y_res).sum();
        for (int q = p; q < terms; ++q) {
            const double v =
                regressors[std::size_t(p)].cwiseProduct(regressors[std::size_t(q)]).sum();
            normal(p, q) = v;
            normal(q, p) = v;
        }
    }

    // Pseudo-inverse with relative cutoff handles collinear regressors.
    Eigen::SelfAdjointEigenSolver<Matrix> solver(normal);
    const Vector evals = solver.eigenvalues();
    const double cutoff = 1e-10 * std::max(0.0, evals.maxCoeff());
    Vector inv = Vector::Zero(terms);
    for (int p = 0; p < terms; ++p)
        if (evals[p] > cutoff) inv[p] = 1.0 / evals[p];
    const Vector beta =
        solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose() * rhs;
    for (int p = 0; p < terms; ++p) learner.beta[std::size_t(p)] = beta[p];
    return learner;
}

// g_m applied entitywise over the panel: out(t, j) = g_m(x_{t,j}).
Matrix learner_signal(const LinearLearner& g, const std::vector<Matrix>& x) {
    const auto [j1, j2, j3] = g.idx;
    const auto& b = g.beta;
    Matrix out = b[0] * x[std::size_t(j1)] + b[1] * x[std::size_t(j2)] +
                 b[2] * x[std::size_t(j3)];
    if (b[3] != 0.0) out += b[3] * x[std::size_t(j1)].cwiseProduct(x[std::size_t(j2)]);
    if (b[4] != 0.0) out += b[4] * x[std::size_t(j1)].cwiseProduct(x[std::size_t(j3)]);
    if (b[5] != 0.0) out += b[5] * x[std::size_t(j2)].cwiseProduct(x[std::size_t(j3)]);
    return out;
}

}  // namespace

double LinearLearner::eval(const Vector& x) const {
    const double x1 = x[idx[0]], x2 = x[idx[1]], x3 = x[idx[2]];
    return beta[0] * x1 + beta[1] * x2 + beta[2] * x3 + beta[3] * x1 * x2 +
           beta[4] * x1 * x3 + beta[5] * x2 * x3;
}

Matrix neighbor_features(const Matrix& k_hat, const Matrix& x_t) {
    if (x_t.rows() != k_hat.cols())
        fail(Status::invalid_dimension, "neighbor_features: shape mismatch");
    return (k_hat * x_t).transpose();
}

std::array<std::int64_t, 3> select_features(const std::vector<Matrix>& x,
                                            const Matrix& k_hat, const Matrix& y_res) {
    require_panel(x, k_hat, "select_features");
    if (x.size() < 3) fail(Status::invalid_dimension, "select_features: k must be >= 3");
    const auto mixed = mix_slices(x, k_hat);
    std::vector<double> scores(x.size());
    for (std::size_t f = 0; f < x.size(); ++f)
        scores[f] = correlation_score(mixed[f], y_res);
    return top3(scores);
}

LinearLearner fit_weak_learner(const Matrix& y_res, const std::vector<Matrix>& x,
                               const Matrix& k_hat, bool interactions) {
    require_panel(x, k_hat, "fit_weak_learner");
    if (y_res.rows() != x.front().rows() || y_res.cols() != x.front().cols())
        fail(Status::invalid_dimension, "fit_weak_learner: residual shape mismatch");
    return fit_from_mixed(y_res, x, mix_slices(x, k_hat), k_hat, interactions);
}

BoostResult boost(const Matrix& y, const std::vector<Matrix>& x, const Matrix& k_hat,
                  double eta, std::int64_t rounds, bool interactions) {
    require_panel(x, k_hat, "boost");
    if (!(eta > 0.0)) fail(Status::invalid_argument, "boost: eta must be > 0");
    if (rounds < 1) fail(Status::invalid_argument, "boost: rounds must be >= 1");
    if (y.rows() != x.front().rows() || y.cols() != x.front().cols())
        fail(Status::invalid_dimension, "boost: response shape mismatch");

    const auto mixed = mix_slices(x, k_hat);
    const double cells = static_cast<double>(y.size());

    BoostResult result;
    result.model.eta = eta;
    result.model.k = static_cast<std::int64_t>(x.size());
    result.model.interactions = interactions;
    Matrix residual = y;
    for (std::int64_t round = 0; round < rounds; ++round) {
        LinearLearner learner = fit_from_mixed(residual, x, mixed, k_hat, interactions);
        residual.noalias() -= eta * (learner_signal(learner, x) * k_hat.transpose());
        result.model.learners.push_back(learner);
        result.mse.push_back(residual.squaredNorm() / cells);
    }
    return result;
}

Matrix predict(const BoostedModel& model, const std::vector<Matrix>& x,
               const Matrix& k_hat) {
    require_panel(x, k_hat, "predict");
    if (static_cast<std::int64_t>(x.size()) != model.k)
        fail(Status::invalid_dimension, "predict: model expects k=" + std::to_string(model.k));
    Matrix signal = Matrix::Zero(x.front().rows(), x.front().cols());
    for (const auto& learner : model.learners)
        signal += model.eta * learner_signal(learner, x);
    return signal * k_hat.transpose();
}

}  // namespace lik
