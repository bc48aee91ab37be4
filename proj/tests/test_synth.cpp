#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "lik/linalg.hpp"
#include "lik/synth.hpp"

using namespace lik;

TEST_CASE("kernel_eval matches closed forms and is symmetric") {
    Vector a(2), b(2);
    a << 0.3, -0.2;
    b << 0.3, -0.2;
    auto gauss = KernelSpec::gaussian_kernel(1.0);
    CHECK(kernel_eval(gauss, a, a) == doctest::Approx(1.0));

    b << 0.3 + 1.0, -0.2;  // |a-b| = 1
    CHECK(kernel_eval(gauss, a, b) == doctest::Approx(std::exp(-1.0)));
    CHECK(kernel_eval(gauss, a, b) == kernel_eval(gauss, b, a));

    auto imq = KernelSpec::imq_kernel(1.0, 1.0);
    Vector c(1), d(1);
    c << 0.0;
    d << std::sqrt(3.0);  // |c-d|^2 = 3
    CHECK(kernel_eval(imq, c, d) == doctest::Approx(0.25));

    auto inner = KernelSpec::inner_product_kernel();
    CHECK(kernel_eval(inner, a, b) == doctest::Approx(a.dot(b)));

    Vector e(3);
    e.setZero();
    CHECK_THROWS_AS(kernel_eval(gauss, a, e), Error);
}

TEST_CASE("kernel spec validation and parsing") {
    CHECK_THROWS_AS(KernelSpec::gaussian_kernel(0.0), Error);
    CHECK_THROWS_AS(KernelSpec::imq_kernel(-1.0, 1.0), Error);
    CHECK(KernelSpec::parse("gaussian:2").sigma == doctest::Approx(2.0));
    CHECK(KernelSpec::parse("imq:1.5,0.5").alpha == doctest::Approx(0.5));
    CHECK(KernelSpec::parse("inner").kind == KernelSpec::Kind::inner_product);
    CHECK_THROWS_AS(KernelSpec::parse("rbf:1"), Error);
    CHECK(KernelSpec::parse(KernelSpec::gaussian_kernel(0.7).to_string()).sigma ==
          doctest::Approx(0.7));
}

TEST_CASE("gram_matrix trivial cases") {
    auto gauss = KernelSpec::gaussian_kernel(1.0);

    Matrix z(2, 2);
    z << 0.5, -0.5, 0.5, -0.5;  // identical rows
    Matrix k = gram_matrix(z, gauss);
    CHECK(k(0, 0) == doctest::Approx(1.0));
    CHECK(k(0, 1) == doctest::Approx(1.0));
    CHECK(k(1, 0) == doctest::Approx(1.0));

    Matrix eye = Matrix::Identity(2, 2);
    Matrix k_inner = gram_matrix(eye, KernelSpec::inner_product_kernel());
    CHECK(k_inner(0, 0) == doctest::Approx(1.0));
    CHECK(k_inner(0, 1) == doctest::Approx(0.0));

    Matrix z1(2, 1);
    z1 << 0.0, 1.0;
    Matrix k1 = gram_matrix(z1, gauss);
    CHECK(k1(0, 1) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("gram_matrix symmetry and PSD for all kernel kinds") {
    const std::int64_t d = 40;
    Matrix z = sample_latent_positions(d, 3, 11);
    for (const auto& kernel :
         {KernelSpec::gaussian_kernel(0.8), KernelSpec::imq_kernel(1.2, 0.7),
          KernelSpec::inner_product_kernel()}) {
        Matrix k = gram_matrix(z, kernel);
        CHECK((k - k.transpose()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
        auto spec = eig_sym(k);
        CHECK(spec.eigenvalues.minCoeff() >= -1e-10 * static_cast<double>(d));
        if (kernel.kind != KernelSpec::Kind::inner_product)
            CHECK(k.minCoeff() > 0.0);
    }
}

TEST_CASE("sample_latent_positions determinism and range") {
    Matrix a = sample_latent_positions(3, 2, 7);
    Matrix b = sample_latent_positions(3, 2, 7);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.maxCoeff() <= 1.0);
    CHECK(a.minCoeff() >= -1.0);

    // CLT bound on the empirical mean at d = 1e4
    Matrix big = sample_latent_positions(10000, 1, 42);
    CHECK(std::abs(big.mean()) < 0.02);

    CHECK_THROWS_AS(sample_latent_positions(1, 2, 0), Error);
    CHECK_THROWS_AS(sample_latent_positions(5, 0, 0), Error);
}

TEST_CASE("signal functions are centered") {
    // E[g] over 1e6 uniform draws within 10 * (std / 1e3) of 0
    for (const auto& spec : {"poly:1,2,0.5", "sin:3,2", "piecewise:-1,0,1;2,-0.5"}) {
        auto g = SignalFn::parse(spec);
        SplitMix64 rng(99);
        double acc = 0.0, acc2 = 0.0;
        const int draws = 1'000'000;
        for (int i = 0; i < draws; ++i) {
            const double v = g.eval1(rng.uniform(-1.0, 1.0));
            acc += v;
            acc2 += v * v;
        }
        const double mean = acc / draws;
        const double sd = std::sqrt(std::max(0.0, acc2 / draws - mean * mean));
        CHECK(std::abs(mean) <= 10.0 * sd / 1000.0 + 1e-12);
    }
}

TEST_CASE("signal parsing round-trips and k-dim lift sums coordinates") {
    auto g = SignalFn::parse("poly:0,1");
    Vector x(3);
    x << 0.1, 0.2, 0.3;
    CHECK(g.eval(x) == doctest::Approx(g.eval1(0.1) + g.eval1(0.2) + g.eval1(0.3)));
    auto round = SignalFn::parse(g.to_string());
    CHECK(round.eval1(0.37) == doctest::Approx(g.eval1(0.37)));
    CHECK_THROWS_AS(SignalFn::parse("piecewise:0,1;1,2,3"), Error);
}

TEST_CASE("generate_panel zero signal and zero noise give zero response") {
    auto model = make_latent_model(10, 2, KernelSpec::gaussian_kernel(1.0), SignalFn::zero(),
                                   0.0, 1);
    auto panel = generate_panel(model, 20, 1, 2);
    CHECK(panel.y.cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("generate_panel reconstruction: Y = S K exactly when noise free") {
    auto model = make_latent_model(30, 2, KernelSpec::gaussian_kernel(1.0),
                                   SignalFn::parse("poly:0,1,0,2"), 0.0, 3);
    auto panel = generate_panel(model, 50, 2, 4);
    Matrix k = gram_matrix(model.z, model.kernel);
    CHECK((panel.y - panel.s * k).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(panel.x[0].maxCoeff() <= 1.0);
    CHECK(panel.x[0].minCoeff() >= -1.0);
}

TEST_CASE("generate_panel determinism, independent of thread budget") {
    auto model = make_latent_model(25, 2, KernelSpec::imq_kernel(1.0, 1.0),
                                   SignalFn::parse("sin:2,1"), 0.5, 9);
    auto a = generate_panel(model, 64, 2, 10);
    auto b = generate_panel(model, 64, 2, 10);
    CHECK((a.y - b.y).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.x[1] - b.x[1]).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("panel signal variance matches a Monte-Carlo oracle of g") {
    auto g = SignalFn::parse("poly:0,0,0,1");
    auto model = make_latent_model(200, 2, KernelSpec::gaussian_kernel(1.0), g, 0.0, 5);
    auto panel = generate_panel(model, 2000, 1, 6);

    const double mean = panel.s.mean();
    const double var =
        (panel.s.array() - mean).square().sum() / static_cast<double>(panel.s.size());

    SplitMix64 rng(123);
    double acc = 0.0, acc2 = 0.0;
    const int draws = 1'000'000;
    for (int i = 0; i < draws; ++i) {
        Vector x(1);
        x << rng.uniform(-1.0, 1.0);
        const double v = g.eval(x);
        acc += v;
        acc2 += v * v;
    }
    const double mc_var = acc2 / draws - (acc / draws) * (acc / draws);
    CHECK(var == doctest::Approx(mc_var).epsilon(0.05));
}

TEST_CASE("kernel spectrum decays fast (d=500 fixture)") {
    // observed ratio on this fixture: ~3.2e-4
    auto model = make_latent_model(500, 2, KernelSpec::gaussian_kernel(1.0),
                                   SignalFn::zero(), 0.0, 7);
    Matrix k = gram_matrix(model.z, model.kernel);
    auto spec = eig_sym(Matrix(k / 500.0));
    CHECK(spec.eigenvalues[19] / spec.eigenvalues[0] < 0.05);
}

TEST_CASE("generate_panel input validation") {
    auto model = make_latent_model(5, 1, KernelSpec::gaussian_kernel(1.0), SignalFn::zero(),
                                   0.0, 1);
    CHECK_THROWS_AS(generate_panel(model, 0, 1, 0), Error);
    CHECK_THROWS_AS(generate_panel(model, 5, 0, 0), Error);
    CHECK_THROWS_AS(make_latent_model(5, 1, KernelSpec::gaussian_kernel(1.0),
                                      SignalFn::zero(), -1.0, 1),
                    Error);
}
