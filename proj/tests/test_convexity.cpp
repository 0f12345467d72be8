#include "amq/convexity.hpp"

#include <cmath>
#include <numbers>

#include "amq/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace amq;

TEST_CASE("linear g is convex at (alpha, m) = (1, 1)") {
    auto cert = check_am_convex([](double x) { return 2.0 * x; }, 1.0, 1.0, 1.0);
    CHECK(cert.pass);
    CHECK(cert.max_violation <= 1e-12);
}

TEST_CASE("constant g: pass at m = 1, fail at m < 1") {
    auto g = [](double) { return 3.0; };
    CHECK(check_am_convex(g, 0.5, 1.0, 1.0).pass);
    auto cert = check_am_convex(g, 0.5, 0.5, 1.0);
    CHECK_FALSE(cert.pass);
    // violation series is c*(1-m)*(1-t^alpha); max at t = 0
    CHECK(cert.max_violation == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("|cos| on [0, pi] is not convex; witness attains the max") {
    auto g = [](double x) { return std::fabs(std::cos(x)); };
    auto cert = check_am_convex(g, 1.0, 1.0, std::numbers::pi);
    CHECK_FALSE(cert.pass);
    CHECK(cert.max_violation > 0.1);
    double at_witness =
        g(cert.witness_t * cert.witness_x + (1.0 - cert.witness_t) * cert.witness_y) -
        (cert.witness_t * g(cert.witness_x) + (1.0 - cert.witness_t) * g(cert.witness_y));
    CHECK(at_witness == doctest::Approx(cert.max_violation).epsilon(1e-12));
}

TEST_CASE("alpha = m = 1 agrees with a plain convexity scan on the same grid") {
    auto g = [](double x) { return std::exp(x) + std::sin(3.0 * x); };
    GridSize3 grid{32, 32, 32};
    auto cert = check_am_convex(g, 1.0, 1.0, 2.0, grid, 1e-12);

    double plain_worst = 0.0;
    for (int i = 0; i <= grid.nx; ++i)
        for (int j = 0; j <= grid.ny; ++j)
            for (int k = 0; k <= grid.nt; ++k) {
                double x = 2.0 * i / grid.nx, y = 2.0 * j / grid.ny;
                double t = static_cast<double>(k) / grid.nt;
                plain_worst = std::max(
                    plain_worst, g(t * x + (1 - t) * y) - (t * g(x) + (1 - t) * g(y)));
            }
    CHECK(cert.max_violation == doctest::Approx(plain_worst).epsilon(1e-12));
}

TEST_CASE("grid refinement by doubling never decreases the violation") {
    auto g = [](double x) { return std::fabs(std::cos(x)); };
    double v32 = check_am_convex(g, 1.0, 1.0, std::numbers::pi, {32, 32, 32}).max_violation;
    double v64 = check_am_convex(g, 1.0, 1.0, std::numbers::pi, {64, 64, 64}).max_violation;
    double v128 = check_am_convex(g, 1.0, 1.0, std::numbers::pi, {128, 128, 128}).max_violation;
    CHECK(v64 >= v32);
    CHECK(v128 >= v64);
}

TEST_CASE("non-finite g reports the offending point") {
    auto g = [](double x) { return 1.0 / x; };  // inf at the x = 0 grid point
    CHECK_THROWS_AS(check_am_convex(g, 1.0, 1.0, 1.0), EvalError);
}

TEST_CASE("path hypothesis: |f'| of x^2 passes at (1,1)") {
    auto f = *find_function("x2");
    ParamSet p{0.0, 1.0, 1.0 / 3.0, 0.5, 1.0, 1.0, 1.0};
    auto cert = check_path_hypothesis(f, p);
    CHECK(cert.pass);
    CHECK(cert.max_violation == 0.0);
}

TEST_CASE("path hypothesis: exp with q = 2 passes at (1,1)") {
    auto f = *find_function("exp");
    ParamSet p{0.0, 1.0, 1.0 / 3.0, 0.5, 1.0, 1.0, 2.0};
    CHECK(check_path_hypothesis(f, p).pass);
}

TEST_CASE("path hypothesis: concave non-linear |f'| fails") {
    // |f'| = sqrt(1+x): concave, strictly non-linear
    auto f = testsupport::make_fn(
        "sqrtp", [](double x) { return 2.0 / 3.0 * std::pow(1.0 + x, 1.5); },
        [](double x) { return std::sqrt(1.0 + x); });
    ParamSet p{0.0, 1.0, 1.0 / 3.0, 0.5, 1.0, 1.0, 1.0};
    auto cert = check_path_hypothesis(f, p);
    CHECK_FALSE(cert.pass);
    CHECK(cert.max_violation > 0.0);
}

TEST_CASE("full-definition pass implies path pass") {
    std::mt19937_64 rng(11);
    for (const auto& f : catalog()) {
        for (int i = 0; i < 8; ++i) {
            ParamSet p;
            p.a = 0.0;
            p.b = 1.0;
            p.lambda = 0.3;
            p.mu = 0.5;
            p.alpha = 1.0 - testsupport::uniform01(rng);
            p.m = 1.0 - testsupport::uniform01(rng);
            p.q = 1.0 + 2.0 * testsupport::uniform01(rng);
            auto g = [&](double x) { return std::pow(std::fabs(f.fprime(x)), p.q); };
            auto full = check_am_convex(g, p.alpha, p.m, f.domain_upper, {48, 48, 48});
            if (full.pass) CHECK(check_path_hypothesis(f, p).pass);
        }
    }
}

TEST_CASE("class labels") {
    CHECK(classify_class(0.0, 0.0) == "increasing");
    CHECK(classify_class(0.5, 0.0) == "alpha-starshaped");
    CHECK(classify_class(1.0, 0.0) == "starshaped");
    CHECK(classify_class(1.0, 0.7) == "m-convex");
    CHECK(classify_class(1.0, 1.0) == "convex");
    CHECK(classify_class(0.5, 1.0) == "alpha-convex");
    CHECK(classify_class(0.5, 0.7) == "general (alpha,m)");
}
