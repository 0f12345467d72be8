#include "amq/kernels.hpp"

#include <cmath>
#include <random>

#include "amq/bounds.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace amq;

TEST_CASE("kernel roots sit at the intercepts") {
    ParamSet p{0.0, 1.0, 0.4, 0.3, 1.0, 1.0, 1.0};
    auto k = KernelSpec::for_params(p);
    CHECK(k.left(k.left_intercept) == 0.0);
    CHECK(k.right(k.right_intercept) == 0.0);
    // left root never exceeds right root, so cases 2 and 3 cannot coexist
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        ParamSet r = testsupport::random_coeff_params(rng);
        auto ks = KernelSpec::for_params(r);
        CHECK(ks.left_intercept <= ks.right_intercept);
    }
}

TEST_CASE("identity residual on x^2 at the Simpson point") {
    auto f = *find_function("x2");
    ParamSet p{0.0, 1.0, 1.0 / 3.0, 0.5, 1.0, 1.0, 1.0};
    auto r = identity_residual(f, p);
    CHECK(r.residual <= 1e-9);
}

TEST_CASE("identity on linear functions") {
    auto f = testsupport::make_fn("lin", [](double x) { return 2.0 * x + 1.0; },
                                  [](double) { return 2.0; });

    // both sides vanish at mu = 1/2 (zero-mean kernels)
    ParamSet mid{0.0, 1.0, 0.7, 0.5, 1.0, 0.8, 1.0};
    auto r_mid = identity_residual(f, mid);
    CHECK(std::fabs(r_mid.lhs) <= 1e-12);
    CHECK(std::fabs(r_mid.rhs) <= 1e-12);

    // general mu: both sides equal 2*(1/2 - mu)*(m*b - a)
    ParamSet gen{0.1, 1.4, 0.7, 0.3, 1.0, 0.8, 1.0};
    double expected = 2.0 * (0.5 - gen.mu) * (gen.mb() - gen.a);
    auto r_gen = identity_residual(f, gen);
    CHECK(r_gen.lhs == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r_gen.rhs == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r_gen.residual <= 1e-12);
}

TEST_CASE("identity residual over random draws on exp") {
    auto f = *find_function("exp");
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        ParamSet p = testsupport::random_param_set(rng);
        CHECK(identity_residual(f, p, 1e-10).residual <= 1e-8);
    }
}

TEST_CASE("right-intercept variant breaks the identity when alpha != mu") {
    auto f = *find_function("exp");
    ParamSet p{0.0, 1.0, 1.0 / 3.0, 0.5, 1.0, 1.0, 1.0};
    CHECK(identity_residual(f, p, 1e-10, RightIntercept::OneMinusLambdaMu).residual <= 1e-8);
    CHECK(identity_residual(f, p, 1e-10, RightIntercept::OneMinusAlphaLambda).residual > 1e-3);
}

TEST_CASE("plain oracle: Simpson point gives 5/72 on both segments") {
    ParamSet p{0.0, 1.0, 1.0 / 3.0, 0.5, 1.0, 1.0, 1.0};
    CHECK(std::fabs(oracle_plain(Segment::Left, p) - 5.0 / 72.0) <= 1e-10);
    CHECK(std::fabs(oracle_plain(Segment::Right, p) - 5.0 / 72.0) <= 1e-10);
}

TEST_CASE("plain oracle: empty left segment at mu = 0") {
    ParamSet p{0.0, 1.0, 0.4, 0.0, 1.0, 1.0, 1.0};
    CHECK(oracle_plain(Segment::Left, p) == 0.0);
}

TEST_CASE("weighted oracle reproduces 29/1296 and 61/1296") {
    ParamSet p{0.0, 1.0, 1.0 / 3.0, 0.5, 1.0, 1.0, 1.0};
    CHECK(std::fabs(oracle_weighted(Segment::Left, KernelWeight::TAlpha, p) - 29.0 / 1296.0) <=
          1e-10);
    CHECK(std::fabs(oracle_weighted(Segment::Right, KernelWeight::TAlpha, p) - 61.0 / 1296.0) <=
          1e-10);
}

TEST_CASE("weights t^alpha and 1-t^alpha sum to the plain kernel integral") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        ParamSet p = testsupport::random_coeff_params(rng);
        for (Segment seg : {Segment::Left, Segment::Right}) {
            double plain = oracle_plain(seg, p);
            double wt = oracle_weighted(seg, KernelWeight::TAlpha, p);
            double w1t = oracle_weighted(seg, KernelWeight::OneMinusTAlpha, p);
            CHECK(std::fabs(wt + w1t - plain) <= 1e-9);
        }
    }
}

TEST_CASE("power oracle examples") {
    ParamSet p{0.0, 1.0, 1.0 / 3.0, 0.5, 1.0, 1.0, 1.0};
    CHECK(std::fabs(oracle_power(Segment::Left, p, 2.0) - 1.0 / 72.0) <= 1e-10);

    ParamSet mu1{0.0, 1.0, 0.4, 1.0, 1.0, 1.0, 1.0};
    CHECK(oracle_power(Segment::Right, mu1, 2.0) == 0.0);

    // lambda = 0: integral of t^p over [0, mu]
    ParamSet l0{0.0, 1.0, 0.0, 0.7, 1.0, 1.0, 1.0};
    double expect = std::pow(0.7, 3.5) / 3.5;
    CHECK(std::fabs(oracle_power(Segment::Left, l0, 2.5) - expect) <= 1e-10 * expect);
}

TEST_CASE("closed-form coefficients match the oracles on random draws") {
    std::mt19937_64 rng(23);
    const double pset[4] = {1.5, 2.0, 3.0, 5.0};
    for (int i = 0; i < 300; ++i) {
        ParamSet p = testsupport::random_coeff_params(rng);
        auto c = coeffs_thm22(p);
        const bool left_c2 = p.mu <= p.lambda * (1.0 - p.mu);
        const bool right_c3 = p.mu > 1.0 - p.lambda * p.mu;

        CHECK(std::fabs(oracle_plain(Segment::Left, p) - (left_c2 ? c.eps1 : c.eps2)) <= 1e-9);
        CHECK(std::fabs(oracle_plain(Segment::Right, p) - (right_c3 ? c.eps4 : c.eps3)) <= 1e-9);
        CHECK(std::fabs(oracle_weighted(Segment::Left, KernelWeight::TAlpha, p) -
                        (left_c2 ? c.delta1 : c.delta3)) <= 1e-9);
        CHECK(std::fabs(oracle_weighted(Segment::Left, KernelWeight::OneMinusTAlpha, p) -
                        (left_c2 ? c.delta2 : c.delta4)) <= 1e-9);
        CHECK(std::fabs(oracle_weighted(Segment::Right, KernelWeight::TAlpha, p) -
                        (right_c3 ? c.beta3 : c.beta1)) <= 1e-9);
        CHECK(std::fabs(oracle_weighted(Segment::Right, KernelWeight::OneMinusTAlpha, p) -
                        (right_c3 ? c.beta4 : c.beta2)) <= 1e-9);

        double pexp = pset[i % 4];
        auto th = thetas(p.lambda, p.mu, pexp);
        double tl = left_c2 ? th[1] : th[0];
        double tr = right_c3 ? th[3] : th[2];
        double ol = (pexp + 1.0) * oracle_power(Segment::Left, p, pexp);
        double orr = (pexp + 1.0) * oracle_power(Segment::Right, p, pexp);
        CHECK(std::fabs(ol - tl) <= 1e-8 * std::max(tl, 1e-300));
        CHECK(std::fabs(orr - tr) <= 1e-8 * std::max(tr, 1e-300));
    }
}

TEST_CASE("adjacent closed forms agree at the case boundaries") {
    // The formulas differ only through |mu - root|^(e) terms whose base
    // vanishes at the boundary; evaluate both with the base clamped at zero
    // (the rounded boundary point can land a few ulp on either side).
    auto powc = [](double base, double e) { return std::pow(std::max(base, 0.0), e); };
    std::mt19937_64 rng(29);
    for (int i = 0; i < 60; ++i) {
        double lambda = 0.05 + 0.95 * testsupport::uniform01(rng);
        double alpha = 1.0 - testsupport::uniform01(rng);
        double pexp = 1.5 + 3.0 * testsupport::uniform01(rng);

        // mu = lambda*(1-mu)  <=>  mu = lambda/(1+lambda)
        ParamSet pl{0.0, 1.0, lambda, lambda / (1.0 + lambda), alpha, 1.0, 2.0};
        auto cl = coeffs_thm22(pl);
        CHECK(std::fabs(cl.eps1 - cl.eps2) <= 1e-12);
        CHECK(std::fabs(cl.delta1 - cl.delta3) <= 1e-12);
        CHECK(std::fabs(cl.delta2 - cl.delta4) <= 1e-12);
        {
            double r = pl.lambda * (1.0 - pl.mu), e = pexp + 1.0;
            double th1 = std::pow(r, e) + powc(pl.mu - r, e);
            double th2 = std::pow(r, e) - powc(r - pl.mu, e);
            CHECK(std::fabs(th1 - th2) <= 1e-12);
        }

        // mu = 1 - lambda*mu  <=>  mu = 1/(1+lambda)
        ParamSet pr{0.0, 1.0, lambda, 1.0 / (1.0 + lambda), alpha, 1.0, 2.0};
        auto cr = coeffs_thm22(pr);
        CHECK(std::fabs(cr.eps3 - cr.eps4) <= 1e-12);
        CHECK(std::fabs(cr.beta1 - cr.beta3) <= 1e-12);
        CHECK(std::fabs(cr.beta2 - cr.beta4) <= 1e-12);
        {
            double s = 1.0 - pr.lambda * pr.mu, e = pexp + 1.0;
            double lm = pr.lambda * pr.mu;
            double th3 = powc(s - pr.mu, e) + std::pow(lm, e);
            double th4 = std::pow(lm, e) - powc(pr.mu - s, e);
            CHECK(std::fabs(th3 - th4) <= 1e-12);
        }
    }
}

TEST_CASE("identity residual stays within 10x the integrator tolerance") {
    std::mt19937_64 rng(31);
    for (const auto& f : catalog()) {
        for (int i = 0; i < 20; ++i) {
            ParamSet p = testsupport::random_param_set(rng);
            auto r = identity_residual(f, p, 1e-9);
            CHECK_MESSAGE(r.residual <= 10.0 * 1e-9, f.id);
        }
    }
}
