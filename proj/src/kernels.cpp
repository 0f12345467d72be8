#include "amq/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace amq {

namespace {

struct SegmentRange {
    double lo, hi;
    double intercept;  // kernel on the segment is -t + intercept
};

SegmentRange segment_range(Segment seg, const KernelSpec& k) {
    if (seg == Segment::Left) return {0.0, k.mu, k.left_intercept};
    return {k.mu, 1.0, k.right_intercept};
}

// Integrates fn over [lo, hi] split at the kernel root when it is interior.
template <typename Integrate>
double split_at_root(const SegmentRange& s, Integrate&& integrate) {
    double r = std::clamp(s.intercept, s.lo, s.hi);
    return integrate(s.lo, r) + integrate(r, s.hi);
}

}  // namespace

KernelSpec KernelSpec::for_params(const ParamSet& p, RightIntercept variant) {
    KernelSpec k;
    k.left_intercept = p.lambda * (1.0 - p.mu);
    k.right_intercept = variant == RightIntercept::OneMinusLambdaMu
                            ? 1.0 - p.lambda * p.mu
                            : 1.0 - p.alpha * p.lambda;
    k.mu = p.mu;
    return k;
}

IdentityResidual identity_residual(const TestFunction& f, const ParamSet& p, double tol,
                                   RightIntercept variant) {
    const KernelSpec k = KernelSpec::for_params(p, variant);
    const double len = p.mb() - p.a;
    auto path = [&](double t) { return t * p.a + p.m * (1.0 - t) * p.b; };

    IdentityResidual r;
    r.integrator_tol = tol;
    r.lhs = quad_functional(f, p) - reference_integral(f.f, p.a, p.mb(), tol * len).value / len;

    auto left = [&](double t) { return k.left(t) * f.fprime(path(t)); };
    auto right = [&](double t) { return k.right(t) * f.fprime(path(t)); };
    r.rhs = len * (reference_integral(left, 0.0, p.mu, tol).value +
                   reference_integral(right, p.mu, 1.0, tol).value);
    r.residual = std::fabs(r.lhs - r.rhs);
    return r;
}

double oracle_plain(Segment seg, const ParamSet& p, double tol) {
    const KernelSpec k = KernelSpec::for_params(p);
    const SegmentRange s = segment_range(seg, k);
    auto integrand = [&](double t) { return std::fabs(-t + s.intercept); };
    return split_at_root(s, [&](double lo, double hi) {
        return reference_integral(integrand, lo, hi, tol / 2.0).value;
    });
}

double oracle_weighted(Segment seg, KernelWeight w, const ParamSet& p, double tol) {
    const KernelSpec k = KernelSpec::for_params(p);
    const SegmentRange s = segment_range(seg, k);
    auto integrand = [&](double t) {
        double weight = std::pow(t, p.alpha);
        if (w == KernelWeight::OneMinusTAlpha) weight = 1.0 - weight;
        return std::fabs(-t + s.intercept) * weight;
    };
    return split_at_root(s, [&](double lo, double hi) {
        return reference_integral(integrand, lo, hi, tol / 2.0).value;
    });
}

double oracle_power(Segment seg, const ParamSet& p, double pexp, double rel_tol) {
    if (!(pexp > 1.0)) throw std::invalid_argument("oracle_power: pexp must exceed 1");
    const KernelSpec k = KernelSpec::for_params(p);
    const SegmentRange s = segment_range(seg, k);
    auto integrand = [&](double t) { return std::pow(std::fabs(-t + s.intercept), pexp); };
    return split_at_root(s, [&](double lo, double hi) {
        return integrate_relative(integrand, lo, hi, rel_tol).value;
    });
}

}  // namespace amq
