#include "amq/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "amq/errors.hpp"
#include "amq/kernels.hpp"

namespace amq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double pos(double x) { return x > 0.0 ? x : 0.0; }

// |f'(x)|^q
double deriv_pow_q(const TestFunction& f, double x, double q) {
    double d = f.fprime(x);
    if (!std::isfinite(d)) throw EvalError("f' not finite", x);
    return std::pow(std::fabs(d), q);
}

void require_valid(const TestFunction& f, const ParamSet& p, TheoremId which) {
    ValidationResult pv = validate_params(p, which);
    if (!pv.ok()) throw std::invalid_argument("invalid parameters: " + pv.to_string());
    ValidationResult dv = validate_domain(p, f, which);
    if (!dv.ok()) throw DomainError("domain violation: " + dv.to_string());
}

struct HolderPieces {
    double theta_left;
    double theta_right;
    double p;
};

HolderPieces holder_pieces(const ParamSet& p) {
    const double pexp = p.holder_p();
    auto th = thetas(p.lambda, p.mu, pexp);
    const double r = p.lambda * (1.0 - p.mu);
    const double s = 1.0 - p.lambda * p.mu;
    // Left pivot mu vs r picks theta2/theta1, right pivot mu vs s picks
    // theta3/theta4; at ties both closed forms coincide.
    return HolderPieces{p.mu <= r ? th[1] : th[0], p.mu <= s ? th[2] : th[3], pexp};
}

double holder_combine(const ParamSet& p, double inner_left, double inner_right) {
    const HolderPieces hp = holder_pieces(p);
    const double ip = 1.0 / hp.p;
    const double iq = 1.0 / p.q;
    return (p.mb() - p.a) * std::pow(1.0 / (hp.p + 1.0), ip) *
           (std::pow(pos(hp.theta_left), ip) * std::pow(pos(inner_left), iq) +
            std::pow(pos(hp.theta_right), ip) * std::pow(pos(inner_right), iq));
}

}  // namespace

CaseId select_case(const ParamSet& p) {
    if (p.mu <= p.lambda * (1.0 - p.mu)) return CaseId::C2;
    if (p.mu <= 1.0 - p.lambda * p.mu) return CaseId::C1;
    return CaseId::C3;
}

CoefficientSet22 coeffs_thm22(const ParamSet& p) {
    const double mu = p.mu;
    const double r = p.lambda * (1.0 - mu);   // left kernel root
    const double s = 1.0 - p.lambda * mu;     // right kernel root
    const double a1 = p.alpha + 1.0;
    const double a2 = p.alpha + 2.0;
    const double mu_a1 = std::pow(mu, a1);
    const double mu_a2 = std::pow(mu, a2);

    CoefficientSet22 c;
    c.eps1 = -mu * mu / 2.0 + r * mu;
    c.eps2 = r * r - c.eps1;
    c.eps3 = s * s - s * (1.0 + mu) + (1.0 + mu * mu) / 2.0;
    c.eps4 = (1.0 - mu * mu) / 2.0 - s * (1.0 - mu);

    c.delta1 = r * mu_a1 / a1 - mu_a2 / a2;
    c.delta2 = r * mu - mu * mu / 2.0 - c.delta1;
    c.delta3 = 2.0 * std::pow(r, a2) / (a1 * a2) - r * mu_a1 / a1 + mu_a2 / a2;
    c.delta4 = r * r - p.lambda * mu * (1.0 - mu) + mu * mu / 2.0 - c.delta3;

    c.beta1 = 2.0 * std::pow(s, a2) / (a1 * a2) - s * (1.0 + mu_a1) / a1 + (1.0 + mu_a2) / a2;
    c.beta2 = s * s - s * (1.0 + mu) + (1.0 + mu * mu) / 2.0 - c.beta1;
    c.beta3 = (1.0 - mu_a2) / a2 - s * (1.0 - mu_a1) / a1;
    c.beta4 = s * (mu - 1.0) + (1.0 - mu * mu) / 2.0 - c.beta3;

    c.case_id = select_case(p);
    return c;
}

std::array<double, 4> thetas(double lambda, double mu, double pexp) {
    const double r = lambda * (1.0 - mu);
    const double s = 1.0 - lambda * mu;
    const double e = pexp + 1.0;
    std::array<double, 4> th{kNaN, kNaN, kNaN, kNaN};
    if (mu >= r) th[0] = std::pow(r, e) + std::pow(mu - r, e);
    if (mu <= r) th[1] = std::pow(r, e) - std::pow(r - mu, e);
    if (mu <= s) th[2] = std::pow(s - mu, e) + std::pow(lambda * mu, e);
    if (mu >= s) th[3] = std::pow(lambda * mu, e) - std::pow(mu - 1.0 + lambda * mu, e);
    return th;
}

double hadamard_upper(const RealFn& g, double alpha, double m, double lo, double hi) {
    const double first = (g(lo) + alpha * m * g(hi / m)) / (alpha + 1.0);
    const double second = (g(hi) + alpha * m * g(lo / m)) / (alpha + 1.0);
    return std::min(first, second);
}

CoefficientSet24 coeffs_thm24(const TestFunction& f, const ParamSet& p) {
    require_valid(f, p, TheoremId::Thm24);
    CoefficientSet24 c;
    c.p = p.holder_p();
    auto th = thetas(p.lambda, p.mu, c.p);
    c.theta1 = th[0];
    c.theta2 = th[1];
    c.theta3 = th[2];
    c.theta4 = th[3];

    auto g = [&](double x) { return deriv_pow_q(f, x, p.q); };
    const double node = p.node();
    c.big_a = p.mu == 0.0 ? 0.0 : p.mu * hadamard_upper(g, p.alpha, p.m, node, p.mb());
    c.big_b = p.mu == 1.0 ? 0.0 : (1.0 - p.mu) * hadamard_upper(g, p.alpha, p.m, p.a, node);
    return c;
}

CoefficientSet26 coeffs_thm26(const TestFunction& f, const ParamSet& p) {
    require_valid(f, p, TheoremId::Thm26);
    const double a1 = p.alpha + 1.0;
    const double mu_a1 = std::pow(p.mu, a1);
    const double daq = deriv_pow_q(f, p.a, p.q);
    const double dbq = deriv_pow_q(f, p.b, p.q);

    CoefficientSet26 c;
    c.a2 = (mu_a1 * daq + p.m * (p.mu * a1 - mu_a1) * dbq) / a1;
    c.b2 = ((1.0 - mu_a1) * daq + p.m * ((mu_a1 - 1.0) + (1.0 - p.mu) * a1) * dbq) / a1;
    if (p.mu == 0.5) {
        const double scale = std::pow(2.0, a1) * a1;
        c.a3 = scale * c.a2;
        c.b3 = scale * c.b2;
    } else {
        c.a3 = kNaN;
        c.b3 = kNaN;
    }
    return c;
}

double bound_thm22(const TestFunction& f, const ParamSet& p) {
    require_valid(f, p, TheoremId::Thm22);
    if (p.q == 1.0) return bound_cor23(f, p);

    const CoefficientSet22 c = coeffs_thm22(p);
    const double daq = deriv_pow_q(f, p.a, p.q);
    const double dbq = deriv_pow_q(f, p.b, p.q);
    const bool left_c2 = p.mu <= p.lambda * (1.0 - p.mu);
    const bool right_c3 = p.mu > 1.0 - p.lambda * p.mu;

    const double eps_l = left_c2 ? c.eps1 : c.eps2;
    const double del_i = left_c2 ? c.delta1 : c.delta3;
    const double del_j = left_c2 ? c.delta2 : c.delta4;
    const double eps_r = right_c3 ? c.eps4 : c.eps3;
    const double bet_i = right_c3 ? c.beta3 : c.beta1;
    const double bet_j = right_c3 ? c.beta4 : c.beta2;

    const double e = 1.0 - 1.0 / p.q;
    const double iq = 1.0 / p.q;
    return (p.mb() - p.a) *
           (std::pow(pos(eps_l), e) * std::pow(pos(del_i * daq + p.m * del_j * dbq), iq) +
            std::pow(pos(eps_r), e) * std::pow(pos(bet_i * daq + p.m * bet_j * dbq), iq));
}

double bound_cor23(const TestFunction& f, const ParamSet& p) {
    require_valid(f, p, TheoremId::Thm22);
    const CoefficientSet22 c = coeffs_thm22(p);
    const double da = std::fabs(f.fprime(p.a));
    const double db = std::fabs(f.fprime(p.b));
    double ca = 0.0, cb = 0.0;
    switch (c.case_id) {
        case CaseId::C1: ca = c.delta3 + c.beta1; cb = c.delta4 + c.beta2; break;
        case CaseId::C2: ca = c.delta1 + c.beta1; cb = c.delta2 + c.beta2; break;
        case CaseId::C3: ca = c.delta3 + c.beta3; cb = c.delta4 + c.beta4; break;
    }
    return (p.mb() - p.a) * (ca * da + p.m * cb * db);
}

double bound_cor23a(const TestFunction& f, const ParamSet& p) {
    if (p.lambda != 1.0 / 3.0 || p.mu != 0.5) {
        throw std::invalid_argument("bound_cor23a requires lambda = 1/3, mu = 1/2");
    }
    require_valid(f, p, TheoremId::Thm22);
    const double a1 = p.alpha + 1.0;
    const double a2 = p.alpha + 2.0;
    const double denom = std::pow(6.0, a2) * a1 * a2;
    const double delta3s = (2.0 + std::pow(3.0, a1) * (2.0 * p.alpha + 1.0)) / denom;
    const double beta1s = (2.0 * std::pow(5.0, a2) + std::pow(6.0, a1) * (p.alpha - 4.0) -
                           std::pow(3.0, a1) * (2.0 * p.alpha + 7.0)) /
                          denom;
    const double five72 = 5.0 / 72.0;
    const double daq = deriv_pow_q(f, p.a, p.q);
    const double dbq = deriv_pow_q(f, p.b, p.q);
    const double iq = 1.0 / p.q;
    return (p.mb() - p.a) * std::pow(five72, 1.0 - iq) *
           (std::pow(pos(delta3s * daq + p.m * (five72 - delta3s) * dbq), iq) +
            std::pow(pos(beta1s * daq + p.m * (five72 - beta1s) * dbq), iq));
}

double bound_thm24(const TestFunction& f, const ParamSet& p) {
    const CoefficientSet24 c = coeffs_thm24(f, p);
    return holder_combine(p, c.big_a, c.big_b);
}

double bound_thm26(const TestFunction& f, const ParamSet& p) {
    const CoefficientSet26 c = coeffs_thm26(f, p);
    return holder_combine(p, c.a2, c.b2);
}

HHCheck hh_check(const TestFunction& f, double lo, double hi, double tol, double slack) {
    HHCheck h;
    h.midpoint_value = f.f(0.5 * (lo + hi));
    h.endpoint_average = 0.5 * (f.f(lo) + f.f(hi));
    h.mean = reference_integral(f.f, lo, hi, tol * (hi - lo)).value / (hi - lo);
    h.left_ok = h.midpoint_value <= h.mean + slack;
    h.right_ok = h.mean <= h.endpoint_average + slack;
    return h;
}

double classical_simpson_bound(const TestFunction& f, double lo, double hi) {
    constexpr int kSamples = 10000;
    double sup = 0.0;
    if (f.f4_available()) {
        for (int i = 0; i <= kSamples; ++i) {
            double x = lo + (hi - lo) * i / kSamples;
            sup = std::max(sup, std::fabs(f.f4(x)));
        }
    } else {
        // 5-point central difference for the fourth derivative, interior grid.
        const double h = 1e-2;
        for (int i = 0; i <= kSamples; ++i) {
            double x = lo + (hi - lo) * i / kSamples;
            if (x - 2 * h < lo || x + 2 * h > hi) continue;
            double d4 = (f.f(x - 2 * h) - 4.0 * f.f(x - h) + 6.0 * f.f(x) - 4.0 * f.f(x + h) +
                         f.f(x + 2 * h)) /
                        (h * h * h * h);
            if (!std::isfinite(d4)) throw EvalError("fourth-difference not finite", x);
            sup = std::max(sup, std::fabs(d4));
        }
    }
    return sup * (hi - lo) * (hi - lo) / 2880.0;
}

double tightness_ratio(double err, double bound) {
    if (bound > 0.0) return err / bound;
    return err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

BoundReport bound_report(const TestFunction& f, const ParamSet& p, const ReportOptions& opts) {
    require_valid(f, p, TheoremId::Thm22);

    BoundReport rep;
    rep.params = p;
    rep.case_id = select_case(p);
    rep.certificate = check_path_hypothesis(f, p, opts.cert_points, opts.cert_tol);
    rep.quad = true_error(f, p, opts.tol);
    rep.identity_residual = identity_residual(f, p, opts.tol).residual;

    rep.bound_t22 = bound_thm22(f, p);
    rep.bound_c23 = bound_cor23(f, p);
    rep.ratio_t22 = tightness_ratio(rep.quad.true_error, *rep.bound_t22);

    if (p.q > 1.0) {
        if (validate_domain(p, f, TheoremId::Thm24).ok()) {
            const CoefficientSet24 c = coeffs_thm24(f, p);
            rep.bound_t24 = holder_combine(p, c.big_a, c.big_b);
            rep.ratio_t24 = tightness_ratio(rep.quad.true_error, *rep.bound_t24);
            // Proof steps behind the min forms: the subinterval integrals of
            // |f'|^q along the path must stay below A and B.
            auto gpath = [&](double t) {
                return deriv_pow_q(f, t * p.a + p.m * (1.0 - t) * p.b, p.q);
            };
            double left = p.mu == 0.0
                              ? 0.0
                              : reference_integral(gpath, 0.0, p.mu, opts.tol).value;
            double right = p.mu == 1.0
                               ? 0.0
                               : reference_integral(gpath, p.mu, 1.0, opts.tol).value;
            double slack24 = 1e-9 * (1.0 + c.big_a + c.big_b);
            rep.thm24_hypothesis_ok = left <= c.big_a + slack24 && right <= c.big_b + slack24;
        }
        rep.bound_t26 = bound_thm26(f, p);
        rep.ratio_t26 = tightness_ratio(rep.quad.true_error, *rep.bound_t26);
    }
    // The classical baseline compares the same functional only at the Simpson
    // weights on an unshrunk interval.
    if (p.lambda == 1.0 / 3.0 && p.mu == 0.5 && p.m == 1.0 && f.f4_available()) {
        rep.bound_simpson_classical = classical_simpson_bound(f, p.a, p.b);
    }

    if (rep.certificate.pass) {
        auto violated = [&](const std::optional<double>& b) {
            return b && rep.quad.true_error > *b + opts.slack;
        };
        rep.violation = violated(rep.bound_t22) || violated(rep.bound_t26) ||
                        (rep.thm24_hypothesis_ok.value_or(false) && violated(rep.bound_t24));
    }
    return rep;
}

}  // namespace amq
