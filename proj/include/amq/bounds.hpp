#pragma once

#include <array>
#include <optional>

#include "amq/convexity.hpp"
#include "amq/funcmodel.hpp"
#include "amq/quadrature.hpp"

namespace amq {

// Position of mu relative to the kernel roots lambda*(1-mu) and 1-lambda*mu.
//   C1: lambda*(1-mu) <= mu <= 1-lambda*mu
//   C2: mu <= lambda*(1-mu)
//   C3: 1-lambda*mu <= mu
// Ties resolve toward C2 on the left pivot and C1 on the right pivot; the
// adjacent closed forms agree at the boundaries, so the choice is
// observationally irrelevant.
enum class CaseId { C1 = 1, C2 = 2, C3 = 3 };

struct CoefficientSet22 {
    double eps1 = 0, eps2 = 0, eps3 = 0, eps4 = 0;
    double delta1 = 0, delta2 = 0, delta3 = 0, delta4 = 0;
    double beta1 = 0, beta2 = 0, beta3 = 0, beta4 = 0;
    CaseId case_id = CaseId::C1;
};

// theta entries are defined only in their own case (the other case would
// raise a negative base to a real power); inactive entries are NaN.
struct CoefficientSet24 {
    double theta1 = 0, theta2 = 0, theta3 = 0, theta4 = 0;
    double big_a = 0;  // mu * Hadamard upper bound of |f'|^q on [node, m*b]
    double big_b = 0;  // (1-mu) * Hadamard upper bound of |f'|^q on [a, node]
    double p = 0;
};

struct CoefficientSet26 {
    double a2 = 0;
    double b2 = 0;
    // Simpson specialization scaling, defined only at mu = 1/2 (else NaN):
    // a3 = 2^(alpha+1)*(alpha+1)*a2, b3 likewise.
    double a3 = 0;
    double b3 = 0;
};

struct HHCheck {
    double midpoint_value = 0;
    double mean = 0;
    double endpoint_average = 0;
    bool left_ok = false;
    bool right_ok = false;
};

struct BoundReport {
    ParamSet params;
    CaseId case_id = CaseId::C1;
    PathCertificate certificate;
    QuadResult quad;
    std::optional<double> bound_t22;
    std::optional<double> bound_c23;
    std::optional<double> bound_t24;
    std::optional<double> bound_t26;
    std::optional<double> bound_simpson_classical;
    std::optional<double> ratio_t22;
    std::optional<double> ratio_t24;
    std::optional<double> ratio_t26;
    // The Hadamard-min step of the q > 1 min-form bound needs more than the
    // path inequality: the two subinterval means of |f'|^q must actually sit
    // below the min forms (the proof's own displayed step). Recorded here;
    // the bound only gates domination when this holds.
    std::optional<bool> thm24_hypothesis_ok;
    double identity_residual = 0;
    // Set only when the certificate passes and an applicable theorem bound is
    // exceeded beyond the slack (the min-form bound additionally requires
    // thm24_hypothesis_ok).
    bool violation = false;
};

struct ReportOptions {
    double tol = 1e-10;        // integrator tolerance
    int cert_points = 4096;    // path-certificate resolution
    double cert_tol = 1e-12;   // path-certificate violation tolerance
    double slack = 1e-8;       // domination slack
};

CaseId select_case(const ParamSet& p);

// All twelve closed forms of the power-mean theorem, evaluated as displayed.
CoefficientSet22 coeffs_thm22(const ParamSet& p);

// theta coefficients for exponent pexp > 1; inactive entries NaN.
std::array<double, 4> thetas(double lambda, double mu, double pexp);

CoefficientSet24 coeffs_thm24(const TestFunction& f, const ParamSet& p);
CoefficientSet26 coeffs_thm26(const TestFunction& f, const ParamSet& p);

// Power-mean bound (q >= 1). For q = 1 this routes through bound_cor23 so the
// two are the same floating-point expression.
double bound_thm22(const TestFunction& f, const ParamSet& p);

// The q = 1 specialization, exactly as displayed (three cases).
double bound_cor23(const TestFunction& f, const ParamSet& p);

// The (mu = 1/2, lambda = 1/3) specialization with the starred coefficients;
// throws std::invalid_argument for other (lambda, mu).
double bound_cor23a(const TestFunction& f, const ParamSet& p);

// Hadamard-type upper bound for the mean of g over [lo, hi]:
// min{(g(lo) + alpha*m*g(hi/m))/(alpha+1), (g(hi) + alpha*m*g(lo/m))/(alpha+1)}.
double hadamard_upper(const RealFn& g, double alpha, double m, double lo, double hi);

// Hoelder bound with the Hadamard-min inner factors (q > 1); needs the
// m-divided evaluation points.
double bound_thm24(const TestFunction& f, const ParamSet& p);

// Hoelder bound with endpoint-only inner factors (q > 1).
double bound_thm26(const TestFunction& f, const ParamSet& p);

// Verifies the double inequality
//   f((lo+hi)/2) <= mean <= (f(lo)+f(hi))/2   (for convex f)
// against the reference integral, with slack.
HHCheck hh_check(const TestFunction& f, double lo, double hi, double tol = 1e-10,
                 double slack = 1e-9);

// Classical baseline (1/2880) * sup|f''''| * (hi-lo)^2 for the Simpson-weight
// functional; the sup is a sampled estimate (analytic fourth derivative when
// available, nested central differences otherwise).
double classical_simpson_bound(const TestFunction& f, double lo, double hi);

// Ratio convention: 0/0 -> 0 so constant functions do not poison sweeps.
double tightness_ratio(double err, double bound);

// Full per-point report: true error, every applicable bound, ratios,
// certificate, case, identity residual.
BoundReport bound_report(const TestFunction& f, const ParamSet& p,
                         const ReportOptions& opts = {});

}  // namespace amq
