#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace amq {

using RealFn = std::function<double(double)>;

// The parameter tuple (a, b, lambda, mu, alpha, m, q) driving every bound.
// The quadrature functional lives on [a, m*b]; b itself only generates the
// right endpoint, so validity demands m*b > a in addition to a < b.
struct ParamSet {
    double a = 0.0;
    double b = 1.0;
    double lambda = 1.0 / 3.0;
    double mu = 0.5;
    double alpha = 1.0;
    double m = 1.0;
    double q = 1.0;

    double mb() const { return m * b; }
    // The interior node mu*a + m*(1-mu)*b.
    double node() const { return mu * a + m * (1.0 - mu) * b; }
    // Hoelder conjugate p = q/(q-1); only meaningful for q > 1.
    double holder_p() const { return q / (q - 1.0); }
};

struct ValidationResult {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

enum class TheoremId { Thm22, Thm24, Thm26 };

// A scalar test function with analytic derivative, trusted on [0, domain_upper].
// `f4` may be empty; when present it is the analytic fourth derivative used by
// the classical Simpson baseline.
struct TestFunction {
    std::string id;
    double domain_upper = 0.0;
    RealFn f;
    RealFn fprime;
    RealFn f4;
    // Advisory note on when |f'|^q is expected to satisfy the convexity
    // hypothesis; certificates are authoritative.
    std::string convexity_note;

    bool f4_available() const { return static_cast<bool>(f4); }
};

// Baseline hypothesis check: lambda, mu in [0,1], alpha, m in (0,1],
// 0 <= a < b, m*b > a, q >= 1. Total function; never throws.
ValidationResult validate_params(const ParamSet& p);

// Adds the per-theorem strictness: Thm 2.4 and Thm 2.6 require q > 1.
ValidationResult validate_params(const ParamSet& p, TheoremId which);

// The evaluation points the selected bound touches, with labels.
// Thm 2.2 / 2.6 need {a, b, m*b, node}; Thm 2.4 additionally needs the
// m-divided points {a/m, node/m}.
std::vector<std::pair<std::string, double>> eval_points(const ParamSet& p, TheoremId which);

// Checks that every point demanded by `which` lies in [0, domain_upper].
// Reports each out-of-domain point by name.
ValidationResult validate_domain(const ParamSet& p, const TestFunction& f, TheoremId which);

// Built-in catalog: x^2, exp, x*exp(x), 1/(1+x) on [0, domain_upper] and
// sin on [0, pi]. Five entries, all with analytic first and fourth derivatives.
std::vector<TestFunction> catalog(double domain_upper = 4.0);

// Power family x -> x^s for s >= 1, with analytic derivative; the fourth
// derivative is attached for integer s (it vanishes identically for s <= 3).
TestFunction power_function(double s, double domain_upper = 4.0);

// Looks up a catalog entry by id; also accepts power ids of the form
// "x<exponent>" such as "x3" or "x4".
std::optional<TestFunction> find_function(const std::string& id, double domain_upper = 4.0);

// Max over n interior samples of |fprime - central difference| / (1 + |fprime|).
// Catalog entries stay below 1e-6 with h = 1e-5.
double derivative_consistency(const TestFunction& f, int n_samples = 1000, double h = 1e-5);

}  // namespace amq
