#include "amq/funcmodel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace amq {

namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }
bool in_half_open_unit(double x) { return x > 0.0 && x <= 1.0; }

void require(std::vector<std::string>& out, bool cond, const std::string& msg) {
    if (!cond) out.push_back(msg);
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

std::string ValidationResult::to_string() const {
    if (violations.empty()) return "ok";
    std::string s;
    for (const auto& v : violations) {
        if (!s.empty()) s += "; ";
        s += v;
    }
    return s;
}

ValidationResult validate_params(const ParamSet& p) {
    ValidationResult r;
    require(r.violations, p.a >= 0.0, "0 <= a fails (a=" + fmt(p.a) + ")");
    require(r.violations, p.a < p.b, "a < b fails (a=" + fmt(p.a) + ", b=" + fmt(p.b) + ")");
    require(r.violations, p.m * p.b > p.a,
            "m*b > a fails (m*b=" + fmt(p.m * p.b) + ", a=" + fmt(p.a) + ")");
    require(r.violations, in_unit_interval(p.lambda), "lambda in [0,1] fails (lambda=" + fmt(p.lambda) + ")");
    require(r.violations, in_unit_interval(p.mu), "mu in [0,1] fails (mu=" + fmt(p.mu) + ")");
    require(r.violations, in_half_open_unit(p.alpha), "alpha in (0,1] fails (alpha=" + fmt(p.alpha) + ")");
    require(r.violations, in_half_open_unit(p.m), "m in (0,1] fails (m=" + fmt(p.m) + ")");
    require(r.violations, p.q >= 1.0, "q >= 1 fails (q=" + fmt(p.q) + ")");
    return r;
}

ValidationResult validate_params(const ParamSet& p, TheoremId which) {
    ValidationResult r = validate_params(p);
    if (which == TheoremId::Thm24 || which == TheoremId::Thm26) {
        require(r.violations, p.q > 1.0, "q > 1 fails (q=" + fmt(p.q) + ")");
    }
    return r;
}

std::vector<std::pair<std::string, double>> eval_points(const ParamSet& p, TheoremId which) {
    std::vector<std::pair<std::string, double>> pts = {
        {"a", p.a},
        {"b", p.b},
        {"m*b", p.mb()},
        {"mu*a+m*(1-mu)*b", p.node()},
    };
    if (which == TheoremId::Thm24) {
        pts.emplace_back("a/m", p.a / p.m);
        pts.emplace_back("(mu*a+m*(1-mu)*b)/m", p.node() / p.m);
    }
    return pts;
}

ValidationResult validate_domain(const ParamSet& p, const TestFunction& f, TheoremId which) {
    ValidationResult r;
    for (const auto& [name, x] : eval_points(p, which)) {
        if (!(x >= 0.0 && x <= f.domain_upper)) {
            r.violations.push_back("point " + name + " = " + fmt(x) + " outside [0, " +
                                   fmt(f.domain_upper) + "] of function '" + f.id + "'");
        }
    }
    return r;
}

TestFunction power_function(double s, double domain_upper) {
    TestFunction tf;
    tf.id = "x" + fmt(s);
    tf.domain_upper = domain_upper;
    tf.f = [s](double x) { return std::pow(x, s); };
    tf.fprime = [s](double x) { return s * std::pow(x, s - 1.0); };
    if (s >= 1.0 && s == std::floor(s)) {
        double c = s * (s - 1.0) * (s - 2.0) * (s - 3.0);
        tf.f4 = [s, c](double x) { return s <= 3.0 ? 0.0 : c * std::pow(x, s - 4.0); };
    }
    tf.convexity_note =
        "|f'|^q passes the path hypothesis for alpha=1 and any m, q; "
        "alpha<1 needs m<1 and q>1";
    return tf;
}

std::vector<TestFunction> catalog(double domain_upper) {
    std::vector<TestFunction> fns;

    fns.push_back(power_function(2.0, domain_upper));

    TestFunction e;
    e.id = "exp";
    e.domain_upper = domain_upper;
    e.f = [](double x) { return std::exp(x); };
    e.fprime = e.f;
    e.f4 = e.f;
    e.convexity_note = "|f'|^q convex; for m<1 the endpoint condition needs q large enough";
    fns.push_back(e);

    TestFunction xe;
    xe.id = "xexp";
    xe.domain_upper = domain_upper;
    xe.f = [](double x) { return x * std::exp(x); };
    xe.fprime = [](double x) { return (1.0 + x) * std::exp(x); };
    xe.f4 = [](double x) { return (4.0 + x) * std::exp(x); };
    xe.convexity_note = "|f'|^q convex and increasing; behaves like the power family for m<1";
    fns.push_back(xe);

    TestFunction inv;
    inv.id = "inv1p";
    inv.domain_upper = domain_upper;
    inv.f = [](double x) { return 1.0 / (1.0 + x); };
    inv.fprime = [](double x) { return -1.0 / ((1.0 + x) * (1.0 + x)); };
    inv.f4 = [](double x) { return 24.0 / std::pow(1.0 + x, 5.0); };
    inv.convexity_note = "|f'|^q convex but decreasing; fails the hypothesis for m<1";
    fns.push_back(inv);

    TestFunction s;
    s.id = "sin";
    s.domain_upper = std::numbers::pi;
    s.f = [](double x) { return std::sin(x); };
    s.fprime = [](double x) { return std::cos(x); };
    s.f4 = [](double x) { return std::sin(x); };
    s.convexity_note = "|f'| = |cos| is not convex on [0, pi]; negative control";
    fns.push_back(s);

    return fns;
}

std::optional<TestFunction> find_function(const std::string& id, double domain_upper) {
    for (auto& f : catalog(domain_upper)) {
        if (f.id == id) return f;
    }
    // Power ids: "x" followed by the exponent, e.g. "x4" or "x1.5".
    if (id.size() > 1 && id[0] == 'x') {
        try {
            size_t used = 0;
            double s = std::stod(id.substr(1), &used);
            if (used == id.size() - 1 && s >= 1.0) return power_function(s, domain_upper);
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

double derivative_consistency(const TestFunction& f, int n_samples, double h) {
    double worst = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        double x = f.domain_upper * (i + 0.5) / n_samples;
        if (x - h < 0.0 || x + h > f.domain_upper) continue;
        double fd = (f.f(x + h) - f.f(x - h)) / (2.0 * h);
        double d = f.fprime(x);
        worst = std::max(worst, std::fabs(d - fd) / (1.0 + std::fabs(d)));
    }
    return worst;
}

}  // namespace amq
