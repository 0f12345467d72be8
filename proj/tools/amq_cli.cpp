// Command-line front end for the amq shared library. Talks to the library
// exclusively through the C API in amq.h.
//
// Subcommands:
//   verify    run a verification campaign from a JSON config file
//   identity  quadrature-identity residual for one function and ParamSet
//   coeffs    closed-form coefficients next to their brute-force integrals
//   bound     single-point report: true error, bounds, ratios, certificate
//
// Exit codes: 0 success with zero violations, 1 violations found,
// 2 usage/config error.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "amq.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct Fraction {
    std::string text = "0";
    double value = 0.0;
};

// CLI11 hook: accepts "1/3" style fractions as well as plain decimals.
bool lexical_cast(const std::string& input, Fraction& out);

bool lexical_cast(const std::string& input, Fraction& out) {
    out.text = input;
    auto slash = input.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            out.value = std::stod(input, &used);
            return used == input.size();
        }
        const std::string num = input.substr(0, slash);
        const std::string den = input.substr(slash + 1);
        size_t un = 0, ud = 0;
        double n = std::stod(num, &un);
        double d = std::stod(den, &ud);
        if (un != num.size() || ud != den.size() || d == 0.0) return false;
        out.value = n / d;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

struct FnHandle {
    amq_function* fn = nullptr;
    ~FnHandle() { amq_function_release(fn); }
};

int fail_usage(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    return kExitUsage;
}

int fail_status(const char* what) {
    std::fprintf(stderr, "error: %s: %s\n", what, amq_last_error());
    return kExitUsage;
}

void print_summary(const amq_campaign_summary& s) {
    std::printf("rows:            %" PRIu64 "\n", s.rows);
    std::printf("skipped:         %" PRIu64 "\n", s.skipped);
    std::printf("eval errors:     %" PRIu64 "\n", s.errors);
    std::printf("cert passes:     %" PRIu64 "\n", s.cert_passes);
    std::printf("violations t2.2: %" PRIu64 "\n", s.violations_t22);
    std::printf("violations t2.4: %" PRIu64 "\n", s.violations_t24);
    std::printf("violations t2.6: %" PRIu64 "\n", s.violations_t26);
    std::printf("worst ratio t2.2: %.6g\n", s.worst_ratio_t22);
    std::printf("worst ratio t2.4: %.6g\n", s.worst_ratio_t24);
    std::printf("worst ratio t2.6: %.6g\n", s.worst_ratio_t26);
}

int run_verify(const std::string& config) {
    amq_campaign_summary summary{};
    amq_status st = amq_run_campaign_file(config.c_str(), &summary);
    if (st != AMQ_OK) return fail_status("verify");
    print_summary(summary);
    uint64_t violations = summary.violations_t22 + summary.violations_t24 + summary.violations_t26;
    std::printf("%s\n", violations == 0 ? "OK: no bound violations" : "FAIL: bound violations");
    return violations == 0 ? kExitOk : kExitViolations;
}

int run_identity(const FnHandle& f, const amq_params& p, double tol, double gate,
                 bool alpha_lambda_variant) {
    char msg[512];
    if (amq_validate_params(&p, msg, sizeof msg) != AMQ_OK) return fail_usage(msg);
    amq_identity_result r{};
    int variant = alpha_lambda_variant ? AMQ_RIGHT_INTERCEPT_ALPHA_LAMBDA
                                       : AMQ_RIGHT_INTERCEPT_LAMBDA_MU;
    if (amq_identity_residual(f.fn, &p, tol, variant, &r) != AMQ_OK)
        return fail_status("identity");
    std::printf("lhs      = %.17g\n", r.lhs);
    std::printf("rhs      = %.17g\n", r.rhs);
    std::printf("residual = %.17g  (gate %.3g)\n", r.residual, gate);
    return r.residual <= gate ? kExitOk : kExitViolations;
}

int run_coeffs(const amq_params& p, double pexp) {
    char msg[512];
    if (amq_validate_params(&p, msg, sizeof msg) != AMQ_OK) return fail_usage(msg);

    amq_coeffs22 c{};
    if (amq_coeffs_thm22(&p, &c) != AMQ_OK) return fail_status("coeffs");

    const double r = p.lambda * (1.0 - p.mu);
    const double s = 1.0 - p.lambda * p.mu;
    const bool left_c2 = p.mu <= r;
    const bool right_c3 = p.mu > s;

    double plain_l = 0, plain_r = 0, wl_t = 0, wl_1t = 0, wr_t = 0, wr_1t = 0;
    amq_oracle_plain(AMQ_SEGMENT_LEFT, &p, 0, &plain_l);
    amq_oracle_plain(AMQ_SEGMENT_RIGHT, &p, 0, &plain_r);
    amq_oracle_weighted(AMQ_SEGMENT_LEFT, AMQ_WEIGHT_T_ALPHA, &p, 0, &wl_t);
    amq_oracle_weighted(AMQ_SEGMENT_LEFT, AMQ_WEIGHT_ONE_MINUS_T_ALPHA, &p, 0, &wl_1t);
    amq_oracle_weighted(AMQ_SEGMENT_RIGHT, AMQ_WEIGHT_T_ALPHA, &p, 0, &wr_t);
    amq_oracle_weighted(AMQ_SEGMENT_RIGHT, AMQ_WEIGHT_ONE_MINUS_T_ALPHA, &p, 0, &wr_1t);

    std::printf("case %d   (left pivot: mu %s lambda*(1-mu), right pivot: mu %s 1-lambda*mu)\n",
                c.case_id, left_c2 ? "<=" : ">", right_c3 ? ">" : "<=");
    std::printf("%-8s %22s %22s %10s\n", "coeff", "closed form", "oracle", "|diff|");
    auto row = [](const char* name, double closed, double oracle, bool active) {
        if (active)
            std::printf("%-8s %22.15g %22.15g %10.2e\n", name, closed, oracle,
                        std::fabs(closed - oracle));
        else
            std::printf("%-8s %22.15g %22s %10s\n", name, closed, "-", "-");
    };
    row("eps1", c.eps1, plain_l, left_c2);
    row("eps2", c.eps2, plain_l, !left_c2);
    row("eps3", c.eps3, plain_r, !right_c3);
    row("eps4", c.eps4, plain_r, right_c3);
    row("delta1", c.delta1, wl_t, left_c2);
    row("delta2", c.delta2, wl_1t, left_c2);
    row("delta3", c.delta3, wl_t, !left_c2);
    row("delta4", c.delta4, wl_1t, !left_c2);
    row("beta1", c.beta1, wr_t, !right_c3);
    row("beta2", c.beta2, wr_1t, !right_c3);
    row("beta3", c.beta3, wr_t, right_c3);
    row("beta4", c.beta4, wr_1t, right_c3);

    if (pexp > 1.0) {
        double th[4];
        double ol = 0, orr = 0;
        amq_thetas(&p, pexp, th);
        amq_oracle_power(AMQ_SEGMENT_LEFT, &p, pexp, 0, &ol);
        amq_oracle_power(AMQ_SEGMENT_RIGHT, &p, pexp, 0, &orr);
        std::printf("p = %g   (oracle column is (p+1) * integral of |kernel|^p)\n", pexp);
        row("theta1", th[0], (pexp + 1) * ol, !left_c2);
        row("theta2", th[1], (pexp + 1) * ol, left_c2);
        row("theta3", th[2], (pexp + 1) * orr, !right_c3);
        row("theta4", th[3], (pexp + 1) * orr, right_c3);
    }
    return kExitOk;
}

int run_bound(const FnHandle& f, const amq_params& p, double tol) {
    char msg[512];
    if (amq_validate_params(&p, msg, sizeof msg) != AMQ_OK) return fail_usage(msg);
    amq_bound_report r{};
    if (amq_bound_report_compute(f.fn, &p, tol, &r) != AMQ_OK) return fail_status("bound");

    std::printf("case:              C%d\n", r.case_id);
    std::printf("certificate:       %s (max violation %.3e at t=%.6g)\n",
                r.certificate.pass ? "pass" : "FAIL", r.certificate.max_violation,
                r.certificate.worst_t);
    std::printf("true_error:        %.17g\n", r.true_error);
    std::printf("bound_t22:         %.17g   ratio %.6g\n", r.bound_t22, r.ratio_t22);
    std::printf("bound_c23:         %.17g\n", r.bound_c23);
    if (r.has_t24)
        std::printf("bound_t24:         %.17g   ratio %.6g%s\n", r.bound_t24, r.ratio_t24,
                    r.thm24_hypothesis_ok == 1 ? "" : "   (subinterval hypothesis failed; not binding)");
    if (r.has_t26)
        std::printf("bound_t26:         %.17g   ratio %.6g\n", r.bound_t26, r.ratio_t26);
    if (r.has_simpson)
        std::printf("bound_simpson:     %.17g   (sampled sup estimate)\n",
                    r.bound_simpson_classical);
    std::printf("identity_residual: %.3e\n", r.identity_residual);
    if (r.violation) {
        std::printf("BOUND VIOLATION\n");
        return kExitViolations;
    }
    return kExitOk;
}

}  // namespace

namespace {

int run(int argc, char** argv) {
    CLI::App app{"quadrature error bounds for (alpha,m)-convex derivative classes"};
    app.require_subcommand(1);

    std::string config;
    auto* verify = app.add_subcommand("verify", "run a campaign from a JSON config");
    verify->add_option("--config", config, "config file path")->required();

    std::string fn_id = "exp";
    double domain_upper = 4.0;
    Fraction a{"0", 0.0}, b{"1", 1.0}, lambda{"1/3", 1.0 / 3.0}, mu{"1/2", 0.5};
    Fraction alpha{"1", 1.0}, m{"1", 1.0}, q{"1", 1.0};
    double tol = 0.0;  // 0 -> library default (AMQ_TOL env or 1e-10)
    double gate = 1e-8;
    double pexp = 0.0;
    bool alpha_lambda_variant = false;

    auto add_param_opts = [&](CLI::App* cmd, bool with_fn) {
        if (with_fn) {
            cmd->add_option("--f", fn_id, "catalog function id (x2, exp, xexp, inv1p, sin, x<k>)");
            cmd->add_option("--domain-upper", domain_upper, "catalog domain D");
        }
        cmd->add_option("--a", a, "left endpoint a");
        cmd->add_option("--b", b, "right generator b");
        cmd->add_option("--lambda", lambda, "endpoint weight, fraction ok");
        cmd->add_option("--mu", mu, "node weight, fraction ok");
        cmd->add_option("--alpha", alpha, "convexity exponent in (0,1]");
        cmd->add_option("--m", m, "convexity modulus in (0,1]");
        cmd->add_option("--tol", tol, "integrator tolerance");
    };

    auto* identity = app.add_subcommand("identity", "quadrature-identity residual");
    add_param_opts(identity, true);
    identity->add_option("--gate", gate, "exit-0 residual gate");
    identity->add_flag("--alpha-lambda-intercept", alpha_lambda_variant,
                       "use the 1-alpha*lambda right-kernel intercept");

    auto* coeffs = app.add_subcommand("coeffs", "closed-form coefficients vs oracle");
    add_param_opts(coeffs, false);
    coeffs->add_option("--p", pexp, "also print theta table for this exponent p > 1");

    auto* bound = app.add_subcommand("bound", "single-point bound report");
    add_param_opts(bound, true);
    bound->add_option("--q", q, "power-mean / Hoelder exponent q >= 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    amq_params params{a.value, b.value, lambda.value, mu.value, alpha.value, m.value, q.value};

    if (verify->parsed()) return run_verify(config);

    if (coeffs->parsed()) return run_coeffs(params, pexp);

    FnHandle f;
    f.fn = amq_function_lookup(fn_id.c_str(), domain_upper);
    if (!f.fn) return fail_usage(amq_last_error());

    if (identity->parsed()) return run_identity(f, params, tol, gate, alpha_lambda_variant);
    if (bound->parsed()) return run_bound(f, params, tol);
    return fail_usage("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        return fail_usage(e.what());
    }
}
