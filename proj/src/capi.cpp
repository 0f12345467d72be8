#include "amq.h"

#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "amq/bounds.hpp"
#include "amq/convexity.hpp"
#include "amq/errors.hpp"
#include "amq/funcmodel.hpp"
#include "amq/harness.hpp"
#include "amq/kernels.hpp"
#include "amq/quadrature.hpp"

struct amq_function {
    amq::TestFunction fn;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

amq_status status_from_exception() {
    try {
        throw;
    } catch (const amq::DomainError& e) {
        set_error(e.what());
        return AMQ_ERROR_DOMAIN;
    } catch (const amq::EvalError& e) {
        set_error(e.what());
        return AMQ_ERROR_EVAL;
    } catch (const amq::ConvergenceError& e) {
        set_error(e.what());
        return AMQ_ERROR_NO_CONVERGENCE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        // Parameter-constraint misuse is the common case here.
        return std::strstr(e.what(), "invalid parameters") ? AMQ_ERROR_INVALID_PARAMS
                                                           : AMQ_ERROR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return AMQ_ERROR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return AMQ_ERROR_CONFIG;
    } catch (...) {
        set_error("unknown error");
        return AMQ_ERROR_INVALID_ARGUMENT;
    }
}

template <typename Fn>
amq_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (...) {
        return status_from_exception();
    }
}

amq::ParamSet to_params(const amq_params& p) {
    return amq::ParamSet{p.a, p.b, p.lambda, p.mu, p.alpha, p.m, p.q};
}

amq_status copy_string(const std::string& s, char* buf, size_t cap) {
    if (!buf) return AMQ_ERROR_INVALID_ARGUMENT;
    if (s.size() + 1 > cap) {
        set_error("buffer too small; need " + std::to_string(s.size() + 1) + " bytes");
        return AMQ_ERROR_BUFFER_TOO_SMALL;
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return AMQ_OK;
}

amq_status require(bool cond, const char* msg) {
    if (cond) return AMQ_OK;
    set_error(msg);
    return AMQ_ERROR_INVALID_ARGUMENT;
}

double effective_tol(double tol) { return tol > 0.0 ? tol : amq::default_tolerance(); }

amq::TheoremId theorem_from_int(int theorem) {
    switch (theorem) {
        case AMQ_THM_24: return amq::TheoremId::Thm24;
        case AMQ_THM_26: return amq::TheoremId::Thm26;
        default: return amq::TheoremId::Thm22;
    }
}

void fill_summary(const amq::CampaignSummary& s, amq_campaign_summary* out) {
    out->rows = s.rows;
    out->skipped = s.skipped;
    out->errors = s.errors;
    out->cert_passes = s.cert_passes;
    out->t24_checked = s.t24_checked;
    out->violations_t22 = s.violations_t22;
    out->violations_t24 = s.violations_t24;
    out->violations_t26 = s.violations_t26;
    out->worst_ratio_t22 = s.worst_ratio_t22;
    out->worst_ratio_t24 = s.worst_ratio_t24;
    out->worst_ratio_t26 = s.worst_ratio_t26;
}

}  // namespace

extern "C" {

const char* amq_version(void) { return "0.1.0"; }

const char* amq_last_error(void) { return g_last_error.c_str(); }

size_t amq_catalog_size(void) { return amq::catalog().size(); }

amq_status amq_catalog_id(size_t index, char* buf, size_t cap) {
    return guarded([&]() -> amq_status {
        auto fns = amq::catalog();
        if (index >= fns.size()) return require(false, "catalog index out of range");
        return copy_string(fns[index].id, buf, cap);
    });
}

amq_function* amq_function_lookup(const char* id, double domain_upper) {
    if (!id) {
        set_error("id is NULL");
        return nullptr;
    }
    try {
        auto f = amq::find_function(id, domain_upper > 0.0 ? domain_upper : 4.0);
        if (!f) {
            set_error(std::string("unknown function '") + id + "'");
            return nullptr;
        }
        return new amq_function{std::move(*f)};
    } catch (...) {
        status_from_exception();
        return nullptr;
    }
}

void amq_function_release(amq_function* f) { delete f; }

double amq_function_domain_upper(const amq_function* f) {
    return f ? f->fn.domain_upper : 0.0;
}

amq_status amq_function_eval(const amq_function* f, double x, double* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(f && out, "null argument")) return st;
        *out = f->fn.f(x);
        return AMQ_OK;
    });
}

amq_status amq_function_eval_deriv(const amq_function* f, double x, double* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(f && out, "null argument")) return st;
        *out = f->fn.fprime(x);
        return AMQ_OK;
    });
}

amq_status amq_validate_params(const amq_params* p, char* msg, size_t cap) {
    return guarded([&]() -> amq_status {
        if (auto st = require(p != nullptr, "params is NULL")) return st;
        amq::ValidationResult r = amq::validate_params(to_params(*p));
        if (r.ok()) return AMQ_OK;
        set_error(r.to_string());
        if (msg) copy_string(r.to_string(), msg, cap);
        return AMQ_ERROR_INVALID_PARAMS;
    });
}

amq_status amq_validate_domain(const amq_function* f, const amq_params* p, int theorem,
                               char* msg, size_t cap) {
    return guarded([&]() -> amq_status {
        if (auto st = require(f && p, "null argument")) return st;
        amq::ValidationResult r =
            amq::validate_domain(to_params(*p), f->fn, theorem_from_int(theorem));
        if (r.ok()) return AMQ_OK;
        set_error(r.to_string());
        if (msg) copy_string(r.to_string(), msg, cap);
        return AMQ_ERROR_DOMAIN;
    });
}

amq_status amq_quad_functional(const amq_function* f, const amq_params* p, double* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(f && p && out, "null argument")) return st;
        *out = amq::quad_functional(f->fn, to_params(*p));
        return AMQ_OK;
    });
}

amq_status amq_true_error(const amq_function* f, const amq_params* p, double tol,
                          amq_quad_result* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(f && p && out, "null argument")) return st;
        amq::QuadResult r = amq::true_error(f->fn, to_params(*p), effective_tol(tol));
        out->q_value = r.q_value;
        out->integral_mean = r.integral;
        out->integral_error = r.integral_error_estimate;
        out->true_error = r.true_error;
        return AMQ_OK;
    });
}

amq_status amq_identity_residual(const amq_function* f, const amq_params* p, double tol,
                                 int right_intercept, amq_identity_result* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(f && p && out, "null argument")) return st;
        auto variant = right_intercept == AMQ_RIGHT_INTERCEPT_ALPHA_LAMBDA
                           ? amq::RightIntercept::OneMinusAlphaLambda
                           : amq::RightIntercept::OneMinusLambdaMu;
        amq::IdentityResidual r =
            amq::identity_residual(f->fn, to_params(*p), effective_tol(tol), variant);
        out->lhs = r.lhs;
        out->rhs = r.rhs;
        out->residual = r.residual;
        out->integrator_tol = r.integrator_tol;
        return AMQ_OK;
    });
}

amq_status amq_coeffs_thm22(const amq_params* p, amq_coeffs22* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(p && out, "null argument")) return st;
        amq::CoefficientSet22 c = amq::coeffs_thm22(to_params(*p));
        out->eps1 = c.eps1; out->eps2 = c.eps2; out->eps3 = c.eps3; out->eps4 = c.eps4;
        out->delta1 = c.delta1; out->delta2 = c.delta2;
        out->delta3 = c.delta3; out->delta4 = c.delta4;
        out->beta1 = c.beta1; out->beta2 = c.beta2;
        out->beta3 = c.beta3; out->beta4 = c.beta4;
        out->case_id = static_cast<int>(c.case_id);
        return AMQ_OK;
    });
}

amq_status amq_thetas(const amq_params* p, double pexp, double out[4]) {
    return guarded([&]() -> amq_status {
        if (auto st = require(p && out, "null argument")) return st;
        if (auto st = require(pexp > 1.0, "pexp must exceed 1")) return st;
        auto th = amq::thetas(p->lambda, p->mu, pexp);
        for (int i = 0; i < 4; ++i) out[i] = th[i];
        return AMQ_OK;
    });
}

amq_status amq_coeffs_thm24(const amq_function* f, const amq_params* p, amq_coeffs24* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(f && p && out, "null argument")) return st;
        amq::CoefficientSet24 c = amq::coeffs_thm24(f->fn, to_params(*p));
        out->theta1 = c.theta1; out->theta2 = c.theta2;
        out->theta3 = c.theta3; out->theta4 = c.theta4;
        out->big_a = c.big_a; out->big_b = c.big_b; out->p = c.p;
        return AMQ_OK;
    });
}

amq_status amq_oracle_plain(int segment, const amq_params* p, double tol, double* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(p && out, "null argument")) return st;
        auto seg = segment == AMQ_SEGMENT_RIGHT ? amq::Segment::Right : amq::Segment::Left;
        *out = amq::oracle_plain(seg, to_params(*p), tol > 0 ? tol : 1e-11);
        return AMQ_OK;
    });
}

amq_status amq_oracle_weighted(int segment, int weight, const amq_params* p, double tol,
                               double* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(p && out, "null argument")) return st;
        auto seg = segment == AMQ_SEGMENT_RIGHT ? amq::Segment::Right : amq::Segment::Left;
        auto w = weight == AMQ_WEIGHT_ONE_MINUS_T_ALPHA ? amq::KernelWeight::OneMinusTAlpha
                                                        : amq::KernelWeight::TAlpha;
        *out = amq::oracle_weighted(seg, w, to_params(*p), tol > 0 ? tol : 1e-11);
        return AMQ_OK;
    });
}

amq_status amq_oracle_power(int segment, const amq_params* p, double pexp, double rel_tol,
                            double* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(p && out, "null argument")) return st;
        auto seg = segment == AMQ_SEGMENT_RIGHT ? amq::Segment::Right : amq::Segment::Left;
        *out = amq::oracle_power(seg, to_params(*p), pexp, rel_tol > 0 ? rel_tol : 1e-10);
        return AMQ_OK;
    });
}

#define AMQ_BOUND_IMPL(cxx_fn)                                                \
    return guarded([&]() -> amq_status {                                      \
        if (auto st = require(f && p && out, "null argument")) return st;     \
        *out = amq::cxx_fn(f->fn, to_params(*p));                             \
        return AMQ_OK;                                                        \
    })

amq_status amq_bound_thm22(const amq_function* f, const amq_params* p, double* out) {
    AMQ_BOUND_IMPL(bound_thm22);
}
amq_status amq_bound_cor23(const amq_function* f, const amq_params* p, double* out) {
    AMQ_BOUND_IMPL(bound_cor23);
}
amq_status amq_bound_cor23a(const amq_function* f, const amq_params* p, double* out) {
    AMQ_BOUND_IMPL(bound_cor23a);
}
amq_status amq_bound_thm24(const amq_function* f, const amq_params* p, double* out) {
    AMQ_BOUND_IMPL(bound_thm24);
}
amq_status amq_bound_thm26(const amq_function* f, const amq_params* p, double* out) {
    AMQ_BOUND_IMPL(bound_thm26);
}

#undef AMQ_BOUND_IMPL

amq_status amq_classical_simpson_bound(const amq_function* f, double lo, double hi,
                                       double* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(f && out, "null argument")) return st;
        if (auto st = require(lo < hi, "lo < hi required")) return st;
        *out = amq::classical_simpson_bound(f->fn, lo, hi);
        return AMQ_OK;
    });
}

amq_status amq_hh_check(const amq_function* f, double lo, double hi, double slack,
                        int* left_ok, int* right_ok) {
    return guarded([&]() -> amq_status {
        if (auto st = require(f && left_ok && right_ok, "null argument")) return st;
        if (auto st = require(lo < hi, "lo < hi required")) return st;
        amq::HHCheck h = amq::hh_check(f->fn, lo, hi, amq::default_tolerance(),
                                       slack > 0 ? slack : 1e-9);
        *left_ok = h.left_ok ? 1 : 0;
        *right_ok = h.right_ok ? 1 : 0;
        return AMQ_OK;
    });
}

amq_status amq_check_path_hypothesis(const amq_function* f, const amq_params* p, int n_points,
                                     double tol, amq_path_certificate* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(f && p && out, "null argument")) return st;
        amq::PathCertificate c = amq::check_path_hypothesis(
            f->fn, to_params(*p), n_points > 1 ? n_points : 4096, tol > 0 ? tol : 1e-12);
        out->max_violation = c.max_violation;
        out->worst_t = c.worst_t;
        out->tolerance = c.tolerance;
        out->pass = c.pass ? 1 : 0;
        return AMQ_OK;
    });
}

amq_status amq_classify_class(double alpha, double m, char* buf, size_t cap) {
    return guarded([&]() -> amq_status {
        if (auto st = require(alpha >= 0 && alpha <= 1 && m >= 0 && m <= 1,
                              "(alpha, m) must lie in [0,1]^2"))
            return st;
        return copy_string(amq::classify_class(alpha, m), buf, cap);
    });
}

amq_status amq_bound_report_compute(const amq_function* f, const amq_params* p, double tol,
                                    amq_bound_report* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(f && p && out, "null argument")) return st;
        amq::ReportOptions opts;
        opts.tol = effective_tol(tol);
        amq::BoundReport r = amq::bound_report(f->fn, to_params(*p), opts);
        out->case_id = static_cast<int>(r.case_id);
        out->certificate.max_violation = r.certificate.max_violation;
        out->certificate.worst_t = r.certificate.worst_t;
        out->certificate.tolerance = r.certificate.tolerance;
        out->certificate.pass = r.certificate.pass ? 1 : 0;
        out->true_error = r.quad.true_error;
        out->bound_t22 = r.bound_t22.value_or(0.0);
        out->bound_c23 = r.bound_c23.value_or(0.0);
        out->bound_t24 = r.bound_t24.value_or(0.0);
        out->bound_t26 = r.bound_t26.value_or(0.0);
        out->bound_simpson_classical = r.bound_simpson_classical.value_or(0.0);
        out->ratio_t22 = r.ratio_t22.value_or(0.0);
        out->ratio_t24 = r.ratio_t24.value_or(0.0);
        out->ratio_t26 = r.ratio_t26.value_or(0.0);
        out->has_t24 = r.bound_t24.has_value() ? 1 : 0;
        out->has_t26 = r.bound_t26.has_value() ? 1 : 0;
        out->has_simpson = r.bound_simpson_classical.has_value() ? 1 : 0;
        out->thm24_hypothesis_ok =
            r.thm24_hypothesis_ok ? (*r.thm24_hypothesis_ok ? 1 : 0) : -1;
        out->identity_residual = r.identity_residual;
        out->violation = r.violation ? 1 : 0;
        return AMQ_OK;
    });
}

amq_status amq_run_campaign_json(const char* json_text, amq_campaign_summary* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(json_text && out, "null argument")) return st;
        amq::CampaignConfig cfg = amq::parse_config(json_text);
        amq::CampaignResult result = amq::run_campaign(cfg);
        fill_summary(result.summary, out);
        return AMQ_OK;
    });
}

amq_status amq_run_campaign_file(const char* config_path, amq_campaign_summary* out) {
    return guarded([&]() -> amq_status {
        if (auto st = require(config_path && out, "null argument")) return st;
        std::ifstream in(config_path, std::ios::binary);
        if (!in) {
            set_error(std::string("cannot open config file: ") + config_path);
            return AMQ_ERROR_IO;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        amq::CampaignConfig cfg = amq::parse_config(buf.str());
        amq::CampaignResult result = amq::run_campaign(cfg);
        fill_summary(result.summary, out);
        return AMQ_OK;
    });
}

} /* extern "C" */
