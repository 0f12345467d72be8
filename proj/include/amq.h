/*
 * amq — quadrature error bounds for functions whose derivative powers are
 * (alpha, m)-convex.
 *
 * C interface to the shared library. All entry points return an amq_status;
 * outputs go through pointer arguments. On failure, amq_last_error() returns
 * a thread-local description of what went wrong. Functions from the catalog
 * are handled through opaque amq_function handles.
 */
#ifndef AMQ_H
#define AMQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum amq_status {
    AMQ_OK = 0,
    AMQ_ERROR_INVALID_ARGUMENT = 1, /* misuse: null pointer, bad enum, ... */
    AMQ_ERROR_INVALID_PARAMS = 2,   /* ParamSet constraint violated */
    AMQ_ERROR_DOMAIN = 3,           /* evaluation point outside [0, D] */
    AMQ_ERROR_EVAL = 4,             /* non-finite function value */
    AMQ_ERROR_NO_CONVERGENCE = 5,   /* integrator tolerance unreachable */
    AMQ_ERROR_IO = 6,               /* file could not be read or written */
    AMQ_ERROR_CONFIG = 7,           /* malformed campaign configuration */
    AMQ_ERROR_UNKNOWN_FUNCTION = 8, /* id not in the catalog */
    AMQ_ERROR_BUFFER_TOO_SMALL = 9
} amq_status;

typedef struct amq_function amq_function;

/* The tuple (a, b, lambda, mu, alpha, m, q). The functional lives on
 * [a, m*b]; validity requires 0 <= a < b, m*b > a, lambda, mu in [0,1],
 * alpha, m in (0,1], q >= 1. */
typedef struct amq_params {
    double a;
    double b;
    double lambda;
    double mu;
    double alpha;
    double m;
    double q;
} amq_params;

typedef struct amq_quad_result {
    double q_value;        /* the quadrature functional */
    double integral_mean;  /* reference mean of f over [a, m*b] */
    double integral_error; /* error estimate for the mean */
    double true_error;     /* |q_value - integral_mean| */
} amq_quad_result;

typedef struct amq_identity_result {
    double lhs;
    double rhs;
    double residual;
    double integrator_tol;
} amq_identity_result;

typedef struct amq_coeffs22 {
    double eps1, eps2, eps3, eps4;
    double delta1, delta2, delta3, delta4;
    double beta1, beta2, beta3, beta4;
    int case_id; /* 1, 2 or 3 */
} amq_coeffs22;

/* Inactive theta entries (wrong side of their case pivot) are NaN. */
typedef struct amq_coeffs24 {
    double theta1, theta2, theta3, theta4;
    double big_a, big_b;
    double p;
} amq_coeffs24;

typedef struct amq_path_certificate {
    double max_violation;
    double worst_t;
    double tolerance;
    int pass;
} amq_path_certificate;

typedef struct amq_bound_report {
    int case_id;
    amq_path_certificate certificate;
    double true_error;
    double bound_t22, bound_c23, bound_t24, bound_t26, bound_simpson_classical;
    double ratio_t22, ratio_t24, ratio_t26;
    int has_t24, has_t26, has_simpson;
    /* 1 when the min-form bound's subinterval hypothesis held, 0 when it
     * failed, -1 when not evaluated (q = 1 or domain). The bound only counts
     * toward `violation` when this is 1. */
    int thm24_hypothesis_ok;
    double identity_residual;
    int violation;
} amq_bound_report;

typedef struct amq_campaign_summary {
    uint64_t rows;
    uint64_t skipped;
    uint64_t errors;
    uint64_t cert_passes;
    uint64_t t24_checked;
    uint64_t violations_t22;
    uint64_t violations_t24;
    uint64_t violations_t26;
    double worst_ratio_t22;
    double worst_ratio_t24;
    double worst_ratio_t26;
} amq_campaign_summary;

/* Kernel intercept variants on [mu, 1]; the identity requires LAMBDA_MU. */
enum { AMQ_RIGHT_INTERCEPT_LAMBDA_MU = 0, AMQ_RIGHT_INTERCEPT_ALPHA_LAMBDA = 1 };

/* Kernel segments and weights for the coefficient oracles. */
enum { AMQ_SEGMENT_LEFT = 0, AMQ_SEGMENT_RIGHT = 1 };
enum { AMQ_WEIGHT_T_ALPHA = 0, AMQ_WEIGHT_ONE_MINUS_T_ALPHA = 1 };

/* Theorem selectors for domain validation. */
enum { AMQ_THM_22 = 22, AMQ_THM_24 = 24, AMQ_THM_26 = 26 };

const char* amq_version(void);

/* Thread-local message for the most recent failure in this thread. */
const char* amq_last_error(void);

/* ---- catalog ---- */

size_t amq_catalog_size(void);
amq_status amq_catalog_id(size_t index, char* buf, size_t cap);

/* Looks up a catalog id (also power ids such as "x4"); returns NULL and sets
 * the error message when the id is unknown. Release with
 * amq_function_release. */
amq_function* amq_function_lookup(const char* id, double domain_upper);
void amq_function_release(amq_function* f);

double amq_function_domain_upper(const amq_function* f);
amq_status amq_function_eval(const amq_function* f, double x, double* out);
amq_status amq_function_eval_deriv(const amq_function* f, double x, double* out);

/* ---- validation ---- */

/* AMQ_OK when all constraints hold; otherwise AMQ_ERROR_INVALID_PARAMS with
 * the violated constraints written to msg (when msg is non-NULL). */
amq_status amq_validate_params(const amq_params* p, char* msg, size_t cap);
amq_status amq_validate_domain(const amq_function* f, const amq_params* p, int theorem,
                               char* msg, size_t cap);

/* ---- quadrature and identity ---- */

amq_status amq_quad_functional(const amq_function* f, const amq_params* p, double* out);
amq_status amq_true_error(const amq_function* f, const amq_params* p, double tol,
                          amq_quad_result* out);
amq_status amq_identity_residual(const amq_function* f, const amq_params* p, double tol,
                                 int right_intercept, amq_identity_result* out);

/* ---- coefficients and oracles ---- */

amq_status amq_coeffs_thm22(const amq_params* p, amq_coeffs22* out);
amq_status amq_thetas(const amq_params* p, double pexp, double out[4]);
amq_status amq_coeffs_thm24(const amq_function* f, const amq_params* p, amq_coeffs24* out);

amq_status amq_oracle_plain(int segment, const amq_params* p, double tol, double* out);
amq_status amq_oracle_weighted(int segment, int weight, const amq_params* p, double tol,
                               double* out);
amq_status amq_oracle_power(int segment, const amq_params* p, double pexp, double rel_tol,
                            double* out);

/* ---- bounds ---- */

amq_status amq_bound_thm22(const amq_function* f, const amq_params* p, double* out);
amq_status amq_bound_cor23(const amq_function* f, const amq_params* p, double* out);
amq_status amq_bound_cor23a(const amq_function* f, const amq_params* p, double* out);
amq_status amq_bound_thm24(const amq_function* f, const amq_params* p, double* out);
amq_status amq_bound_thm26(const amq_function* f, const amq_params* p, double* out);
amq_status amq_classical_simpson_bound(const amq_function* f, double lo, double hi,
                                       double* out);
amq_status amq_hh_check(const amq_function* f, double lo, double hi, double slack,
                        int* left_ok, int* right_ok);

/* ---- certificates ---- */

amq_status amq_check_path_hypothesis(const amq_function* f, const amq_params* p, int n_points,
                                     double tol, amq_path_certificate* out);
amq_status amq_classify_class(double alpha, double m, char* buf, size_t cap);

/* ---- reports and campaigns ---- */

/* Full single-point report; tol <= 0 selects the default (AMQ_TOL env or
 * 1e-10). */
amq_status amq_bound_report_compute(const amq_function* f, const amq_params* p, double tol,
                                    amq_bound_report* out);

/* Runs a campaign described by a JSON config (document text or file path);
 * writes the report/log files named by the config and fills the summary. */
amq_status amq_run_campaign_json(const char* json_text, amq_campaign_summary* out);
amq_status amq_run_campaign_file(const char* config_path, amq_campaign_summary* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* AMQ_H */
