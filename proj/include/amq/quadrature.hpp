#pragma once

#include "amq/funcmodel.hpp"

namespace amq {

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// The result of comparing the quadrature functional against the reference
// mean (1/(m*b-a)) * integral of f over [a, m*b].
struct QuadResult {
    double q_value = 0.0;                  // the functional Q
    double integral = 0.0;                 // reference mean of f over [a, m*b]
    double integral_error_estimate = 0.0;  // error estimate for the mean
    double true_error = 0.0;               // |q_value - integral|
};

// Q = lambda*(mu*f(a) + (1-mu)*f(m*b)) + (1-lambda)*f(mu*a + m*(1-mu)*b).
// Throws EvalError on a non-finite function value.
double quad_functional(const TestFunction& f, const ParamSet& p);

// Adaptive Gauss-Kronrod (7-15) integration by bisection of the worst
// interval, to absolute tolerance `tol`. Returns the raw integral; callers
// wanting a mean divide by (hi - lo). Throws ConvergenceError (carrying the
// best estimate) when the tolerance is unreachable within the subdivision
// caps, and EvalError on non-finite integrand values.
IntegralResult reference_integral(const RealFn& f, double lo, double hi, double tol = 1e-10,
                                  int max_depth = 50);

// Same scheme driven by a relative target: the absolute tolerance is
// rel_tol times the magnitude of the first whole-interval estimate.
// Intended for validating small positive quantities such as kernel-power
// integrals.
IntegralResult integrate_relative(const RealFn& f, double lo, double hi, double rel_tol,
                                  int max_depth = 50);

// Assembles QuadResult with true_error = |Q - mean|; the mean is integrated
// to absolute tolerance `tol` (of the mean itself).
QuadResult true_error(const TestFunction& f, const ParamSet& p, double tol = 1e-10);

}  // namespace amq
