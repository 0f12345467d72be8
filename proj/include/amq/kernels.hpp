#pragma once

#include "amq/funcmodel.hpp"
#include "amq/quadrature.hpp"

namespace amq {

// Intercept of the kernel branch on [mu, 1]. The identity holds with
// 1 - lambda*mu; the 1 - alpha*lambda variant is kept so the regression test
// can demonstrate that it breaks the identity whenever alpha != mu.
enum class RightIntercept { OneMinusLambdaMu, OneMinusAlphaLambda };

// Piecewise-linear kernel: -t + lambda*(1-mu) on [0, mu] and
// -t + (1 - lambda*mu) on [mu, 1].
struct KernelSpec {
    double left_intercept = 0.0;   // lambda*(1-mu), root of the left branch
    double right_intercept = 0.0;  // 1 - lambda*mu, root of the right branch
    double mu = 0.0;

    double left(double t) const { return -t + left_intercept; }
    double right(double t) const { return -t + right_intercept; }

    static KernelSpec for_params(const ParamSet& p,
                                 RightIntercept variant = RightIntercept::OneMinusLambdaMu);
};

struct IdentityResidual {
    double lhs = 0.0;       // Q - reference mean
    double rhs = 0.0;       // (m*b - a) * (kernel integrals of f')
    double residual = 0.0;  // |lhs - rhs|
    double integrator_tol = 0.0;
};

// Computes both sides of the quadrature identity independently and returns
// the residual. The two right-hand integrals run against f' along the path
// t -> t*a + m*(1-t)*b.
IdentityResidual identity_residual(const TestFunction& f, const ParamSet& p,
                                   double tol = 1e-10,
                                   RightIntercept variant = RightIntercept::OneMinusLambdaMu);

enum class Segment { Left, Right };
enum class KernelWeight { TAlpha, OneMinusTAlpha };

// Brute-force integral of |kernel| over the segment; validates the epsilon
// coefficients. Splits at the interior root so the integrator never
// straddles the kink.
double oracle_plain(Segment seg, const ParamSet& p, double tol = 1e-11);

// Integral of |kernel| * t^alpha or |kernel| * (1 - t^alpha); validates the
// delta (left) and beta (right) coefficients.
double oracle_weighted(Segment seg, KernelWeight w, const ParamSet& p, double tol = 1e-11);

// Integral of |kernel|^pexp for pexp > 1; (pexp+1) times this validates the
// theta coefficients. Uses a relative target since the values can be tiny.
double oracle_power(Segment seg, const ParamSet& p, double pexp, double rel_tol = 1e-10);

}  // namespace amq
