#include "amq/convexity.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "amq/errors.hpp"

namespace amq {

namespace {

double checked(const RealFn& g, double x) {
    double v = g(x);
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "g not finite at x = " << x;
        throw EvalError(os.str(), x);
    }
    return v;
}

}  // namespace

ConvexityCertificate check_am_convex(const RealFn& g, double alpha, double m,
                                     double domain_upper, GridSize3 grid, double tol) {
    if (grid.nx < 1 || grid.ny < 1 || grid.nt < 1)
        throw std::invalid_argument("check_am_convex: grid sizes must be >= 1");
    ConvexityCertificate cert;
    cert.grid = grid;
    cert.tolerance = tol;
    cert.max_violation = -HUGE_VAL;

    std::vector<double> xs(grid.nx + 1), gx(grid.nx + 1);
    for (int i = 0; i <= grid.nx; ++i) {
        xs[i] = domain_upper * i / grid.nx;
        gx[i] = checked(g, xs[i]);
    }
    std::vector<double> ys(grid.ny + 1), gy(grid.ny + 1);
    for (int j = 0; j <= grid.ny; ++j) {
        ys[j] = domain_upper * j / grid.ny;
        gy[j] = checked(g, ys[j]);
    }
    std::vector<double> ts(grid.nt + 1), ta(grid.nt + 1);
    for (int k = 0; k <= grid.nt; ++k) {
        ts[k] = static_cast<double>(k) / grid.nt;
        ta[k] = std::pow(ts[k], alpha);
    }

    for (int i = 0; i <= grid.nx; ++i) {
        for (int j = 0; j <= grid.ny; ++j) {
            for (int k = 0; k <= grid.nt; ++k) {
                // t*x + m*(1-t)*y stays in [0, D] for m <= 1.
                double mix = ts[k] * xs[i] + m * (1.0 - ts[k]) * ys[j];
                double v = checked(g, mix) - (ta[k] * gx[i] + m * (1.0 - ta[k]) * gy[j]);
                if (v > cert.max_violation) {
                    cert.max_violation = v;
                    cert.witness_x = xs[i];
                    cert.witness_y = ys[j];
                    cert.witness_t = ts[k];
                }
            }
        }
    }
    if (!(cert.max_violation > 0.0)) cert.max_violation = 0.0;  // also normalizes -0.0
    cert.pass = cert.max_violation <= tol;
    return cert;
}

PathCertificate check_path_hypothesis(const TestFunction& f, const ParamSet& p, int n_t,
                                      double tol) {
    if (n_t < 1) throw std::invalid_argument("check_path_hypothesis: n_t must be >= 1");
    PathCertificate cert;
    cert.n_t = n_t;
    cert.tolerance = tol;
    cert.max_violation = -HUGE_VAL;

    auto g = [&](double x) { return std::pow(std::fabs(checked(f.fprime, x)), p.q); };
    const double ga = g(p.a);
    const double gb = g(p.b);
    for (int k = 0; k <= n_t; ++k) {
        double t = static_cast<double>(k) / n_t;
        double talpha = std::pow(t, p.alpha);
        double v = g(t * p.a + p.m * (1.0 - t) * p.b) -
                   (talpha * ga + p.m * (1.0 - talpha) * gb);
        if (v > cert.max_violation) {
            cert.max_violation = v;
            cert.worst_t = t;
        }
    }
    if (!(cert.max_violation > 0.0)) cert.max_violation = 0.0;
    cert.pass = cert.max_violation <= tol;
    return cert;
}

std::string classify_class(double alpha, double m) {
    const bool a0 = alpha == 0.0;
    const bool a1 = alpha == 1.0;
    const bool m0 = m == 0.0;
    const bool m1 = m == 1.0;
    if (a0 && m0) return "increasing";
    if (a1 && m0) return "starshaped";
    if (a1 && m1) return "convex";
    if (m0) return "alpha-starshaped";
    if (a1) return "m-convex";
    if (m1) return "alpha-convex";
    return "general (alpha,m)";
}

}  // namespace amq
