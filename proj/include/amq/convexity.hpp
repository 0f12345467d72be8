#pragma once

#include <string>

#include "amq/funcmodel.hpp"

namespace amq {

struct GridSize3 {
    int nx = 64;
    int ny = 64;
    int nt = 64;
};

// Sampled certificate for the inequality
//   g(t*x + m*(1-t)*y) <= t^alpha * g(x) + m*(1 - t^alpha) * g(y)
// over a full (x, y, t) grid on [0, D]^2 x [0, 1]. Grid sizes count
// intervals, so doubling a size yields a nested grid.
struct ConvexityCertificate {
    double max_violation = 0.0;
    GridSize3 grid;
    double tolerance = 0.0;
    bool pass = false;
    double witness_x = 0.0;
    double witness_y = 0.0;
    double witness_t = 0.0;
};

// Same inequality along the single path t -> t*a + m*(1-t)*b with
// g = |f'|^q. This is the exact hypothesis the bound proofs consume and the
// gate for bound-domination checks.
struct PathCertificate {
    double max_violation = 0.0;
    int n_t = 0;
    double tolerance = 0.0;
    bool pass = false;
    double worst_t = 0.0;
};

ConvexityCertificate check_am_convex(const RealFn& g, double alpha, double m,
                                     double domain_upper, GridSize3 grid = {},
                                     double tol = 1e-12);

PathCertificate check_path_hypothesis(const TestFunction& f, const ParamSet& p,
                                      int n_t = 4096, double tol = 1e-12);

// Class label for special (alpha, m) corners: (0,0) increasing,
// (alpha,0) alpha-starshaped, (1,0) starshaped, (1,m) m-convex,
// (1,1) convex, (alpha,1) alpha-convex; otherwise "general (alpha,m)".
std::string classify_class(double alpha, double m);

}  // namespace amq
