#pragma once

#include <cmath>
#include <random>

#include "amq/funcmodel.hpp"

namespace testsupport {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// We only need lambda, mu, alpha for the coefficient closed forms; a, b, q
// are filled with safe defaults.
inline amq::ParamSet random_coeff_params(std::mt19937_64& rng) {
    amq::ParamSet p;
    p.a = 0.0;
    p.b = 1.0;
    p.lambda = uniform01(rng);
    p.mu = uniform01(rng);
    p.alpha = 1.0 - uniform01(rng);
    p.m = 1.0 - uniform01(rng);
    p.q = 2.0;
    return p;
}

// Full random ParamSet with a well-conditioned interval (m*b - a >= 0.01)
// and b <= 2 so every catalog entry's domain covers it.
inline amq::ParamSet random_param_set(std::mt19937_64& rng) {
    for (;;) {
        amq::ParamSet p;
        p.a = 0.5 * uniform01(rng);
        p.b = p.a + 0.3 + 1.7 * uniform01(rng);
        if (p.b > 2.0) continue;
        p.lambda = uniform01(rng);
        p.mu = uniform01(rng);
        p.alpha = 1.0 - uniform01(rng);
        p.m = 1.0 - uniform01(rng);
        p.q = 1.0 + 3.0 * uniform01(rng);
        if (amq::validate_params(p).ok() && p.mb() - p.a >= 0.01) return p;
    }
}

inline amq::TestFunction make_fn(const std::string& id, amq::RealFn f, amq::RealFn fprime,
                                 double domain_upper = 4.0) {
    amq::TestFunction tf;
    tf.id = id;
    tf.domain_upper = domain_upper;
    tf.f = std::move(f);
    tf.fprime = std::move(fprime);
    return tf;
}

}  // namespace testsupport
