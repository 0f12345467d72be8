#pragma once

#include <stdexcept>
#include <string>

namespace amq {

// A function produced a non-finite value at a specific point.
class EvalError : public std::runtime_error {
public:
    EvalError(const std::string& what, double point)
        : std::runtime_error(what), point_(point) {}
    double point() const { return point_; }

private:
    double point_;
};

// Adaptive integration could not reach the requested tolerance.
// Carries the best estimate obtained so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best, double error_estimate)
        : std::runtime_error(what), best_(best), error_estimate_(error_estimate) {}
    double best() const { return best_; }
    double error_estimate() const { return error_estimate_; }

private:
    double best_;
    double error_estimate_;
};

// An evaluation point fell outside a function's stated domain [0, D].
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace amq
