#pragma once

#include <stdexcept>
#include <string>

namespace shellflow {

// Adaptive quadrature gave up before reaching the requested tolerance.
// Carries the best estimate and its error bound so callers can decide
// whether the partial result is still usable.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate, double error_estimate)
        : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}

    double estimate() const { return estimate_; }
    double error_estimate() const { return error_estimate_; }

private:
    double estimate_;
    double error_estimate_;
};

// Requested a diagonal derivative of omega in a regime where it diverges
// (repulsion singular enough that omega is continuous but not C^1).
class BlowupRegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Implicit step could not be completed: Newton failed down to the smallest
// admissible time step.
class StepError : public std::runtime_error {
public:
    StepError(const std::string& what, double residual, double dt)
        : std::runtime_error(what), residual_(residual), dt_(dt) {}

    double residual() const { return residual_; }
    double dt() const { return dt_; }

private:
    double residual_;
    double dt_;
};

// State left the admissible set (NaN or significantly negative radius).
class StateCorruptionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace shellflow
