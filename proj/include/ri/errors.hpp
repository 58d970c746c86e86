// errors.hpp — Exception types shared by the repeated-interaction toolkit

#pragma once

#include <stdexcept>
#include <string>

namespace ri {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class ContractViolation : public Error {
public:
    using Error::Error;
};

// A post-condition that can only fail through a numerical kernel bug.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

// The collision time sits on a resonance (tau*theta = 2*pi*m and
// tau*phi = 2*pi*k), so eta = 1 and no steady state is approached.
class DegenerateParameters : public Error {
public:
    using Error::Error;
};

// An iterative search hit its step cap before crossing the threshold.
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double best_distance, long long steps)
        : Error(what), best_distance_(best_distance), steps_(steps) {}

    double best_distance() const noexcept { return best_distance_; }
    long long steps() const noexcept { return steps_; }

private:
    double best_distance_;
    long long steps_;
};

// Malformed configuration or user input.
class ValidationError : public Error {
public:
    ValidationError(const std::string& field, const std::string& what)
        : Error(field + ": " + what), field_(field) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

} // namespace ri
