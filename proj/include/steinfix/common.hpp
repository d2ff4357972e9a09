#pragma once

#include <stdexcept>
#include <string>

namespace steinfix {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument or mismatched object parameters.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Enumeration grew past its configured cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& msg, std::size_t last_frontier)
        : Error(msg), last_frontier_size(last_frontier) {}
    std::size_t last_frontier_size;
};

/// Operation applied outside its declared scope (e.g. subgroups that do
/// not generate the whole table).
class ScopeError : public Error {
public:
    using Error::Error;
};

/// A fixed-point set turned out to be empty.
class EmptyFixedSet : public Error {
public:
    using Error::Error;
};

/// An iterative routine failed to meet its numerical contract.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// Bad configuration input (CLI layer maps this to exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Central tolerance record. Every numeric gate in the library reads its
/// default from here so tests and the CLI have a single knob.
struct Tolerances {
    double orthonormal = 1e-10;     // basis columns pairwise orthonormal
    double intersection = 1e-8;     // singular values >= 1 - this mark V1 cap V2
    double unitary = 1e-10;         // representation images unitary
    double isometry = 1e-10;        // Q^T Q = I resp. L^T J L = J
    double on_manifold = 1e-10;     // hyperboloid sheet residual
    double membership = 1e-8;       // point lies in a fixed set
    double optimality = 1e-8;       // first-order condition of projections
    double stationarity = 1e-9;     // circumcenter / barycenter exit
    double displacement = 1e-8;     // certified fixed point displacement
    double monitor_slack = 1e-9;    // inequality monitors
    double cat0_slack = 1e-12;      // midpoint inequality slack
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tols{};
    return tols;
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace steinfix
