#pragma once

#include <stdexcept>
#include <string>

namespace isokit {

// Base class for all isokit failures so callers can catch the whole family.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation requested outside a chart's parameter rectangle.
struct OutOfDomain : Error {
    using Error::Error;
};

// The tangent plane is isotropic at the requested point: det(g) fell below
// the admissibility tolerance, so the curvature machinery is undefined there.
struct NotAdmissible : Error {
    using Error::Error;
};

// A profile's validity interval is empty or incompatible with the request.
struct EmptyRange : Error {
    using Error::Error;
};

// A chart was requested on a parameter rectangle the family does not cover.
struct InvalidRange : Error {
    using Error::Error;
};

// A family constant violates its constructor's constraint (e.g. zero where a
// nonzero constant is required, or a constrained sum is off).
struct InvalidConstant : Error {
    using Error::Error;
};

// A closed-form expression was evaluated where it is not real-valued
// (negative radicand, non-positive log/power base, ...).
struct DomainError : Error {
    using Error::Error;
};

// A curve state fed to an arc-length formula is not unit speed in the
// induced metric.
struct NotUnitSpeed : Error {
    using Error::Error;
};

}  // namespace isokit
