#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crinv {

/// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Series inversion needs a nonzero constant (unit) constant term.
struct NonUnitConstantTerm : Error {
    using Error::Error;
};

/// Expression parse failure; position is a 0-based offset into the input.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// A generator index exceeds the ring's bound.
struct GeneratorOutOfRange : Error {
    using Error::Error;
};

/// A polynomial that was required to be symmetric is not.
struct NotSymmetric : Error {
    using Error::Error;
};

/// A class of the wrong cohomological degree was supplied.
struct WrongDegree : Error {
    using Error::Error;
};

/// A monomial was required.
struct NotMonomial : Error {
    using Error::Error;
};

struct DegreeTooLarge : Error {
    using Error::Error;
};

/// Form bidegrees incompatible with the requested operation.
struct BidegreeMismatch : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

struct InvalidDimension : Error {
    using Error::Error;
};

} // namespace crinv
