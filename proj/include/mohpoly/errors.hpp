#ifndef MOHPOLY_ERRORS_HPP
#define MOHPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mohpoly {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct RingMismatch : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownVariable : SyntaxError {
    using SyntaxError::SyntaxError;
};

struct ExponentOverflow : SyntaxError {
    using SyntaxError::SyntaxError;
};

struct NotInSemigroup : Error {
    using Error::Error;
};

struct NoGaps : Error {
    using Error::Error;
};

struct NotSigmaHomogeneous : Error {
    using Error::Error;
};

struct NotFoundWithinBound : Error {
    using Error::Error;
};

struct EmptyGeneratorList : Error {
    using Error::Error;
};

struct NotArtinian : Error {
    using Error::Error;
};

struct UnsupportedCharacteristic : Error {
    using Error::Error;
};

struct IdentityFailed : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

}  // namespace mohpoly

#endif
