#ifndef NEVDIFF_ERRORS_HPP
#define NEVDIFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nevdiff {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleHit : Error {
    using Error::Error;
};
struct ZeroHit : Error {
    using Error::Error;
};
struct TruncationFailure : Error {
    using Error::Error;
};
struct QuadratureNonConvergence : Error {
    using Error::Error;
};
struct NonConvergence : Error {
    using Error::Error;
};
struct InsufficientSamples : Error {
    using Error::Error;
};
struct Unsupported : Error {
    using Error::Error;
};
struct DegenerateEquation : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

// Parse failure with the byte offset of the offending token.
struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : Error("parse error at offset " + std::to_string(pos) + ": " + what), position(pos) {}
};

}  // namespace nevdiff

#endif
