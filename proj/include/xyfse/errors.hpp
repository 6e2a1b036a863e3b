#pragma once

#include <stdexcept>
#include <string>

namespace xyfse {

// Error taxonomy: each type names the contract it violates so that callers
// (and tests) can match on the condition rather than parse messages.

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct QuadratureNotConverged : Error {
    using Error::Error;
};
struct PatternTooSmall : Error {
    using Error::Error;
};
struct InvalidAlpha : Error {
    using Error::Error;
};
struct InvalidKf : Error {
    using Error::Error;
};
struct FitIllConditioned : Error {
    using Error::Error;
};
struct UncalibratedS0 : Error {
    using Error::Error;
};
struct TooFewPoints : Error {
    using Error::Error;
};
struct AllPointsNearZeroCrossing : Error {
    using Error::Error;
};
struct EigensolveFailed : Error {
    using Error::Error;
};
struct VectorsMissing : Error {
    using Error::Error;
};
struct MalformedInput : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace xyfse
