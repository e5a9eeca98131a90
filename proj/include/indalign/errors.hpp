#pragma once

#include <stdexcept>
#include <string>

namespace indalign {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file. `line` is 1-based when known, -1 otherwise.
struct ParseError : Error {
    explicit ParseError(const std::string& msg, long line = -1)
        : Error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg), line(line) {}
    long line;
};

struct IntegrityError : Error {
    using Error::Error;
};

struct UnknownCriterion : Error {
    using Error::Error;
};

struct DuplicateIndicatorId : Error {
    using Error::Error;
};

struct MissingPlaceholder : Error {
    using Error::Error;
};

struct TransportError : Error {
    using Error::Error;
};

struct TimeoutError : TransportError {
    using TransportError::TransportError;
};

struct UnparseableResponse : Error {
    using Error::Error;
};

struct UnknownIndicator : Error {
    using Error::Error;
};

// Gateway unreachable for every cell of an extraction run.
struct AbortError : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct InsufficientSamples : Error {
    using Error::Error;
};

struct RowMismatch : Error {
    using Error::Error;
};

struct EmptyTrainingSet : Error {
    using Error::Error;
};

struct MissingFeature : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace indalign
