#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fae {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input bytes (JSON syntax, bad container magic, ...).
struct ParseError : Error { using Error::Error; };

// Well-formed input that violates a schema or invariant.
struct ValidationError : Error { using Error::Error; };

// Structurally valid data that cannot be used (e.g. a dataset with no
// negative frames, an empty document corpus, an empty test set).
struct DataError : Error { using Error::Error; };

// Model training cannot proceed (single-class input, empty vocabulary).
struct TrainError : Error { using Error::Error; };

// Invalid generation spec (zero files requested, unknown template).
struct SpecError : Error { using Error::Error; };

struct RetrievalError : Error { using Error::Error; };
struct PromptError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

struct TransportError : Error {
    TransportError(const std::string& msg, int status_code = 0, std::string body = {})
        : Error(msg), status(status_code), body_excerpt(std::move(body)) {}
    int status;                // HTTP status, 0 when no response was received
    std::string body_excerpt;  // first bytes of the response body, if any
};

} // namespace fae
