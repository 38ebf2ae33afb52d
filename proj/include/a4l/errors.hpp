#pragma once

#include <stdexcept>
#include <string>

namespace a4l {

// Base class for every error the pipeline raises. Module headers derive
// the specific conditions named in their contracts.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct StorageFailure : Error {
    using Error::Error;
};

struct NotFound : Error {
    using Error::Error;
};

struct MissingCredentials : Error {
    MissingCredentials() : Error("missing bearer token") {}
};

struct InvalidCredentials : Error {
    InvalidCredentials() : Error("unknown api key") {}
};

struct InsufficientScope : Error {
    explicit InsufficientScope(const std::string& needed)
        : Error("missing required scope: " + needed) {}
};

}  // namespace a4l
