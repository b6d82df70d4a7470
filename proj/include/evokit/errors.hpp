#pragma once

#include <stdexcept>

namespace evokit {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user-supplied configuration: parameter out of range, unknown
/// config key, malformed document. The CLI maps these to exit status 1.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Problems reading or interpreting an input dataset.
class DatasetError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

} // namespace evokit
