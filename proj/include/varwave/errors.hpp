#pragma once

#include <stdexcept>
#include <string>

namespace varwave {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuadratureFailure : public Error { public: using Error::Error; };
class BracketFailure : public Error { public: using Error::Error; };
class NewtonFailure : public Error { public: using Error::Error; };
class InvalidGrid : public Error { public: using Error::Error; };
class UnknownScenario : public Error { public: using Error::Error; };
class CflViolation : public Error { public: using Error::Error; };
class BlowupDetected : public Error { public: using Error::Error; };
class PreconditionError : public Error { public: using Error::Error; };

/// Config errors carry the offending line (0 when not tied to a line).
class ConfigError : public Error {
public:
    ConfigError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class ParseError : public ConfigError { public: using ConfigError::ConfigError; };
class UnknownKey : public ConfigError { public: using ConfigError::ConfigError; };
class RangeError : public ConfigError { public: using ConfigError::ConfigError; };

}  // namespace varwave
