#pragma once

#include <stdexcept>
#include <string>

namespace neus {

// Error hierarchy maps onto process exit codes:
//   ArgumentError/ConfigError -> 1, IoError -> 2, ParseError/ValidationError -> 3.

class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConfigError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UndefinedCorrelationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace neus
