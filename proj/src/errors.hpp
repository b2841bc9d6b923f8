#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypercore {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text or index file. line() is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, std::size_t line = 0)
        : Error(line ? msg + " (line " + std::to_string(line) + ")" : msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

// Argument outside the domain of an operation (bad node id, k < 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Invalid generator configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Index file written by an incompatible format version.
class VersionError : public Error {
public:
    using Error::Error;
};

// File could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace hypercore
