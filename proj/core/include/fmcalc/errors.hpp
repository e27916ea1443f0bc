#pragma once

#include <stdexcept>
#include <string>

namespace fmcalc {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vectors or divisors over lattices of different rank.
class DimensionError : public Error {
public:
    using Error::Error;
};

// An operation was applied outside the domain where it is defined
// (violated shape precondition, off-curve point, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// The curve has no admissible positive root for the requested parameters.
class CurveDomainError : public DomainError {
public:
    using DomainError::DomainError;
};

// Both parts of a full central charge vanish, so no phase is defined.
class IndeterminatePhase : public DomainError {
public:
    using DomainError::DomainError;
};

// Invalid configuration data; carries the dotted path of the offending field.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Malformed text input; `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Two independent evaluation paths disagreed; indicates a bug, never bad input.
class ComputationFault : public Error {
public:
    using Error::Error;
};

} // namespace fmcalc
