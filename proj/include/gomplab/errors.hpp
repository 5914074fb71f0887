#pragma once

#include <stdexcept>
#include <string>

namespace gomplab {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A factorization pivot fell below the rank tolerance.
class RankDeficientError : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration would exceed the configured cap.
class EnumerationTooLargeError : public Error {
public:
    using Error::Error;
};

/// Fewer selectable candidates than requested.
class InsufficientCandidatesError : public Error {
public:
    using Error::Error;
};

/// A closed-form constant was evaluated outside its valid domain.
/// VacuousBound means the denominator is non-positive and the bound
/// carries no information; InvalidInput means an argument itself is
/// out of range.
class DomainError : public Error {
public:
    enum class Kind { InvalidInput, VacuousBound };

    DomainError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class MissingOrderError : public Error {
public:
    using Error::Error;
};

class MissingDeltaError : public Error {
public:
    using Error::Error;
};

class GammaViolationError : public Error {
public:
    using Error::Error;
};

class ZeroNoiseError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Text-format parse failure; carries 1-based line and column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

} // namespace gomplab
