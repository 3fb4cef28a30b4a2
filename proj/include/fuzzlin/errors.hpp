#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace fuzzlin {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Constructor arguments violate the ordering required of a fuzzy number.
class OrderingError : public Error {
public:
    using Error::Error;
};

// Triangular and trapezoidal operands were mixed in one operation.
class KindMismatchError : public Error {
public:
    using Error::Error;
};

// An argument lies outside an operation's domain (bad alpha, empty list,
// score out of range, zero scalar, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A refuzzification parameter falls outside its admissible region.
// Carries the open interval the offending parameter must lie in, when
// such an interval exists.
class AdmissibilityError : public Error {
public:
    explicit AdmissibilityError(const std::string& what) : Error(what) {}
    AdmissibilityError(const std::string& what, double lo, double hi)
        : Error(what), lower_(lo), upper_(hi) {}

    std::optional<double> lower_bound() const { return lower_; }
    std::optional<double> upper_bound() const { return upper_; }

private:
    std::optional<double> lower_;
    std::optional<double> upper_;
};

// A linear program is not in one of the two supported canonical forms.
class UnsupportedFormError : public Error {
public:
    using Error::Error;
};

// An input document is malformed or does not match its schema.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace fuzzlin
