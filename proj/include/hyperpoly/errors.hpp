#pragma once

#include <stdexcept>
#include <string>

namespace hyperpoly {

/// Violated mathematical precondition: cross-instance operands, inverse of
/// zero, zero polynomial where a nonzero one is required, ...
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The requested result is an infinite set, or the computation would need to
/// enumerate one.
class NonEnumerable : public DomainError {
public:
    explicit NonEnumerable(const std::string& what) : DomainError(what) {}
};

/// Malformed text input (hyperfield spec, element, polynomial, tree).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hyperpoly
