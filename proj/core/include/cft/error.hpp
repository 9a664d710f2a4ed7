#pragma once

#include <stdexcept>
#include <string>

namespace cft {

/// Raised when an operation is called outside its mathematical domain
/// (bad discriminant, non-coprime moduli, convergence violation, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a bounded search or enumeration hits its configured cap.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse failures for textual element, polynomial and modulus syntax.
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cft
