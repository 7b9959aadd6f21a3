#pragma once

#include <stdexcept>
#include <string>

namespace hhsum {

/// A parameter violates the hypothesis of the formula being evaluated.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The requested series does not converge.
class DivergenceError : public DomainError {
public:
    explicit DivergenceError(const std::string& what) : DomainError(what) {}
};

}  // namespace hhsum
