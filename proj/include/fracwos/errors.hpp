#pragma once

#include <stdexcept>
#include <string>

namespace fracwos {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Valid input for which the library provides no implementation
/// (e.g. quadrature for n > 3, the n = 1 Green function away from s = 1/2).
class UnsupportedError : public std::logic_error {
public:
    explicit UnsupportedError(const std::string& what) : std::logic_error(what) {}
};

/// Monte Carlo run that produced no usable sample (every walk hit the step cap).
class EstimationError : public std::runtime_error {
public:
    explicit EstimationError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

}  // namespace detail
}  // namespace fracwos
