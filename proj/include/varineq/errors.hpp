#pragma once

#include <stdexcept>
#include <string>

namespace varineq {

/// Bad or inconsistent user input (config keys, step sizes, panel counts, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Catalog lookup failed; the message lists the valid names.
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A test function violates the vanishing-endpoint requirements.
class AdmissibilityError : public std::runtime_error {
public:
    explicit AdmissibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A callback produced a non-finite value; the message names where.
class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The model cannot supply a derivative an operation needs.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace varineq
