#pragma once

#include <stdexcept>
#include <string>

namespace qst {

enum class ErrorKind {
    Validation,
    Domain,
    Overflow,
    UnsupportedSpec,
    DegenerateFit,
};

const char* to_string(ErrorKind kind) noexcept;

// Base of every error thrown by the core. The C API maps kind() onto a
// status code, so new kinds must be added there too.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& what)
        : Error(ErrorKind::Validation, field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(ErrorKind::Overflow, what) {}
};

class UnsupportedSpecError : public Error {
public:
    explicit UnsupportedSpecError(const std::string& what)
        : Error(ErrorKind::UnsupportedSpec, what) {}
};

class DegenerateFitError : public Error {
public:
    explicit DegenerateFitError(const std::string& what)
        : Error(ErrorKind::DegenerateFit, what) {}
};

} // namespace qst
