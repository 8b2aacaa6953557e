#pragma once

#include <stdexcept>
#include <string>

namespace qqwalk
{

/// An operation was evaluated outside its mathematical domain
/// (zero quaternion inverse, pole of a zeta expression, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// The caller broke a precondition: dimension mismatch, non-square input,
/// quaternionic weights handed to a complex-only routine.
class ContractViolation : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `line()` is 1-based, 0 when the input has no lines
/// (a single literal).
class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A numerical procedure failed its own post-condition.
class NumericalError : public std::runtime_error
{
public:
    NumericalError(std::string method, const std::string& message, double residual)
        : std::runtime_error(method + ": " + message + " (residual " + std::to_string(residual) + ")"),
          method_(std::move(method)),
          residual_(residual)
    {
    }

    const std::string& method() const noexcept { return method_; }
    double residual() const noexcept { return residual_; }

private:
    std::string method_;
    double residual_;
};

} // namespace qqwalk
