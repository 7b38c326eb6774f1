#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectral_chroma {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (non-positive imaginary part, negative radius, |sigma| > 1/2, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its subdivision budget before meeting abs_tol.
class ToleranceNotReached : public Error {
public:
    ToleranceNotReached(const std::string& what, double achieved_error)
        : Error(what), achieved_error_(achieved_error) {}
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

/// ODE step size collapsed below representable resolution.
class StepSizeUnderflow : public Error {
public:
    using Error::Error;
};

/// A theorem hypothesis required by a bound formula does not hold.
class PreconditionViolation : public Error {
public:
    PreconditionViolation(std::string hypothesis, const std::string& what)
        : Error(what), hypothesis_(std::move(hypothesis)) {}
    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

/// Malformed textual input. line() is 1-based, 0 when not tied to a line.
class InputFormatError : public Error {
public:
    InputFormatError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input is well formed but the requested quantity is undefined for it
/// (e.g. spectral bounds of an edgeless graph).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

}  // namespace spectral_chroma
