#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricvol {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad index, mismatched lengths, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

struct FanViolation {
    enum class Kind { TooFewRays, NonPrimitiveRay, NotUnimodular, WindingNumber };
    Kind kind;
    std::size_t index;  // offending ray/cone index; unused for TooFewRays
    std::string message;
};

class InvalidFan : public Error {
public:
    explicit InvalidFan(std::vector<FanViolation> violations);
    const std::vector<FanViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<FanViolation> violations_;
};

class NotGloballyGenerated : public Error {
public:
    NotGloballyGenerated(std::size_t cone, std::size_t ray, std::string message)
        : Error(std::move(message)), cone_(cone), ray_(ray) {}
    std::size_t cone() const noexcept { return cone_; }
    std::size_t ray() const noexcept { return ray_; }

private:
    std::size_t cone_;
    std::size_t ray_;
};

class NotAmple : public Error {
public:
    using Error::Error;
};

/// Malformed instance document. `context` names the line/column or field.
class ParseError : public Error {
public:
    ParseError(std::string context, const std::string& message)
        : Error(context.empty() ? message : context + ": " + message), context_(std::move(context)) {}
    const std::string& context() const noexcept { return context_; }

private:
    std::string context_;
};

}  // namespace toricvol
