#pragma once

#include <stdexcept>
#include <string>

namespace skt {

/// Rejected input: a named field or key failed a precondition.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// A reaction bound does not exist (zero cubic damping against positive growth).
class UnboundedReaction : public std::runtime_error {
public:
    explicit UnboundedReaction(const std::string& what) : std::runtime_error(what) {}
};

/// Gronwall denominator 1 - theta*tau*lambda is not positive.
class PreconditionViolation : public std::runtime_error {
public:
    explicit PreconditionViolation(const std::string& what) : std::runtime_error(what) {}
};

class LinearSolveFailure : public std::runtime_error {
public:
    explicit LinearSolveFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace skt
