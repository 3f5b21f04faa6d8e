#pragma once

#include <stdexcept>
#include <string>

namespace sperner {

/// Bad argument or malformed input (label out of range, wrong dimension, bad flags).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A complex failed one of the build-time checks.
class ComplexValidationError : public std::runtime_error {
public:
    enum class Kind {
        DuplicateVertex,
        NonContiguousIds,
        InvalidPoint,
        DegenerateSimplex,
        Pseudomanifold,
        Coverage,
    };

    ComplexValidationError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Work would exceed a configured size cap (simplex count, elimination size).
class ResourceCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A labeling is missing labels or violates the Sperner condition.
class InvalidLabeling : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Something that cannot happen on correct inputs did happen.
class InvariantBreach : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A caller-supplied map returned a point outside the simplex.
class MapEvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sperner
