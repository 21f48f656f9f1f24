#pragma once

#include <stdexcept>
#include <string>

namespace structalg {

/// Base class for all domain errors raised by the engine.
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by the zero element of the field.
struct DivisionByZero : EngineError {
    DivisionByZero() : EngineError("division by zero") {}
};

/// Malformed textual scalar, algebra, or Lie-algebra input.
struct ParseError : EngineError {
    explicit ParseError(const std::string& what) : EngineError("parse error: " + what) {}
};

/// Operands with incompatible dimensions.
struct DimensionMismatch : EngineError {
    explicit DimensionMismatch(const std::string& what)
        : EngineError("dimension mismatch: " + what) {}
};

/// A parametric table violates one of the classification constraints.
struct NotStructurable : EngineError {
    explicit NotStructurable(const std::string& constraint)
        : EngineError("not structurable: violated constraint " + constraint),
          violated_constraint(constraint) {}
    std::string violated_constraint;
};

/// A normalization step needs a square root that does not exist in the field.
struct FieldExtensionRequired : EngineError {
    explicit FieldExtensionRequired(const std::string& what)
        : EngineError("field extension required: " + what) {}
};

/// A sampled parametric matrix is singular.
struct SingularSample : EngineError {
    explicit SingularSample(const std::string& what)
        : EngineError("singular sample: " + what) {}
};

/// The candidate inner-structure basis is not closed under commutators.
struct F0NotClosed : EngineError {
    explicit F0NotClosed(const std::string& what)
        : EngineError("degree-zero part not closed: " + what) {}
};

/// Registry label not recognized.
struct UnknownLabel : EngineError {
    explicit UnknownLabel(const std::string& label)
        : EngineError("unknown label: " + label) {}
};

/// Fixture name not recognized or file missing.
struct UnknownFixture : EngineError {
    explicit UnknownFixture(const std::string& name)
        : EngineError("unknown fixture: " + name) {}
};

/// Killing form degenerate where nondegeneracy is required.
struct DegenerateKilling : EngineError {
    DegenerateKilling() : EngineError("degenerate Killing form") {}
};

/// Iterative closure failed to stabilize within the permitted number of rounds.
struct ClosureDiverged : EngineError {
    explicit ClosureDiverged(const std::string& what)
        : EngineError("closure diverged: " + what) {}
};

}  // namespace structalg
