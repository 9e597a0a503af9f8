#pragma once

#include <stdexcept>
#include <string>

namespace intmin {

// Base class for all errors raised by the solver library.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point handed to the barrier machinery lies on or outside some facet.
class InteriorViolation : public SolverError {
 public:
  explicit InteriorViolation(int index)
      : SolverError("point violates constraint " + std::to_string(index)),
        index(index) {}
  int index;
};

// Newton iteration hit its cap before reaching the requested decrement.
class NonConvergence : public SolverError {
 public:
  explicit NonConvergence(double last_decrement)
      : SolverError("Newton iteration did not converge, last decrement " +
                    std::to_string(last_decrement)),
        last_decrement(last_decrement) {}
  double last_decrement;
};

// The separation oracle produced an answer inconsistent with its contract.
class OracleInconsistency : public SolverError {
 public:
  using SolverError::SolverError;
};

// A hyperplane slice missed the ellipsoid it was supposed to cut.
class EmptySlice : public SolverError {
 public:
  using SolverError::SolverError;
};

// The final one-dimensional slab contains no integral point.
class InfeasibleSlab : public SolverError {
 public:
  using SolverError::SolverError;
};

// The oracle said YES at a point that cannot be certified integral.
class AmbiguousYes : public SolverError {
 public:
  using SolverError::SolverError;
};

// The main loop exceeded its block budget.
class NonTermination : public SolverError {
 public:
  using SolverError::SolverError;
};

// Integerization of a real PSD form lost too much precision.
class PrecisionLoss : public SolverError {
 public:
  using SolverError::SolverError;
};

// Structural precondition failure (rank deficiency, non-PSD form, ...).
class StructuralError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace intmin
