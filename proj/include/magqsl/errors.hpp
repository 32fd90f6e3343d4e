#pragma once

#include <stdexcept>
#include <string>

namespace magqsl {

/// Adaptive quadrature ran out of subdivisions or the integrand has not
/// decayed at the cutoff radius. Carries the best estimate obtained so far
/// together with its error bound so callers can decide what to do with it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_bound)
      : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}
  double best_estimate() const { return best_estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double best_estimate_;
  double error_bound_;
};

/// Quantum numbers violate the Landau-level constraints
/// (|m_l| <= n, n - m_l even).
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Spinor constructors only cover the m_l = 0, spin-up, even-n family.
class UnsupportedFamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Equal energies in the superposition: the state never evolves to an
/// orthogonal one, so no minimum evolution time exists.
class DegenerateSuperpositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certified summation could not reach the requested relative accuracy.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace magqsl
