#pragma once

// Numerical kernels shared by all physics modules: generalized Laguerre
// polynomials, log-gamma, signed-log summation and the two quadratures
// (adaptive radial, Gauss-Hermite momentum).

#include <functional>
#include <span>
#include <vector>

#include "magqsl/errors.hpp"

namespace magqsl::specfun {

struct QuadratureConfig {
  double relative_tolerance = 1e-10;
  int max_subdivisions = 4000;
  int momentum_node_count = 64;   // Gauss-Hermite nodes for momentum integrals
  double radial_cutoff_factor = 6.0;  // multiplier on the classical turning radius

  // Throws std::invalid_argument when outside the supported ranges.
  void validate() const;
};

/// Generalized Laguerre polynomial L^alpha_k(x), integer alpha >= 0, x >= 0.
/// Evaluated by the upward three-term recurrence in the degree, which stays
/// accurate for every k <= 70 needed by the n <= 132 level scans; the
/// alternating power series loses all significance near k ~ 20.
double laguerre(int k, int alpha, double x);

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// A real number stored as (sign, ln|value|) so products of factorials and
/// Gamma functions never overflow. sign == 0 encodes an exact zero and the
/// log magnitude is then meaningless.
struct SignedLogValue {
  int sign = 0;
  double log_magnitude = 0.0;

  static SignedLogValue from_value(double v);
  double value() const;
};

/// Sum of signed-log terms, accumulated in extended (quad) precision with
/// compensation. Relative error stays below 1e-9 even when the largest term
/// exceeds the result by a factor of 1e12. Full cancellation returns sign 0.
SignedLogValue signed_log_sum(std::span<const SignedLogValue> terms);

/// Adaptive Gauss-Kronrod quadrature of f over [0, R] with
/// R = radial_cutoff_factor * sqrt(2 n_max + 4) / beta, converged to the
/// configured relative tolerance. The integrand must have decayed at R;
/// otherwise, or when max_subdivisions is exhausted, a ConvergenceError
/// carrying the running estimate is thrown.
double integrate_radial(const std::function<double(double)>& f, double beta,
                        int n_max, const QuadratureConfig& cfg = {});

/// Gauss-Hermite rule for the weight exp(-t^2) on (-inf, inf), nodes in
/// ascending order. Nodes beyond |t| ~ 5.7 carry weights below 1e-14, which
/// realises the 8-sigma truncation of the momentum packet.
struct GaussHermiteRule {
  explicit GaussHermiteRule(int point_count);
  std::vector<double> node;
  std::vector<double> weight;
};

/// Mean of g under a normal density: int rho(p; mean, sigma) g(p) dp
/// evaluated with a node_count-point Gauss-Hermite rule. Exact for
/// polynomial g up to degree 2 node_count - 1.
double integrate_gaussian_weight(const std::function<double(double)>& g,
                                 double mean, double sigma, int node_count);

}  // namespace magqsl::specfun
