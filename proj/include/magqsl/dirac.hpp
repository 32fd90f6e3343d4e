#pragma once

// Relativistic layer: Dirac eigenenergies and the analytic four-component
// spinors of the m_l = 0, spin-up, even-n family, with their matrix elements.
// Spinors are built from explicit component formulas; the Dirac matrices are
// never materialized.

#include <array>
#include <complex>
#include <vector>

#include "magqsl/landau.hpp"

namespace magqsl::dirac {

/// One symbolic spinor component entry: weight times the radial eigenfunction
/// F_{n, m_l}.
struct SpinorTerm {
  std::complex<double> weight;
  int n = 0;
  int m_l = 0;
};

/// Four-component spinor stored as weighted references to radial
/// eigenfunctions, which keeps every inner product exact up to quadrature.
/// Weights carry the 1/(E +- m0 c^2) factors and the overall normalization.
struct AnalyticSpinor {
  std::array<std::vector<SpinorTerm>, 4> components;
  double norm_constant = 1.0;  // the N applied on top of the raw weights
  double energy = 0.0;         // signed eigenvalue [J]
  double p = 0.0;              // axial momentum [kg m/s]
};

/// Dirac eigenvalue j sqrt(m0^2 c^4 + p^2 c^2 + e B hbar c^2 (n + m_l + 2 m_s + 1)).
double rel_energy(const landau::LandauState& state, const landau::FieldConfig& field);

/// Positive-energy spinor U_{n,0}: components
/// [F_{n,0}; 0; cp/(E+m0c^2) F_{n,0}; i sqrt(2) c hbar beta sqrt(n+2)/(E+m0c^2) F_{n+1,1}],
/// normalized numerically to unit quadrature norm. Even n only.
AnalyticSpinor positive_spinor(int n, const landau::FieldConfig& field, double p,
                               const specfun::QuadratureConfig& cfg = {});

/// Negative-energy spinor U^-_{n,0}: components
/// [cp/(E-m0c^2) F_{n,0}; sqrt(2) i c hbar beta sqrt(n+2)/(E-m0c^2) F_{n+1,1}; F_{n,0}; 0]
/// with E the negative eigenvalue.
AnalyticSpinor negative_spinor(int n, const landau::FieldConfig& field, double p,
                               const specfun::QuadratureConfig& cfg = {});

/// 2 pi int (sum_k a_k^dag b_k) rho^{power} rho drho, azimuthal selection rule
/// applied per referenced pair. The supported families give real values; the
/// imaginary part cancels identically.
std::complex<double> spinor_moment(const AnalyticSpinor& a, const AnalyticSpinor& b,
                                   const landau::FieldConfig& field, int power,
                                   const specfun::QuadratureConfig& cfg = {});

/// Quadrature norm sqrt(2 pi int sum_k |a_k|^2 rho drho).
double spinor_norm(const AnalyticSpinor& a, const landau::FieldConfig& field,
                   const specfun::QuadratureConfig& cfg = {});

/// Crossed radial term D_S = 2 pi int (sum_k a_k^dag b_k) rho^2 drho [m].
double spinor_crossed_term(const AnalyticSpinor& a, const AnalyticSpinor& b,
                           const landau::FieldConfig& field,
                           const specfun::QuadratureConfig& cfg = {});

}  // namespace magqsl::dirac
