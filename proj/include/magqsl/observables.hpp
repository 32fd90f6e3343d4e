#pragma once

// Radial displacement and average radial speed for every scenario: exact
// non-relativistic closed forms, momentum-quadrature relativistic packet
// results, and the strong-field closed-form sums evaluated exactly.

#include "magqsl/qsl.hpp"

namespace magqsl::observables {

struct SpeedResult {
  double t_min = 0.0;         // [s]
  double displacement = 0.0;  // [m]
  double v_bar_over_c = 0.0;  // displacement / (t_min c)
  qsl::SuperpositionSpec scenario{};
};

/// Maximum displacement sqrt(pi hbar / 2 e B) of the non-relativistic
/// (F_00 + F_20)/sqrt(2) packet.
double displacement_nonrel(const landau::FieldConfig& field);

/// Non-relativistic average radial speed v = (1/m0) sqrt(e B hbar / 2 pi),
/// which crosses c at B = 2 pi m0^2 c^2 / (e hbar).
SpeedResult speed_nonrel(const landau::FieldConfig& field);

/// |<rho>_{T_min} - <rho>_0| for the relativistic superposition, integrated
/// over the momentum packet with the crossed-term phase evaluated per node.
double displacement_rel(const qsl::SuperpositionSpec& spec,
                        const specfun::QuadratureConfig& cfg = {});

/// displacement_rel and qsl_time combined.
SpeedResult speed_rel(const qsl::SuperpositionSpec& spec,
                      const specfun::QuadratureConfig& cfg = {});

/// beta-scaled strong-field displacement for the particle-particle (n, n+2)
/// superposition: the alternating double sum over binomials and Gamma
/// factors. Evaluated with exact integer arithmetic (the cancellation grows
/// to ~65 decimal digits by n = 132, far beyond any fixed-precision float);
/// accurate to double rounding for every even n <= 200.
double displacement_strong_field_beta(int n);

/// The same in meters for a concrete field.
double displacement_strong_field_closed_form(int n, const landau::FieldConfig& field);

/// Strong-field v/c for the particle-particle (n, n+2) superposition;
/// dimensionless, depends on n only. Tends to 8/(3 pi^2) ~ 0.2702 from below.
double speed_strong_field(int n);

/// beta <n,0|rho|n+2,0>, exact (the single-family part of the double sum).
double crossed_moment_strong_field_beta(int n);

/// Momentum (in units of beta hbar) that maximizes the antiparticle-particle
/// average speed in the strong-field limit: ((2n+4)(2n+8))^{1/4}.
double optimal_p0_over_beta_hbar(int n);

/// Strong-field antiparticle-particle v/c at axial momentum u beta hbar.
double speed_antiparticle_strong_field(int n, double p0_over_beta_hbar);

/// Strong-field antiparticle-particle T_min and displacement for a field.
struct StrongFieldAntiparticle {
  double t_min = 0.0;
  double displacement = 0.0;
  double v_bar_over_c = 0.0;
};
StrongFieldAntiparticle antiparticle_strong_field(int n, double p0_over_beta_hbar,
                                                  const landau::FieldConfig& field);

}  // namespace magqsl::observables
