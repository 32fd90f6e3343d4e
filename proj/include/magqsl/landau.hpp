#pragma once

// Non-relativistic physics of an electron in a uniform magnetic field:
// constants, derived field scales, Landau eigenfunctions, the
// Schroedinger-Pauli spectrum and radial matrix elements.

#include <functional>

#include "magqsl/specfun.hpp"

namespace magqsl::landau {

struct PhysicalConstants {
  double e;     // elementary charge [C]
  double m0;    // electron rest mass [kg]
  double hbar;  // reduced Planck constant [J s]
  double c;     // speed of light [m/s]

  static PhysicalConstants si();       // CODATA 2018 values
  static PhysicalConstants natural();  // e = m0 = hbar = c = 1
};

/// Magnetic field strength together with every derived scale:
/// beta = sqrt(eB/2hbar), omega = eB/2m0, curly_e = eB/m0 = 2 omega.
struct FieldConfig {
  double B = 0.0;
  PhysicalConstants constants{};
  double beta = 0.0;
  double omega = 0.0;
  double curly_e = 0.0;

  static FieldConfig make(double b_tesla,
                          const PhysicalConstants& k = PhysicalConstants::si());
};

enum class Spin : int { down = -1, up = +1 };
enum class EnergySign : int { negative = -1, positive = +1 };

struct LandauState {
  int n = 0;
  int m_l = 0;
  Spin m_s = Spin::up;
  double p = 0.0;  // axial momentum [kg m/s]
  EnergySign j = EnergySign::positive;  // only read by the dirac module

  // m_l runs over -n, -n+2, ..., n.
  bool valid() const;
  void require_valid() const;  // throws InvalidStateError
};

/// Gaussian axial wave packet: position-space standard deviation d and mean
/// momentum p0. The momentum density is normal with sigma_p = hbar/(2d).
struct PacketSpec {
  double p0 = 0.0;
  double d = 0.0;

  double sigma_p(const PhysicalConstants& k) const { return k.hbar / (2.0 * d); }

  // Narrow default, sigma_p = beta hbar / 100, so the momentum spread never
  // shifts T_min visibly.
  static PacketSpec default_for(const FieldConfig& field);
};

/// Radial factor of F_{n,m_l}(rho, phi): everything except the azimuthal
/// phase e^{i m_l phi}, which is handled analytically as a selection rule.
double radial_wavefunction(const LandauState& state, const FieldConfig& field, double rho);

/// Schroedinger-Pauli eigenvalue p^2/2m0 + hbar omega (n + m_l + 2 m_s + 1).
double nonrel_energy(const LandauState& state, const FieldConfig& field);

/// 2 pi int F_a rho^power F_b rho drho. Exactly zero when the azimuthal
/// quantum numbers differ; quadrature otherwise. power >= 0 (power 0 is the
/// plain overlap).
double radial_moment(const LandauState& a, const LandauState& b, const FieldConfig& field,
                     int power, const specfun::QuadratureConfig& cfg = {});

/// Mean radial position of the (F_00 + F_20)/sqrt(2) superposition at time t.
double mean_rho_nonrel(const FieldConfig& field, double t,
                       const specfun::QuadratureConfig& cfg = {});

/// |alpha(p)|^2, the normalized Gaussian momentum density of the packet.
double momentum_density(const PacketSpec& packet, const PhysicalConstants& k, double p);

/// int |alpha(p)|^2 g(p) dp with the packet's Gaussian measure.
double integrate_momentum(const std::function<double(double)>& g, const PacketSpec& packet,
                          const PhysicalConstants& k, const specfun::QuadratureConfig& cfg = {});

}  // namespace magqsl::landau
