#pragma once

// Quantum-speed-limit times for equal-weight two-eigenstate superpositions.
// For such superpositions the Mandelstam-Tamm and Margolus-Levitin bounds
// coincide: Delta H = <H> - E_min = |E2 - E1|/2, T_min = pi hbar / |E2 - E1|.

#include <utility>

#include "magqsl/landau.hpp"

namespace magqsl::qsl {

enum class SuperpositionKind { nonrelativistic, particle_particle, antiparticle_particle };

/// Equal superposition of the (n, m_l=0, spin-up) and (n+2, m_l=0, spin-up)
/// eigenstates. The antiparticle_particle kind assigns negative energy to the
/// n state and positive to the n+2 state.
struct SuperpositionSpec {
  SuperpositionKind kind = SuperpositionKind::nonrelativistic;
  int n = 0;  // even, lower radial quantum number
  landau::PacketSpec packet{};
  landau::FieldConfig field{};

  void validate() const;  // throws std::invalid_argument / InvalidStateError
};

struct QSLResult {
  double delta_h = 0.0;  // |E2 - E1| / 2 [J]
  double t_min = 0.0;    // pi hbar / (2 delta_h) [s]
  std::pair<double, double> energies{0.0, 0.0};
};

/// T_min from the two energies; throws DegenerateSuperpositionError when they
/// coincide (the state never reaches an orthogonal one).
QSLResult qsl_time_from_energies(double e1, double e2, double hbar);

/// T_min for the superposition, energies evaluated at p = p0.
QSLResult qsl_time(const SuperpositionSpec& spec);

/// Strong-field particle-particle limit pi / ((sqrt(n+4) - sqrt(n+2)) sqrt(2) c beta).
double qsl_time_strong_field(int n, const landau::FieldConfig& field);

/// Ratio of relativistic to non-relativistic T_min at n = 0, p0 = 0.
/// Tends to 1 as B -> 0 and grows of order one near B ~ m0^2 c^2 / (e hbar).
double weak_field_correspondence(const landau::FieldConfig& field);

}  // namespace magqsl::qsl
