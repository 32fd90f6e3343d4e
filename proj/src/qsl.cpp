#include "magqsl/qsl.hpp"

#include <cmath>

#include "magqsl/dirac.hpp"

namespace magqsl::qsl {

using landau::EnergySign;
using landau::LandauState;
using landau::Spin;

void SuperpositionSpec::validate() const {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("SuperpositionSpec: n must be even and >= 0");
  if (!(packet.d > 0.0)) throw std::invalid_argument("SuperpositionSpec: packet width d must be > 0");
  if (!(field.B > 0.0)) throw std::invalid_argument("SuperpositionSpec: field not initialized");
}

QSLResult qsl_time_from_energies(double e1, double e2, double hbar) {
  const double gap = std::abs(e2 - e1);
  if (gap == 0.0)
    throw DegenerateSuperpositionError(
        "equal energies: the superposition never evolves to an orthogonal state");
  QSLResult r;
  r.delta_h = 0.5 * gap;
  r.t_min = M_PI * hbar / gap;
  r.energies = {e1, e2};
  return r;
}

QSLResult qsl_time(const SuperpositionSpec& spec) {
  spec.validate();
  const double p0 = spec.packet.p0;
  const auto& k = spec.field.constants;
  const LandauState lower{spec.n, 0, Spin::up, p0,
                          spec.kind == SuperpositionKind::antiparticle_particle
                              ? EnergySign::negative
                              : EnergySign::positive};
  const LandauState upper{spec.n + 2, 0, Spin::up, p0, EnergySign::positive};
  double e1 = 0.0, e2 = 0.0, gap = 0.0;
  switch (spec.kind) {
    case SuperpositionKind::nonrelativistic:
      e1 = landau::nonrel_energy(lower, spec.field);
      e2 = landau::nonrel_energy(upper, spec.field);
      gap = k.hbar * spec.field.curly_e;  // 2 hbar omega, independent of n
      break;
    case SuperpositionKind::particle_particle:
      e1 = dirac::rel_energy(lower, spec.field);
      e2 = dirac::rel_energy(upper, spec.field);
      // E2 - E1 = (E2^2 - E1^2)/(E2 + E1); the direct difference loses seven
      // digits to cancellation at laboratory field strengths.
      gap = 2.0 * k.e * spec.field.B * k.hbar * k.c * k.c / (e2 + e1);
      break;
    case SuperpositionKind::antiparticle_particle:
      e1 = dirac::rel_energy(lower, spec.field);
      e2 = dirac::rel_energy(upper, spec.field);
      gap = e2 - e1;  // opposite signs add, no cancellation
      break;
  }
  if (gap == 0.0)
    throw DegenerateSuperpositionError(
        "equal energies: the superposition never evolves to an orthogonal state");
  QSLResult r;
  r.delta_h = 0.5 * gap;
  r.t_min = M_PI * k.hbar / gap;
  r.energies = {e1, e2};
  return r;
}

double qsl_time_strong_field(int n, const landau::FieldConfig& field) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("qsl_time_strong_field: n must be even and >= 0");
  const auto& k = field.constants;
  // sqrt(n+4) - sqrt(n+2) written cancellation-free.
  const double gap = 2.0 / (std::sqrt(n + 4.0) + std::sqrt(n + 2.0));
  return M_PI / (gap * std::sqrt(2.0) * k.c * field.beta);
}

double weak_field_correspondence(const landau::FieldConfig& field) {
  landau::PacketSpec packet = landau::PacketSpec::default_for(field);
  SuperpositionSpec rel{SuperpositionKind::particle_particle, 0, packet, field};
  SuperpositionSpec nonrel{SuperpositionKind::nonrelativistic, 0, packet, field};
  return qsl_time(rel).t_min / qsl_time(nonrel).t_min;
}

}  // namespace magqsl::qsl
