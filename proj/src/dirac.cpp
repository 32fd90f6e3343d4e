#include "magqsl/dirac.hpp"

#include <cmath>
#include <string>

namespace magqsl::dirac {

using landau::EnergySign;
using landau::LandauState;
using landau::Spin;

double rel_energy(const LandauState& state, const landau::FieldConfig& field) {
  state.require_valid();
  const auto& k = field.constants;
  const double two_ms = static_cast<double>(static_cast<int>(state.m_s));
  const double rest = k.m0 * k.c * k.c;
  const double arg = rest * rest + state.p * state.p * k.c * k.c +
                     k.e * field.B * k.hbar * k.c * k.c * (state.n + state.m_l + two_ms + 1.0);
  return static_cast<double>(static_cast<int>(state.j)) * std::sqrt(arg);
}

namespace {

void require_family(int n) {
  if (n < 0 || n % 2 != 0)
    throw UnsupportedFamilyError(
        "spinor family covers even n >= 0 with m_l = 0, spin up; got n = " + std::to_string(n));
}

double raw_quadrature_norm(const AnalyticSpinor& u, const landau::FieldConfig& field,
                           const specfun::QuadratureConfig& cfg) {
  int n_max = 0;
  for (const auto& comp : u.components)
    for (const auto& t : comp) n_max = std::max(n_max, t.n);
  const auto integrand = [&](double rho) {
    double total = 0.0;
    for (const auto& comp : u.components) {
      std::complex<double> value{0.0, 0.0};
      for (const auto& t : comp) {
        const LandauState s{t.n, t.m_l, Spin::up, 0.0, EnergySign::positive};
        value += t.weight * landau::radial_wavefunction(s, field, rho);
      }
      total += std::norm(value);
    }
    return 2.0 * M_PI * total * rho;
  };
  return std::sqrt(specfun::integrate_radial(integrand, field.beta, n_max, cfg));
}

void normalize(AnalyticSpinor& u, const landau::FieldConfig& field,
               const specfun::QuadratureConfig& cfg) {
  const double raw = raw_quadrature_norm(u, field, cfg);
  u.norm_constant = 1.0 / raw;
  for (auto& comp : u.components)
    for (auto& t : comp) t.weight /= raw;
}

}  // namespace

AnalyticSpinor positive_spinor(int n, const landau::FieldConfig& field, double p,
                               const specfun::QuadratureConfig& cfg) {
  require_family(n);
  const auto& k = field.constants;
  const double rest = k.m0 * k.c * k.c;
  const double energy = rel_energy({n, 0, Spin::up, p, EnergySign::positive}, field);
  const double denom = energy + rest;

  AnalyticSpinor u;
  u.energy = energy;
  u.p = p;
  u.components[0] = {{{1.0, 0.0}, n, 0}};
  u.components[2] = {{{k.c * p / denom, 0.0}, n, 0}};
  u.components[3] = {
      {{0.0, std::sqrt(2.0) * k.c * k.hbar * field.beta * std::sqrt(n + 2.0) / denom}, n + 1, 1}};
  normalize(u, field, cfg);
  return u;
}

AnalyticSpinor negative_spinor(int n, const landau::FieldConfig& field, double p,
                               const specfun::QuadratureConfig& cfg) {
  require_family(n);
  const auto& k = field.constants;
  const double rest = k.m0 * k.c * k.c;
  const double energy = rel_energy({n, 0, Spin::up, p, EnergySign::negative}, field);
  const double denom = energy - rest;  // negative

  AnalyticSpinor u;
  u.energy = energy;
  u.p = p;
  u.components[0] = {{{k.c * p / denom, 0.0}, n, 0}};
  u.components[1] = {
      {{0.0, std::sqrt(2.0) * k.c * k.hbar * field.beta * std::sqrt(n + 2.0) / denom}, n + 1, 1}};
  u.components[2] = {{{1.0, 0.0}, n, 0}};
  normalize(u, field, cfg);
  return u;
}

std::complex<double> spinor_moment(const AnalyticSpinor& a, const AnalyticSpinor& b,
                                   const landau::FieldConfig& field, int power,
                                   const specfun::QuadratureConfig& cfg) {
  std::complex<double> total{0.0, 0.0};
  for (int comp = 0; comp < 4; ++comp) {
    for (const auto& ta : a.components[comp]) {
      for (const auto& tb : b.components[comp]) {
        if (ta.m_l != tb.m_l) continue;  // phase orthogonality in phi
        const LandauState sa{ta.n, ta.m_l, Spin::up, 0.0, EnergySign::positive};
        const LandauState sb{tb.n, tb.m_l, Spin::up, 0.0, EnergySign::positive};
        const double radial = landau::radial_moment(sa, sb, field, power, cfg);
        if (radial != 0.0) total += std::conj(ta.weight) * tb.weight * radial;
      }
    }
  }
  return total;
}

double spinor_norm(const AnalyticSpinor& a, const landau::FieldConfig& field,
                   const specfun::QuadratureConfig& cfg) {
  return std::sqrt(spinor_moment(a, a, field, 0, cfg).real());
}

double spinor_crossed_term(const AnalyticSpinor& a, const AnalyticSpinor& b,
                           const landau::FieldConfig& field,
                           const specfun::QuadratureConfig& cfg) {
  return spinor_moment(a, b, field, 1, cfg).real();
}

}  // namespace magqsl::dirac
