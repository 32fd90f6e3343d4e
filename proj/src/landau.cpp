#include "magqsl/landau.hpp"

#include <cmath>
#include <string>

namespace magqsl::landau {

PhysicalConstants PhysicalConstants::si() {
  // CODATA 2018. e and h are exact; hbar = h / 2 pi.
  return {1.602176634e-19, 9.1093837015e-31, 6.62607015e-34 / (2.0 * M_PI), 299792458.0};
}

PhysicalConstants PhysicalConstants::natural() { return {1.0, 1.0, 1.0, 1.0}; }

FieldConfig FieldConfig::make(double b_tesla, const PhysicalConstants& k) {
  if (!(b_tesla > 0.0)) throw std::invalid_argument("FieldConfig: B must be > 0");
  if (!(k.e > 0.0 && k.m0 > 0.0 && k.hbar > 0.0 && k.c > 0.0))
    throw std::invalid_argument("FieldConfig: constants must be strictly positive");
  FieldConfig f;
  f.B = b_tesla;
  f.constants = k;
  f.beta = std::sqrt(k.e * b_tesla / (2.0 * k.hbar));
  f.omega = k.e * b_tesla / (2.0 * k.m0);
  f.curly_e = 2.0 * f.omega;
  return f;
}

bool LandauState::valid() const {
  return n >= 0 && std::abs(m_l) <= n && (n - m_l) % 2 == 0;
}

void LandauState::require_valid() const {
  if (!valid())
    throw InvalidStateError("LandauState: need |m_l| <= n and n - m_l even, got n=" +
                            std::to_string(n) + " m_l=" + std::to_string(m_l));
}

PacketSpec PacketSpec::default_for(const FieldConfig& field) {
  return {0.0, 50.0 / field.beta};
}

double radial_wavefunction(const LandauState& state, const FieldConfig& field, double rho) {
  state.require_valid();
  if (!(rho >= 0.0)) throw std::invalid_argument("radial_wavefunction: rho must be >= 0");
  const int m = std::abs(state.m_l);
  const int k = (state.n - m) / 2;
  const int q = (state.n + m) / 2;
  // (-1)^k sqrt(k!/(pi q!)); the factorial ratio in log space.
  const double prefactor =
      (k % 2 ? -1.0 : 1.0) *
      std::exp(0.5 * (specfun::log_gamma(k + 1.0) - specfun::log_gamma(q + 1.0))) /
      std::sqrt(M_PI);
  const double u = field.beta * rho;
  const double x = u * u;
  return prefactor * field.beta * std::pow(u, m) * specfun::laguerre(k, m, x) *
         std::exp(-0.5 * x);
}

double nonrel_energy(const LandauState& state, const FieldConfig& field) {
  state.require_valid();
  const auto& k = field.constants;
  const double two_ms = static_cast<double>(static_cast<int>(state.m_s));
  return state.p * state.p / (2.0 * k.m0) +
         k.hbar * field.omega * (state.n + state.m_l + two_ms + 1.0);
}

double radial_moment(const LandauState& a, const LandauState& b, const FieldConfig& field,
                     int power, const specfun::QuadratureConfig& cfg) {
  a.require_valid();
  b.require_valid();
  if (power < 0) throw std::invalid_argument("radial_moment: power must be >= 0");
  if (a.m_l != b.m_l) return 0.0;  // azimuthal integration, done analytically
  const int n_max = std::max(a.n, b.n);
  const auto integrand = [&](double rho) {
    return 2.0 * M_PI * radial_wavefunction(a, field, rho) *
           radial_wavefunction(b, field, rho) * std::pow(rho, power + 1);
  };
  return specfun::integrate_radial(integrand, field.beta, n_max, cfg);
}

double mean_rho_nonrel(const FieldConfig& field, double t, const specfun::QuadratureConfig& cfg) {
  const LandauState ground{0, 0, Spin::up, 0.0, EnergySign::positive};
  const LandauState excited{2, 0, Spin::up, 0.0, EnergySign::positive};
  const double rho_00 = radial_moment(ground, ground, field, 1, cfg);
  const double rho_22 = radial_moment(excited, excited, field, 1, cfg);
  const double rho_02 = radial_moment(ground, excited, field, 1, cfg);
  return 0.5 * (rho_00 + rho_22 + 2.0 * rho_02 * std::cos(field.curly_e * t));
}

double momentum_density(const PacketSpec& packet, const PhysicalConstants& k, double p) {
  if (!(packet.d > 0.0)) throw std::invalid_argument("momentum_density: d must be > 0");
  const double sigma = packet.sigma_p(k);
  const double z = (p - packet.p0) / sigma;
  return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * M_PI));
}

double integrate_momentum(const std::function<double(double)>& g, const PacketSpec& packet,
                          const PhysicalConstants& k, const specfun::QuadratureConfig& cfg) {
  if (!(packet.d > 0.0)) throw std::invalid_argument("integrate_momentum: d must be > 0");
  cfg.validate();
  return specfun::integrate_gaussian_weight(g, packet.p0, packet.sigma_p(k),
                                            cfg.momentum_node_count);
}

}  // namespace magqsl::landau
