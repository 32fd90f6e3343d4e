#include <doctest.h>

#include <cmath>

#include "magqsl/landau.hpp"

using namespace magqsl;
using landau::EnergySign;
using landau::FieldConfig;
using landau::LandauState;
using landau::PacketSpec;
using landau::PhysicalConstants;
using landau::Spin;

namespace {
LandauState state(int n, int m_l, Spin s = Spin::up, double p = 0.0) {
  return {n, m_l, s, p, EnergySign::positive};
}
}  // namespace

TEST_CASE("field config: derived scales") {
  const auto f = FieldConfig::make(1.0);
  const auto& k = f.constants;
  CHECK(f.beta * f.beta * 2.0 * k.hbar / k.e == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f.curly_e == 2.0 * f.omega);
  // omega = eB/2m0 at B = 1 T, CODATA values
  CHECK(f.omega == doctest::Approx(8.79410005386082e10).epsilon(1e-12));
  CHECK_THROWS_AS(FieldConfig::make(0.0), std::invalid_argument);
  CHECK_THROWS_AS(FieldConfig::make(-2.0), std::invalid_argument);

  const auto natural = FieldConfig::make(1.0, PhysicalConstants::natural());
  CHECK(natural.beta == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(natural.omega == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("landau state: quantum number constraints") {
  CHECK(state(3, 1).valid());
  CHECK(state(3, -3).valid());
  CHECK_FALSE(state(2, 1).valid());   // parity
  CHECK_FALSE(state(2, -4).valid());  // |m_l| > n
  CHECK_FALSE(LandauState{-1, 1, Spin::up, 0.0, EnergySign::positive}.valid());
  CHECK_THROWS_AS(state(2, 1).require_valid(), InvalidStateError);
}

TEST_CASE("radial wavefunction: fixed values and errors") {
  const auto f = FieldConfig::make(1.0, PhysicalConstants::natural());
  // F_{0,0}(0) = beta/sqrt(pi)
  CHECK(landau::radial_wavefunction(state(0, 0), f, 0.0) ==
        doctest::Approx(f.beta / std::sqrt(M_PI)).epsilon(1e-14));
  CHECK_THROWS_AS(landau::radial_wavefunction(state(2, 1), f, 1.0), InvalidStateError);
  CHECK_THROWS_AS(landau::radial_wavefunction(state(0, 0), f, -1.0), std::invalid_argument);
}

TEST_CASE("radial wavefunction: unit norm for (3,1)") {
  const auto f = FieldConfig::make(3.3e9);
  const auto s = state(3, 1);
  const auto density = [&](double rho) {
    const double value = landau::radial_wavefunction(s, f, rho);
    return 2.0 * M_PI * value * value * rho;
  };
  CHECK(specfun::integrate_radial(density, f.beta, 3) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("radial wavefunction: orthonormality across n <= 10") {
  const auto f = FieldConfig::make(1.0, PhysicalConstants::natural());
  for (int m_l : {0, 1}) {
    for (int n = m_l; n <= 10; n += 2) {
      for (int np = m_l; np <= 10; np += 2) {
        const double overlap = landau::radial_moment(state(n, m_l), state(np, m_l), f, 0);
        CHECK(std::abs(overlap - (n == np ? 1.0 : 0.0)) < 1e-8);
      }
    }
  }
}

TEST_CASE("nonrel energy: spectrum") {
  const auto f = FieldConfig::make(1.0);
  const double hw = f.constants.hbar * f.omega;
  CHECK(landau::nonrel_energy(state(0, 0, Spin::up), f) == doctest::Approx(2.0 * hw).epsilon(1e-14));
  CHECK(landau::nonrel_energy(state(0, 0, Spin::down), f) == 0.0);

  // spacing between (n, n+2) is 2 hbar omega = hbar curly_e, independent of n
  for (int n : {0, 2, 4, 8}) {
    const double gap =
        landau::nonrel_energy(state(n + 2, 0), f) - landau::nonrel_energy(state(n, 0), f);
    CHECK(gap == doctest::Approx(f.constants.hbar * f.curly_e).epsilon(1e-13));
  }

  // p contributes kinetically
  const double p = 3.0e-25;
  CHECK(landau::nonrel_energy(state(0, 0, Spin::up, p), f) ==
        doctest::Approx(2.0 * hw + p * p / (2.0 * f.constants.m0)).epsilon(1e-13));
}

TEST_CASE("radial moment: closed-form Gaussian values") {
  const auto f = FieldConfig::make(7.7e5);
  const double b = f.beta;
  CHECK(landau::radial_moment(state(0, 0), state(2, 0), f, 1) ==
        doctest::Approx(std::sqrt(M_PI) / (4.0 * b)).epsilon(1e-10));
  CHECK(landau::radial_moment(state(0, 0), state(0, 0), f, 1) ==
        doctest::Approx(std::sqrt(M_PI) / (2.0 * b)).epsilon(1e-10));
  // m_l mismatch: exact zero, not merely small
  CHECK(landau::radial_moment(state(0, 0), state(1, 1), f, 1) == 0.0);
}

TEST_CASE("radial moment: scales as 1/beta") {
  const auto f1 = FieldConfig::make(2.0e4);
  const auto f4 = FieldConfig::make(8.0e4);  // 4B doubles beta
  CHECK(f4.beta == doctest::Approx(2.0 * f1.beta).epsilon(1e-14));
  for (int n : {0, 2, 6}) {
    const double m1 = landau::radial_moment(state(n, 0), state(n, 0), f1, 1);
    const double m4 = landau::radial_moment(state(n, 0), state(n, 0), f4, 1);
    CHECK(m4 == doctest::Approx(0.5 * m1).epsilon(1e-12));
  }
}

TEST_CASE("mean radial position: periodicity and displacement") {
  const auto f = FieldConfig::make(1.0);
  const double period = 2.0 * M_PI / f.curly_e;
  CHECK(landau::mean_rho_nonrel(f, 0.0) ==
        doctest::Approx(landau::mean_rho_nonrel(f, period)).epsilon(1e-12));

  const double t_min = M_PI * f.constants.m0 / (f.constants.e * f.B);
  const double displacement =
      std::abs(landau::mean_rho_nonrel(f, t_min) - landau::mean_rho_nonrel(f, 0.0));
  const double expected = std::sqrt(M_PI * f.constants.hbar / (2.0 * f.constants.e * f.B));
  CHECK(displacement == doctest::Approx(expected).epsilon(1e-9));
  // B = 1 T with CODATA constants
  CHECK(displacement == doctest::Approx(3.21545785889189e-8).epsilon(1e-9));
}

TEST_CASE("momentum density: normalization, mean, variance") {
  const auto k = PhysicalConstants::si();
  const auto f = FieldConfig::make(5.0);
  const PacketSpec packet{2.2e-27, 30.0 / f.beta};
  const double sigma = packet.sigma_p(k);
  CHECK(sigma == doctest::Approx(k.hbar * f.beta / 60.0).epsilon(1e-14));

  const auto one = [](double) { return 1.0; };
  CHECK(landau::integrate_momentum(one, packet, k) == doctest::Approx(1.0).epsilon(1e-12));
  const auto ident = [](double p) { return p; };
  CHECK(landau::integrate_momentum(ident, packet, k) == doctest::Approx(packet.p0).epsilon(1e-12));
  const auto spread = [&](double p) { return (p - packet.p0) * (p - packet.p0); };
  CHECK(landau::integrate_momentum(spread, packet, k) ==
        doctest::Approx(k.hbar * k.hbar / (4.0 * packet.d * packet.d)).epsilon(1e-12));

  // density itself integrated by trapezoid
  double acc = 0.0;
  const int steps = 40000;
  const double a = packet.p0 - 8.0 * sigma, h = 16.0 * sigma / steps;
  for (int i = 0; i <= steps; ++i)
    acc += (i == 0 || i == steps ? 0.5 : 1.0) * landau::momentum_density(packet, k, a + h * i);
  CHECK(acc * h == doctest::Approx(1.0).epsilon(1e-10));

  const PacketSpec default_packet = PacketSpec::default_for(f);
  CHECK(default_packet.sigma_p(k) == doctest::Approx(f.beta * k.hbar / 100.0).epsilon(1e-14));
}
