#include "magqsl/observables.hpp"

#include <cmath>
#include <vector>

#include <gmp.h>
#include <mpfr.h>

#include "magqsl/dirac.hpp"

namespace magqsl::observables {

double displacement_nonrel(const landau::FieldConfig& field) {
  const auto& k = field.constants;
  return std::sqrt(M_PI * k.hbar / (2.0 * k.e * field.B));
}

SpeedResult speed_nonrel(const landau::FieldConfig& field) {
  const auto& k = field.constants;
  SpeedResult r;
  r.t_min = M_PI * k.m0 / (k.e * field.B);
  r.displacement = displacement_nonrel(field);
  r.v_bar_over_c = r.displacement / (r.t_min * k.c);
  r.scenario = {qsl::SuperpositionKind::nonrelativistic, 0,
                landau::PacketSpec::default_for(field), field};
  return r;
}

double displacement_rel(const qsl::SuperpositionSpec& spec,
                        const specfun::QuadratureConfig& cfg) {
  spec.validate();
  if (spec.kind == qsl::SuperpositionKind::nonrelativistic)
    throw std::invalid_argument("displacement_rel: use displacement_nonrel for the "
                                "Schroedinger-Pauli scenario");
  const bool antiparticle = spec.kind == qsl::SuperpositionKind::antiparticle_particle;
  const double t_min = qsl::qsl_time(spec).t_min;
  const double hbar = spec.field.constants.hbar;

  // <rho>_t - <rho>_0 per momentum: the diagonal terms drop out and the
  // crossed term picks up cos(dE t/hbar) - 1, with dE evaluated at each node.
  const auto difference = [&](double p) {
    const dirac::AnalyticSpinor lower =
        antiparticle ? dirac::negative_spinor(spec.n, spec.field, p, cfg)
                     : dirac::positive_spinor(spec.n, spec.field, p, cfg);
    const dirac::AnalyticSpinor upper = dirac::positive_spinor(spec.n + 2, spec.field, p, cfg);
    const double crossed = dirac::spinor_crossed_term(lower, upper, spec.field, cfg);
    const double gap = upper.energy - lower.energy;
    return crossed * (std::cos(gap * t_min / hbar) - 1.0);
  };
  return std::abs(landau::integrate_momentum(difference, spec.packet, spec.field.constants, cfg));
}

SpeedResult speed_rel(const qsl::SuperpositionSpec& spec, const specfun::QuadratureConfig& cfg) {
  SpeedResult r;
  r.t_min = qsl::qsl_time(spec).t_min;
  r.displacement = displacement_rel(spec, cfg);
  r.v_bar_over_c = r.displacement / (r.t_min * spec.field.constants.c);
  r.scenario = spec;
  return r;
}

namespace {

struct Mpz {
  mpz_t v;
  Mpz() { mpz_init(v); }
  explicit Mpz(unsigned long x) { mpz_init_set_ui(v, x); }
  Mpz(const Mpz&) = delete;
  Mpz& operator=(const Mpz&) = delete;
  ~Mpz() { mpz_clear(v); }
};

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  ~Mpfr() { mpfr_clear(v); }
};

constexpr mpfr_prec_t kSumPrecision = 320;

struct StrongFieldSums {
  double displacement_beta;  // sqrt(pi) |Q1 + sqrt((N+1)(N+2)) Q2|
  double crossed_beta;       // sqrt(pi) |Q1| = beta <n,0|rho|n+2,0>
};

// The double sum splits into two exactly rational pieces,
//   S / sqrt(pi) = Q1 + sqrt((N+1)(N+2)) Q2,   N = n/2,
// because Gamma(s + 3/2) = sqrt(pi) (2s+1)!! / 2^{s+1}. Both pieces are
// accumulated as exact integers over a fixed common denominator, so the
// ~10^65 cancellation at n = 132 costs no precision at all; only the final
// assembly rounds, at 320-bit precision.
StrongFieldSums strong_field_sums(int n) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("strong-field sums need even n >= 0");
  if (n > 200)
    throw PrecisionError("strong-field sums validated for n <= 200 only");
  const unsigned long N = static_cast<unsigned long>(n) / 2;
  const unsigned long M = N + 1;

  // bi[i] = binom(N,i) N!/i!, bj[j] = binom(M,j) M!/j!, and the (i+1)!,
  // (j+1)! variants for the second sum.
  std::vector<Mpz> bi(N + 1), bj(M + 1), ci(N + 1), cj(M + 1);
  {
    Mpz binom, fall;
    for (unsigned long i = 0; i <= N; ++i) {
      mpz_bin_uiui(binom.v, N, i);
      mpz_fac_ui(fall.v, N);
      Mpz ifac;
      mpz_fac_ui(ifac.v, i);
      mpz_divexact(fall.v, fall.v, ifac.v);  // N!/i!
      mpz_mul(bi[i].v, binom.v, fall.v);
      // (N+1)!/(i+1)!
      mpz_fac_ui(fall.v, N + 1);
      mpz_fac_ui(ifac.v, i + 1);
      mpz_divexact(fall.v, fall.v, ifac.v);
      mpz_mul(ci[i].v, binom.v, fall.v);
    }
    for (unsigned long j = 0; j <= M; ++j) {
      mpz_bin_uiui(binom.v, M, j);
      mpz_fac_ui(fall.v, M);
      Mpz jfac;
      mpz_fac_ui(jfac.v, j);
      mpz_divexact(fall.v, fall.v, jfac.v);  // M!/j!
      mpz_mul(bj[j].v, binom.v, fall.v);
      mpz_fac_ui(fall.v, M + 1);
      mpz_fac_ui(jfac.v, j + 1);
      mpz_divexact(fall.v, fall.v, jfac.v);
      mpz_mul(cj[j].v, binom.v, fall.v);
    }
  }

  // Double factorials (2s+1)!! and (2s+3)!! for s up to N+M.
  const unsigned long s_max = N + M;
  std::vector<Mpz> odd1(s_max + 1), odd3(s_max + 1);
  for (unsigned long s = 0; s <= s_max; ++s) {
    mpz_2fac_ui(odd1[s].v, 2 * s + 1);
    mpz_2fac_ui(odd3[s].v, 2 * s + 3);
  }

  // A1 over denominator 2^{2N+2} N! (N+1)!; A2 over 2^{2N+3} (N+1)! (N+2)!.
  Mpz a1, a2, term;
  for (unsigned long i = 0; i <= N; ++i) {
    for (unsigned long j = 0; j <= M; ++j) {
      const unsigned long s = i + j;
      const bool negative = (s % 2) != 0;
      // Brings 1/2^{s+1} (resp. 1/2^{s+2}) onto the common denominator.
      const unsigned long shift = s_max - s;

      mpz_mul(term.v, bi[i].v, bj[j].v);
      mpz_mul(term.v, term.v, odd1[s].v);
      mpz_mul_2exp(term.v, term.v, shift);
      if (negative) mpz_sub(a1.v, a1.v, term.v);
      else mpz_add(a1.v, a1.v, term.v);

      mpz_mul(term.v, ci[i].v, cj[j].v);
      mpz_mul(term.v, term.v, odd3[s].v);
      mpz_mul_2exp(term.v, term.v, shift);
      if (negative) mpz_sub(a2.v, a2.v, term.v);
      else mpz_add(a2.v, a2.v, term.v);
    }
  }

  // Q1 = A1 / (2^{s_max+1} N! M!), Q2 = A2 / (2^{s_max+2} (N+1)! (M+1)!).
  Mpfr q1(kSumPrecision), q2(kSumPrecision), den(kSumPrecision), tmp(kSumPrecision),
      root(kSumPrecision), total(kSumPrecision);
  Mpz fac;

  mpfr_set_z(q1.v, a1.v, MPFR_RNDN);
  mpz_fac_ui(fac.v, N);
  mpfr_set_z(den.v, fac.v, MPFR_RNDN);
  mpz_fac_ui(fac.v, M);
  mpfr_set_z(tmp.v, fac.v, MPFR_RNDN);
  mpfr_mul(den.v, den.v, tmp.v, MPFR_RNDN);
  mpfr_mul_2ui(den.v, den.v, s_max + 1, MPFR_RNDN);
  mpfr_div(q1.v, q1.v, den.v, MPFR_RNDN);

  mpfr_set_z(q2.v, a2.v, MPFR_RNDN);
  mpz_fac_ui(fac.v, N + 1);
  mpfr_set_z(den.v, fac.v, MPFR_RNDN);
  mpz_fac_ui(fac.v, M + 1);
  mpfr_set_z(tmp.v, fac.v, MPFR_RNDN);
  mpfr_mul(den.v, den.v, tmp.v, MPFR_RNDN);
  mpfr_mul_2ui(den.v, den.v, s_max + 2, MPFR_RNDN);
  mpfr_div(q2.v, q2.v, den.v, MPFR_RNDN);

  mpfr_set_ui(root.v, (N + 1) * (N + 2), MPFR_RNDN);
  mpfr_sqrt(root.v, root.v, MPFR_RNDN);
  mpfr_mul(total.v, root.v, q2.v, MPFR_RNDN);
  mpfr_add(total.v, total.v, q1.v, MPFR_RNDN);

  mpfr_const_pi(tmp.v, MPFR_RNDN);
  mpfr_sqrt(tmp.v, tmp.v, MPFR_RNDN);

  mpfr_mul(total.v, total.v, tmp.v, MPFR_RNDN);
  mpfr_abs(total.v, total.v, MPFR_RNDN);
  StrongFieldSums out;
  out.displacement_beta = mpfr_get_d(total.v, MPFR_RNDN);

  mpfr_mul(q1.v, q1.v, tmp.v, MPFR_RNDN);
  mpfr_abs(q1.v, q1.v, MPFR_RNDN);
  out.crossed_beta = mpfr_get_d(q1.v, MPFR_RNDN);
  return out;
}

}  // namespace

double displacement_strong_field_beta(int n) { return strong_field_sums(n).displacement_beta; }

double displacement_strong_field_closed_form(int n, const landau::FieldConfig& field) {
  return displacement_strong_field_beta(n) / field.beta;
}

double speed_strong_field(int n) {
  const double gap = 2.0 / (std::sqrt(n + 4.0) + std::sqrt(n + 2.0));
  return displacement_strong_field_beta(n) * gap * std::sqrt(2.0) / M_PI;
}

double crossed_moment_strong_field_beta(int n) { return strong_field_sums(n).crossed_beta; }

double optimal_p0_over_beta_hbar(int n) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("optimal_p0_over_beta_hbar: n must be even and >= 0");
  return std::pow((2.0 * n + 4.0) * (2.0 * n + 8.0), 0.25);
}

double speed_antiparticle_strong_field(int n, double p0_over_beta_hbar) {
  const double u = p0_over_beta_hbar;
  if (!(u >= 0.0)) throw std::invalid_argument("speed_antiparticle_strong_field: p0 must be >= 0");
  const double a = u * u + 2.0 * n + 4.0;
  const double b = u * u + 2.0 * n + 8.0;
  return 4.0 * u * crossed_moment_strong_field_beta(n) / (M_PI * std::sqrt(a * b));
}

StrongFieldAntiparticle antiparticle_strong_field(int n, double p0_over_beta_hbar,
                                                  const landau::FieldConfig& field) {
  const double u = p0_over_beta_hbar;
  const double a = std::sqrt(u * u + 2.0 * n + 4.0);
  const double b = std::sqrt(u * u + 2.0 * n + 8.0);
  const auto& k = field.constants;
  StrongFieldAntiparticle r;
  r.t_min = M_PI / (k.c * field.beta * (a + b));
  // u (1/a - 1/b) <n,0|rho|n+2,0>, written cancellation-free.
  r.displacement =
      crossed_moment_strong_field_beta(n) / field.beta * 4.0 * u / (a * b * (a + b));
  r.v_bar_over_c = r.displacement / (r.t_min * k.c);
  return r;
}

}  // namespace magqsl::observables
