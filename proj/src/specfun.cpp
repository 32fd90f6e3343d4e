#include "magqsl/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <quadmath.h>

namespace magqsl::specfun {

void QuadratureConfig::validate() const {
  if (!(relative_tolerance > 0.0) || !(relative_tolerance < 1e-3))
    throw std::invalid_argument("relative_tolerance must lie in (0, 1e-3)");
  if (max_subdivisions < 1)
    throw std::invalid_argument("max_subdivisions must be positive");
  if (momentum_node_count < 16)
    throw std::invalid_argument("momentum_node_count must be at least 16");
  if (!(radial_cutoff_factor > 0.0))
    throw std::invalid_argument("radial_cutoff_factor must be positive");
}

double laguerre(int k, int alpha, double x) {
  if (k < 0 || alpha < 0) throw std::domain_error("laguerre: negative index");
  if (!(x >= 0.0)) throw std::domain_error("laguerre: argument must be >= 0");
  if (k == 0) return 1.0;
  double below = 1.0;                 // L_0
  double current = 1.0 + alpha - x;   // L_1
  for (int m = 1; m < k; ++m) {
    const double above =
        ((2.0 * m + alpha + 1.0 - x) * current - (m + alpha) * below) / (m + 1.0);
    below = current;
    current = above;
  }
  return current;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be > 0");
  int sign = 1;
  return ::lgamma_r(x, &sign);  // reentrant; sign is +1 for x > 0
}

SignedLogValue SignedLogValue::from_value(double v) {
  if (v == 0.0) return {0, 0.0};
  return {v > 0.0 ? 1 : -1, std::log(std::abs(v))};
}

double SignedLogValue::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude);
}

SignedLogValue signed_log_sum(std::span<const SignedLogValue> terms) {
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms)
    if (t.sign != 0) peak = std::max(peak, t.log_magnitude);
  if (!std::isfinite(peak)) return {0, 0.0};

  // Scale by the peak and accumulate in quad precision with Kahan
  // compensation; term exponentials are then all <= 1 and the compensated
  // quad accumulator keeps ~1e-33 of the running magnitude.
  __float128 sum = 0, carry = 0;
  for (const auto& t : terms) {
    if (t.sign == 0) continue;
    const __float128 term =
        t.sign * expq(static_cast<__float128>(t.log_magnitude) - static_cast<__float128>(peak));
    const __float128 y = term - carry;
    const __float128 s = sum + y;
    carry = (s - sum) - y;
    sum = s;
  }
  if (sum == 0) return {0, 0.0};
  SignedLogValue out;
  out.sign = sum > 0 ? 1 : -1;
  out.log_magnitude = peak + static_cast<double>(logq(fabsq(sum)));
  return out;
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (QUADPACK values).
constexpr double kKronrodNode[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kKronrodWeight[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussWeight[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  double integral;
  double error;
  double abs_integral;
};

Segment evaluate_gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double gauss = 0.0, kronrod = 0.0, abs_kronrod = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double offset = half * kKronrodNode[i];
    double fk;
    if (i == 7) {
      fk = f(mid);
    } else {
      fk = f(mid - offset) + f(mid + offset);
    }
    kronrod += kKronrodWeight[i] * fk;
    abs_kronrod += kKronrodWeight[i] * std::abs(fk);
    if (i % 2 == 1) gauss += kGaussWeight[i / 2] * fk;
  }
  Segment seg;
  seg.a = a;
  seg.b = b;
  seg.integral = kronrod * half;
  seg.abs_integral = abs_kronrod * std::abs(half);
  const double diff = std::abs((kronrod - gauss) * half);
  // QUADPACK-style sharpened error estimate.
  seg.error = diff;
  if (seg.abs_integral > 0.0 && diff > 0.0)
    seg.error = seg.abs_integral * std::min(1.0, std::pow(200.0 * diff / seg.abs_integral, 1.5));
  return seg;
}

}  // namespace

double integrate_radial(const std::function<double(double)>& f, double beta,
                        int n_max, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(beta > 0.0)) throw std::invalid_argument("integrate_radial: beta must be > 0");
  if (n_max < 0) throw std::invalid_argument("integrate_radial: n_max must be >= 0");
  const double radius = cfg.radial_cutoff_factor * std::sqrt(2.0 * n_max + 4.0) / beta;

  std::vector<Segment> segments;
  segments.reserve(64);
  segments.push_back(evaluate_gk15(f, 0.0, radius));

  double total = segments[0].integral;
  double total_error = segments[0].error;
  double total_abs = segments[0].abs_integral;

  const double eps = std::numeric_limits<double>::epsilon();
  auto converged = [&] {
    return total_error <= std::max(cfg.relative_tolerance * std::abs(total), 8.0 * eps * total_abs);
  };

  int splits = 0;
  while (!converged()) {
    if (splits >= cfg.max_subdivisions)
      throw ConvergenceError("integrate_radial: subdivision limit reached", total, total_error);
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segments.size(); ++i)
      if (segments[i].error > segments[worst].error) worst = i;
    const Segment seg = segments[worst];
    const double mid = 0.5 * (seg.a + seg.b);
    if (mid <= seg.a || mid >= seg.b)
      throw ConvergenceError("integrate_radial: interval underflow", total, total_error);
    const Segment left = evaluate_gk15(f, seg.a, mid);
    const Segment right = evaluate_gk15(f, mid, seg.b);
    total += left.integral + right.integral - seg.integral;
    total_error += left.error + right.error - seg.error;
    total_abs += left.abs_integral + right.abs_integral - seg.abs_integral;
    segments[worst] = left;
    segments.push_back(right);
    ++splits;
  }

  // A tail that has not decayed at the cutoff means mass beyond R was
  // silently dropped; refuse to report such a value as converged.
  const double edge = std::abs(f(radius)) * radius;
  if (edge > 100.0 * cfg.relative_tolerance * total_abs && edge > 1e-280)
    throw ConvergenceError("integrate_radial: integrand not negligible at the cutoff radius",
                           total, edge);
  return total;
}

GaussHermiteRule::GaussHermiteRule(int point_count) {
  if (point_count < 1) throw std::invalid_argument("GaussHermiteRule: need at least one node");
  const int n = point_count;
  node.assign(n, 0.0);
  weight.assign(n, 0.0);

  // Newton iteration on the normalized Hermite recurrence; roots found from
  // the largest inward, each seeded from the previous ones.
  const long double norm0 = 0.7511255444649424828587030047762276930510L;  // pi^{-1/4}
  const int half = (n + 1) / 2;
  long double z = 0.0L, z_prev = 0.0L, z_prev2 = 0.0L;
  for (int i = 0; i < half; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0L * n + 1.0L) - 1.85575L * std::pow(2.0L * n + 1.0L, -1.0L / 6.0L);
    } else if (i == 1) {
      z -= 1.14L * std::pow(static_cast<long double>(n), 0.426L) / z;
    } else if (i == 2) {
      z = 1.86L * z - 0.86L * z_prev2;
    } else if (i == 3) {
      z = 1.91L * z - 0.91L * z_prev2;
    } else {
      z = 2.0L * z - z_prev2;
    }
    long double pp = 0.0L;
    for (int iter = 0; iter < 200; ++iter) {
      long double p1 = norm0;
      long double p2 = 0.0L;
      for (int j = 0; j < n; ++j) {
        const long double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0L / (j + 1.0L)) * p2 - std::sqrt(static_cast<long double>(j) / (j + 1.0L)) * p3;
      }
      pp = std::sqrt(2.0L * n) * p2;
      const long double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-18L) break;
    }
    z_prev2 = z_prev;
    z_prev = z;
    // Recover p2 at the converged root for the weight.
    long double p1 = norm0, p2 = 0.0L;
    for (int j = 0; j < n; ++j) {
      const long double p3 = p2;
      p2 = p1;
      p1 = z * std::sqrt(2.0L / (j + 1.0L)) * p2 - std::sqrt(static_cast<long double>(j) / (j + 1.0L)) * p3;
    }
    pp = std::sqrt(2.0L * n) * p2;
    const long double w = 2.0L / (pp * pp);
    node[n - 1 - i] = static_cast<double>(z);
    node[i] = -static_cast<double>(z);
    weight[n - 1 - i] = static_cast<double>(w);
    weight[i] = static_cast<double>(w);
  }
  if (n % 2 == 1) node[n / 2] = 0.0;
}

double integrate_gaussian_weight(const std::function<double(double)>& g,
                                 double mean, double sigma, int node_count) {
  if (!(sigma > 0.0)) throw std::invalid_argument("integrate_gaussian_weight: sigma must be > 0");
  const GaussHermiteRule rule(node_count);
  const double scale = std::sqrt(2.0) * sigma;
  // Symmetric nodes are summed in pairs so that odd integrands cancel
  // exactly, not merely to rounding.
  double sum = 0.0;
  for (int i = 0; i < node_count / 2; ++i) {
    const double offset = scale * rule.node[node_count - 1 - i];
    sum += rule.weight[i] * (g(mean + offset) + g(mean - offset));
  }
  if (node_count % 2 == 1) sum += rule.weight[node_count / 2] * g(mean);
  return sum / std::sqrt(M_PI);
}

}  // namespace magqsl::specfun
