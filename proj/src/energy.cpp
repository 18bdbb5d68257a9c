#include "sdl/energy.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "sdl/error.hpp"
#include "sdl/kernels.hpp"

namespace sdl {

EnergyReport riesz_energy(const DiscreteMeasure& m, double s) {
  if (!(s > 0.0)) fail_usage("riesz energy: s must be positive");
  EnergyReport rep;
  rep.s = s;
  rep.method = EnergyReport::Method::real_space;
  rep.tail_slope = std::numeric_limits<double>::quiet_NaN();
  bool coincident = false;
  // pair_pow_sum runs over unordered pairs with |x_i - x_j|^2 as the base.
  const double half = kernels::pair_pow_sum(
      m.positions().data(), m.weights().data(), m.size(), m.dim(), -s / 2.0,
      &coincident);
  if (coincident) {
    rep.infinite = true;
    rep.value = std::numeric_limits<double>::infinity();
  } else {
    rep.value = 2.0 * half;
  }
  return rep;
}

namespace {

// Midpoint-rule cell widths for a geometric grid truncated to [lo, hi]:
// interior boundaries at geometric midpoints, end cells clamped, so the
// widths sum to exactly hi - lo.
std::vector<double> cell_widths(const std::vector<double>& radii, double lo,
                                double hi) {
  const std::size_t k = radii.size();
  std::vector<double> w(k);
  double left = lo;
  for (std::size_t i = 0; i < k; ++i) {
    const double right =
        i + 1 < k ? std::sqrt(radii[i] * radii[i + 1]) : hi;
    w[i] = right - left;
    left = right;
  }
  return w;
}

// Least-squares slope of log v against log r over the shells with
// r >= sqrt(r_min * r_max) (the tail half in log scale). Nonpositive values
// are skipped; NaN when fewer than two points survive.
double tail_slope_fit(const std::vector<double>& r,
                      const std::vector<double>& v, double r_min,
                      double r_max) {
  const double split = std::sqrt(r_min * r_max);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < split || !(v[i] > 0.0)) continue;
    const double x = std::log(r[i]), y = std::log(v[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / denom;
}

}  // namespace

EnergyReport st_energy(const DiscreteMeasure& m, double s, double theta,
                       const SweepParams& sweep) {
  if (!(theta > 0.0) || theta > 1.0)
    fail_usage("st energy: theta must lie in (0, 1]");
  if (s < 0.0) fail_usage("st energy: s must be >= 0");
  const double p = 2.0 / theta;
  const auto shells = dyadic_shell_sweep(m, sweep.r_min, sweep.r_max,
                                         sweep.shells_per_octave, p,
                                         sweep.n_dirs, sweep.seed);
  std::vector<double> radii, integrand;
  radii.reserve(shells.size());
  for (const auto& st : shells) radii.push_back(st.radius);
  const auto widths = cell_widths(radii, sweep.r_min, sweep.r_max);

  // r^(s/theta - d) * r^(d-1) collapses to r^(s/theta - 1).
  const double omega = unit_sphere_area(m.dim());
  double acc = 0.0;
  for (std::size_t i = 0; i < shells.size(); ++i) {
    const double h =
        std::pow(radii[i], s / theta - 1.0) * shells[i].mean_pow;
    integrand.push_back(h);
    acc += widths[i] * h;
  }

  EnergyReport rep;
  rep.s = s;
  rep.theta = theta;
  rep.method = EnergyReport::Method::frequency_shells;
  rep.r_min = sweep.r_min;
  rep.r_max = sweep.r_max;
  rep.value = std::pow(omega * acc, theta);
  rep.tail_slope = tail_slope_fit(radii, integrand, sweep.r_min, sweep.r_max);
  return rep;
}

EnergyReport st_energy_sup(const DiscreteMeasure& m, double s,
                           const SweepParams& sweep) {
  if (s < 0.0) fail_usage("st energy sup: s must be >= 0");
  const auto shells = dyadic_shell_sweep(m, sweep.r_min, sweep.r_max,
                                         sweep.shells_per_octave, 2.0,
                                         sweep.n_dirs, sweep.seed);
  EnergyReport rep;
  rep.s = s;
  rep.theta = 0.0;
  rep.method = EnergyReport::Method::frequency_shells;
  rep.r_min = sweep.r_min;
  rep.r_max = sweep.r_max;
  rep.tail_slope = std::numeric_limits<double>::quiet_NaN();
  for (const auto& st : shells)
    rep.value = std::max(rep.value, st.sup_pow * std::pow(st.radius, s));
  return rep;
}

EquivalenceRatio energy_equivalence_check(const DiscreteMeasure& m, double s,
                                          const SweepParams& sweep) {
  if (!(s > 0.0) || !(s < static_cast<double>(m.dim())))
    fail_usage("energy equivalence: need 0 < s < d");
  EquivalenceRatio out;
  out.real_side = riesz_energy(m, s);
  out.freq_side = st_energy(m, s, 1.0, sweep);
  if (out.real_side.infinite) {
    out.status = "real-space energy infinite (coincident atoms); skipped";
    return out;
  }
  if (!(out.freq_side.value > 0.0)) {
    out.status = "frequency-side integral vanished; skipped";
    return out;
  }
  out.ratio = out.real_side.value / out.freq_side.value;
  out.valid = true;
  out.status = "ok";
  return out;
}

}  // namespace sdl
