#include "sdl/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sdl/error.hpp"
#include "sdl/kernels.hpp"
#include "sdl/rng.hpp"

namespace sdl {

std::complex<double> ft_point(const DiscreteMeasure& m,
                              const std::vector<double>& xi) {
  if (xi.size() != m.dim())
    fail_usage("ft_point: frequency dimension does not match measure");
  const std::size_t n = m.size(), d = m.dim();
  double re = 0.0, im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double dot = 0.0;
    const double* x = m.position(j);
    for (std::size_t t = 0; t < d; ++t) dot += x[t] * xi[t];
    const double phase = -2.0 * std::numbers::pi * dot;
    re += m.weight(j) * std::cos(phase);
    im += m.weight(j) * std::sin(phase);
  }
  return {re, im};
}

void ft_batch(const DiscreteMeasure& m, const double* freqs,
              std::size_t n_freq, std::complex<double>* out) {
  const auto coords = m.coords_dim_major();
  kernels::nudft(coords.data(), m.weights().data(), m.size(), m.dim(), freqs,
                 n_freq, out);
}

namespace {

// |mu-hat(r w_i)| for n_dirs seeded directions, clamped to <= 1 so that the
// 0 <= mean_pow <= sup_pow <= 1 invariants survive rounding.
std::vector<double> sample_moduli(const DiscreteMeasure& m, double r,
                                  std::size_t n_dirs, std::uint64_t seed) {
  const std::size_t d = m.dim();
  Rng rng(seed);
  std::vector<double> freqs(n_dirs * d);
  for (std::size_t i = 0; i < n_dirs; ++i) {
    rng.sphere_direction(&freqs[i * d], d);
    for (std::size_t t = 0; t < d; ++t) freqs[i * d + t] *= r;
  }
  std::vector<std::complex<double>> vals(n_dirs);
  ft_batch(m, freqs.data(), n_dirs, vals.data());
  std::vector<double> moduli(n_dirs);
  for (std::size_t i = 0; i < n_dirs; ++i)
    moduli[i] = std::min(std::abs(vals[i]), 1.0);
  return moduli;
}

double mean_pow_of(const std::vector<double>& moduli, double p) {
  double acc = 0.0;
  for (double m : moduli) acc += std::pow(m, p);
  return acc / static_cast<double>(moduli.size());
}

}  // namespace

ShellStat shell_stat(const DiscreteMeasure& m, double r, double p,
                     std::size_t n_dirs, std::uint64_t seed) {
  if (!(r > 0.0)) fail_usage("shell_stat: radius must be positive");
  if (!(p > 0.0)) fail_usage("shell_stat: exponent must be positive");
  if (n_dirs < 1) fail_usage("shell_stat: need at least one direction");
  const auto moduli = sample_moduli(m, r, n_dirs, seed);
  ShellStat st;
  st.radius = r;
  st.p = p;
  st.n_dirs = n_dirs;
  st.seed = seed;
  st.mean_pow = mean_pow_of(moduli, p);
  st.sup_pow = std::pow(*std::max_element(moduli.begin(), moduli.end()), p);
  return st;
}

std::vector<double> geometric_grid(double r_min, double r_max,
                                   std::size_t per_octave) {
  if (!(r_min > 0.0) || !(r_max > r_min))
    fail_usage("geometric grid: need 0 < r_min < r_max");
  if (per_octave < 1) fail_usage("geometric grid: per_octave must be >= 1");
  std::vector<double> radii;
  const double step = std::exp2(1.0 / static_cast<double>(per_octave));
  double r = r_min;
  for (std::size_t k = 0; r <= r_max * (1.0 + 1e-9); ++k) {
    radii.push_back(r);
    r = r_min * std::pow(step, static_cast<double>(k + 1));
  }
  if (radii.empty()) fail_usage("geometric grid: empty");
  return radii;
}

std::vector<ShellStat> dyadic_shell_sweep(const DiscreteMeasure& m,
                                          double r_min, double r_max,
                                          std::size_t shells_per_octave,
                                          double p, std::size_t n_dirs,
                                          std::uint64_t seed) {
  const auto radii = geometric_grid(r_min, r_max, shells_per_octave);
  std::vector<ShellStat> out;
  out.reserve(radii.size());
  for (std::size_t k = 0; k < radii.size(); ++k)
    out.push_back(shell_stat(m, radii[k], p, n_dirs, seed ^ k));
  return out;
}

double ShellTable::mean_pow(std::size_t shell, double p) const {
  return mean_pow_of(moduli[shell], p);
}

double ShellTable::sup(std::size_t shell) const {
  return *std::max_element(moduli[shell].begin(), moduli[shell].end());
}

ShellTable shell_table(const DiscreteMeasure& m,
                       const std::vector<double>& radii, std::size_t n_dirs,
                       std::uint64_t seed) {
  if (radii.empty()) fail_usage("shell_table: empty radius grid");
  if (n_dirs < 1) fail_usage("shell_table: need at least one direction");
  ShellTable table;
  table.radii = radii;
  table.n_dirs = n_dirs;
  table.moduli.reserve(radii.size());
  for (std::size_t k = 0; k < radii.size(); ++k)
    table.moduli.push_back(sample_moduli(m, radii[k], n_dirs, seed ^ k));
  return table;
}

namespace {

struct BandSamples {
  std::vector<double> radii;   // deterministic midpoints of a uniform split
  std::vector<double> moduli;  // [radius * dirs + direction], clamped <= 1
  std::size_t dirs = 1;
};

// One radial band: deterministic midpoint radii, directions drawn from
// Rng(seed) in (radius, direction) order. d = 1 ignores radii_per_octave and
// densifies to spacing <= 0.5 (clamped to [64, 16384] radii) with the single
// +1 direction -- the modulus is even in xi, and resonances can be O(1) wide
// at any radius, so coarse d = 1 grids would miss them.
BandSamples sample_band(const DiscreteMeasure& m, double r_lo, double r_hi,
                        std::size_t radii_per_octave, std::size_t n_dirs,
                        std::uint64_t seed) {
  const std::size_t d = m.dim();
  BandSamples s;
  std::size_t n_radii;
  if (d == 1) {
    n_radii = static_cast<std::size_t>(std::ceil((r_hi - r_lo) / 0.5));
    n_radii = std::clamp<std::size_t>(n_radii, 64, 16384);
    s.dirs = 1;
  } else {
    n_radii = radii_per_octave;
    s.dirs = n_dirs;
  }

  Rng rng(seed);
  s.radii.resize(n_radii);
  std::vector<double> freqs(n_radii * s.dirs * d);
  std::vector<double> w(d);
  for (std::size_t j = 0; j < n_radii; ++j) {
    s.radii[j] = r_lo + (static_cast<double>(j) + 0.5) * (r_hi - r_lo) /
                            static_cast<double>(n_radii);
    for (std::size_t i = 0; i < s.dirs; ++i) {
      if (d == 1)
        w[0] = 1.0;
      else
        rng.sphere_direction(w.data(), d);
      for (std::size_t t = 0; t < d; ++t)
        freqs[(j * s.dirs + i) * d + t] = s.radii[j] * w[t];
    }
  }
  std::vector<std::complex<double>> vals(n_radii * s.dirs);
  ft_batch(m, freqs.data(), vals.size(), vals.data());
  s.moduli.resize(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i)
    s.moduli[i] = std::min(std::abs(vals[i]), 1.0);
  return s;
}

std::size_t count_octaves(double r_min, double r_max) {
  if (!(r_min > 0.0) || !(r_max > r_min))
    fail_usage("band sweep: need 0 < r_min < r_max");
  return static_cast<std::size_t>(std::ceil(std::log2(r_max / r_min) - 1e-9));
}

}  // namespace

std::vector<BandSup> band_sup_sweep(const DiscreteMeasure& m, double r_min,
                                    double r_max, std::size_t n_dirs,
                                    std::uint64_t seed) {
  const std::size_t n_bands = count_octaves(r_min, r_max);
  std::vector<BandSup> out;
  out.reserve(n_bands);
  for (std::size_t b = 0; b < n_bands; ++b) {
    BandSup band;
    band.r_lo = r_min * std::exp2(static_cast<double>(b));
    band.r_hi = std::min(r_min * std::exp2(static_cast<double>(b + 1)), r_max);
    const auto s = sample_band(m, band.r_lo, band.r_hi, 16, n_dirs, seed ^ b);
    band.n_samples = s.moduli.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < s.moduli.size(); ++i) {
      const double pow2 = s.moduli[i] * s.moduli[i];
      acc += pow2;
      if (pow2 > band.sup_pow2) {
        band.sup_pow2 = pow2;
        band.r_at_sup = s.radii[i / s.dirs];
      }
    }
    band.mean_pow2 = acc / static_cast<double>(band.n_samples);
    out.push_back(band);
  }
  return out;
}

double BandTable::r_mid(std::size_t band) const {
  return std::sqrt(r_lo[band] * r_hi[band]);
}

double BandTable::mean_pow(std::size_t band, double p) const {
  return mean_pow_of(moduli[band], p);
}

double BandTable::sup_pow2(std::size_t band) const {
  const double s = *std::max_element(moduli[band].begin(), moduli[band].end());
  return s * s;
}

BandTable band_table(const DiscreteMeasure& m, double r_min, double r_max,
                     std::size_t radii_per_octave, std::size_t n_dirs,
                     std::uint64_t seed) {
  if (radii_per_octave < 1) fail_usage("band_table: radii_per_octave >= 1");
  if (n_dirs < 1) fail_usage("band_table: need at least one direction");
  const std::size_t n_bands = count_octaves(r_min, r_max);
  BandTable table;
  for (std::size_t b = 0; b < n_bands; ++b) {
    const double lo = r_min * std::exp2(static_cast<double>(b));
    const double hi = std::min(r_min * std::exp2(static_cast<double>(b + 1)),
                               r_max);
    table.r_lo.push_back(lo);
    table.r_hi.push_back(hi);
    table.moduli.push_back(
        std::move(sample_band(m, lo, hi, radii_per_octave, n_dirs, seed ^ b)
                      .moduli));
  }
  return table;
}

double unit_sphere_area(std::size_t d) {
  if (d < 1) fail_usage("unit_sphere_area: dimension must be >= 1");
  const double half = static_cast<double>(d) / 2.0;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

}  // namespace sdl
