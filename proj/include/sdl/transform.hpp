#pragma once
#include <complex>
#include <cstdint>
#include <vector>

#include "sdl/measure.hpp"

namespace sdl {

// mu-hat(xi) = sum_j w_j exp(-2 pi i <x_j, xi>). Exact complex sum; the
// modulus of a probability measure's transform never exceeds 1 + rounding.
std::complex<double> ft_point(const DiscreteMeasure& m,
                              const std::vector<double>& xi);

// Batched evaluation at n_freq frequency rows (row-major, dim entries each).
// This is the hot path: it transposes the atoms once and hands the loop to
// the runtime-dispatched kernel (scalar or AVX2), parallel over frequencies.
void ft_batch(const DiscreteMeasure& m, const double* freqs,
              std::size_t n_freq, std::complex<double>* out);

// Directional statistics of |mu-hat| on the sphere of radius r.
struct ShellStat {
  double radius = 0.0;
  double p = 0.0;          // exponent applied to the modulus
  double mean_pow = 0.0;   // average over directions of |mu-hat(r w)|^p
  double sup_pow = 0.0;    // max over the same directions
  std::size_t n_dirs = 0;
  std::uint64_t seed = 0;
};

// Directions are i.i.d. uniform on S^{d-1}, drawn deterministically from
// seed; the reduction runs in direction-index order (bit-reproducible).
ShellStat shell_stat(const DiscreteMeasure& m, double r, double p,
                     std::size_t n_dirs, std::uint64_t seed);

// Radii r_min * 2^(k / per_octave) up to and including r_max (when the grid
// lands on it within 1e-9 relative).
std::vector<double> geometric_grid(double r_min, double r_max,
                                   std::size_t per_octave);

// One ShellStat per grid radius; shell k draws its directions from
// seed XOR k, so shells are independent but individually reproducible.
std::vector<ShellStat> dyadic_shell_sweep(const DiscreteMeasure& m,
                                          double r_min, double r_max,
                                          std::size_t shells_per_octave,
                                          double p, std::size_t n_dirs,
                                          std::uint64_t seed);

// Retained |mu-hat(r w)| samples, one row per shell. One expensive sweep can
// then serve every exponent p (the whole spectrum profile) without touching
// the atoms again. Moduli are clamped to <= 1 so powers stay in [0,1].
struct ShellTable {
  std::vector<double> radii;
  std::vector<std::vector<double>> moduli;  // [shell][direction]
  std::size_t n_dirs = 0;

  double mean_pow(std::size_t shell, double p) const;
  double sup(std::size_t shell) const;
};

// Same seeding layout as dyadic_shell_sweep (seed XOR shell index), so the
// two agree sample-for-sample on identical grids.
ShellTable shell_table(const DiscreteMeasure& m,
                       const std::vector<double>& radii, std::size_t n_dirs,
                       std::uint64_t seed);

// Per-octave suprema of |mu-hat|^2, radially dense. The sup form cares about
// the largest return of |mu-hat| inside a band, and resonances can be O(1)
// wide at any radius (Cantor measures return to |mu-hat| ~ 0.37 near powers
// of 3), so bands are swept with spacing <= 0.5 in d = 1 (capped at 16384
// samples per octave) and 16 radii x n_dirs random directions in d >= 2.
struct BandSup {
  double r_lo = 0.0, r_hi = 0.0;
  double sup_pow2 = 0.0;   // max |mu-hat|^2 over the band samples
  double mean_pow2 = 0.0;  // average |mu-hat|^2 (feeds the window policy)
  double r_at_sup = 0.0;
  std::size_t n_samples = 0;
};

std::vector<BandSup> band_sup_sweep(const DiscreteMeasure& m, double r_min,
                                    double r_max, std::size_t n_dirs,
                                    std::uint64_t seed);

// Retained per-octave |mu-hat| samples: the radial-band analogue of
// ShellTable, and the input the spectrum estimators fit. Moments have to be
// pooled over a band: in d = 1 (and for radial measures in any d) the
// spherical mean at one radius is a pointwise value, so log-log slopes of
// per-shell means scale exactly linearly in the exponent and carry no moment
// structure -- high moments live on O(1)-wide radial resonances that only
// band averaging can weigh.
struct BandTable {
  std::vector<double> r_lo, r_hi;           // octave bounds
  std::vector<std::vector<double>> moduli;  // [band][sample], clamped <= 1

  double r_mid(std::size_t band) const;  // geometric midpoint
  double mean_pow(std::size_t band, double p) const;
  double sup_pow2(std::size_t band) const;
};

// Same bands, radii, directions, and seeding as band_sup_sweep when
// radii_per_octave matches the sup sweep's 16 (d = 1 densifies identically
// regardless); it only keeps the samples instead of reducing them.
BandTable band_table(const DiscreteMeasure& m, double r_min, double r_max,
                     std::size_t radii_per_octave, std::size_t n_dirs,
                     std::uint64_t seed);

// Surface area of S^{d-1}: 2 pi^(d/2) / Gamma(d/2). d = 1 gives 2.
double unit_sphere_area(std::size_t d);

// Common sweep configuration shared by the energy and spectrum estimators.
struct SweepParams {
  double r_min = 1.0;
  double r_max = 64.0;
  std::size_t shells_per_octave = 4;
  std::size_t n_dirs = 32;
  std::uint64_t seed = 42;
};

}  // namespace sdl
