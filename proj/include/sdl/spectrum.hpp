#pragma once
#include <string>
#include <utility>
#include <vector>

#include "sdl/measure.hpp"
#include "sdl/transform.hpp"

namespace sdl {

// Least-squares power-law fit value(r) ~ C * r^{-exponent} in log-log
// coordinates. Dimensions are estimated through these exponents, never
// through truncated integral magnitudes: finiteness of an improper integral
// is an asymptotic statement and the exponent is the observable.
struct DecayFit {
  double exponent = 0.0;
  double intercept = 0.0;  // log C
  double r_min = 0.0, r_max = 0.0;
  std::size_t n_points = 0;
  double rms_residual = 0.0;  // in log space
};

// Fits the points with r inside [w_min, w_max]; needs >= 3 of them with
// v > 0 and at least two distinct radii.
DecayFit fit_decay(const std::vector<std::pair<double, double>>& points,
                   double w_min, double w_max);

// Reliable-window policy for sampled measures. An n-atom Monte Carlo
// approximation has |mu-hat|^2 noise floor ~ 1/n; below roughly 10/n the
// empirical transform flattens and fakes dimension 0, so fits stop at the
// last radius whose shell mean_pow(p=2) clears floor_factor / n. The
// threshold is capped at 0.9 so exact tiny measures (a Dirac has n = 1 and
// |mu-hat| = 1) keep a usable window instead of tripping a rule meant for
// samples. r_min rises to 2 / diam(support): below that the transform has
// not left its |mu-hat| ~ 1 plateau.
struct WindowPolicy {
  double floor_factor = 10.0;
  double ceiling_mult = 2.0;  // s_est cap = ceiling_mult * ambient_dim
};

// Fourier-dimension estimate (theta = 0): fits per-octave band suprema of
// |mu-hat|^2 against the band midpoint radius, kappa_0 = -slope. Band
// suprema rather than shell samples: sup decay is destroyed by resonant
// returns anywhere in a band (Cantor measures return to |mu-hat| ~ 0.37 near
// powers of 3), which a fixed shell grid would miss. Reported honestly:
// for such measures the estimate is ~ 0, not patched.
std::pair<double, DecayFit> estimate_fourier_dim(const DiscreteMeasure& m,
                                                 const SweepParams& sweep,
                                                 const WindowPolicy& policy);

// dim_F^theta estimate for theta in (0,1]: fit mean_pow(r; p = 2/theta) ~
// r^{-kappa_p} inside the reliable window and return s_est = theta *
// kappa_p, clamped to [0, ceiling]. (The radial integrand of the
// (s,theta)-energy is r^{s/theta - 1} mean_pow, so the integral converges
// exactly when s < theta * kappa_p.)
std::pair<double, DecayFit> estimate_spectrum_point(const DiscreteMeasure& m,
                                                    double theta,
                                                    const SweepParams& sweep,
                                                    const WindowPolicy& policy);

struct SpectrumProfile {
  struct Entry {
    double theta = 0.0;
    double s_est = 0.0;
    DecayFit fit;
  };
  std::vector<Entry> entries;  // thetas strictly increasing
  std::string measure_id;
  std::string params;
  std::size_t n_dirs = 0;
};

// One entry per theta. The grid must be strictly increasing inside [0,1] and
// include 0. A single shell table is sampled once and reused for every
// theta > 0 (the same |mu-hat| samples raised to each power 2/theta);
// theta = 0 delegates to estimate_fourier_dim.
SpectrumProfile estimate_spectrum_profile(const DiscreteMeasure& m,
                                          const std::vector<double>& theta_grid,
                                          const SweepParams& sweep,
                                          const WindowPolicy& policy,
                                          const std::string& measure_id = "");

// Estimator-level restatement of the profile's structure (non-decreasing
// and concave): s may not drop by more than tol between consecutive thetas,
// and for each consecutive triple s(mid) >= (s(lo) + s(hi)) / 2 - tol.
struct ProfileShapeReport {
  bool pass = false;
  bool monotone = false;
  bool concave = false;
  double worst_monotone_violation = 0.0;   // max positive drop
  double worst_concavity_violation = 0.0;  // max midpoint deficit
};

ProfileShapeReport check_profile_shape(const SpectrumProfile& p, double tol);

}  // namespace sdl
