#pragma once
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "sdl/measure.hpp"
#include "sdl/spectrum.hpp"

namespace sdl {

// D(E,F): every pairwise distance realised between two finite point sets,
// sorted ascending. Distance 0 stays in D(E,E) — it never affects dimension
// and dropping it would make the sample disagree with the set it names.
struct DistanceSample {
  std::vector<double> values;  // sorted ascending, >= 0
  bool squared = false;        // values are |x-y|^2 when set
  std::string source_e, source_f;  // caller-supplied measure ids (optional)
  std::vector<double> pin;         // fixed endpoint for D_x(E); empty = none
};

// Point sets enter as measure supports; weights are ignored. Values are
// deduplicated after sorting: a value is kept when it exceeds the last kept
// value by more than dedup_tol, so dedup_tol = 0 merges exact duplicates
// only. Errors on dimension mismatch and on |E|*|F| > max_pairs.
DistanceSample distance_set(const DiscreteMeasure& e, const DiscreteMeasure& f,
                            bool squared, double dedup_tol,
                            std::size_t max_pairs = 4000000);

// Pinned (squared-)distance measure: pushforward of m under y -> |x-y|^2
// (|x-y| when squared = false). One-dimensional; atoms landing on exactly
// equal values merge by weight summation (exact equality only — a tolerance
// would make the mass bookkeeping order-dependent, and the identity checks
// downstream need it exact); total mass is preserved exactly.
DiscreteMeasure pinned_measure(const std::vector<double>& x,
                               const DiscreteMeasure& m, bool squared = true);

// Transform of the pinned squared-distance measure, summed directly:
// sum_j w_j exp(-2 pi i tau |x - x_j|^2).
std::complex<double> pinned_ft_direct(const std::vector<double>& x,
                                      const DiscreteMeasure& m, double tau);

// The same number reached through the lifted measure nu = F_# m with
// F(y) = (y, |y|^2): exp(-2 pi i tau |x|^2) * nu-hat(tau * (-2x, 1)).
// Kept as a genuinely separate code path (lift + generic transform) so the
// identity behind it stays testable: for atomic measures the two routes are
// algebraically equal and must agree to 1e-10.
std::complex<double> pinned_ft_lift(const std::vector<double>& x,
                                    const DiscreteMeasure& m, double tau);

// A(tau) in both of its forms:
//   avg    = sum_i w_i |pinned_ft_direct(x_i, mu2, tau)|^2   over mu1 atoms
//   kernel = sum_{j,k} w_j w_k exp(-2 pi i tau (|y_j|^2 - |y_k|^2))
//            * mu1-hat(-2 tau (y_j - y_k))                   over mu2 pairs
// The same number by Fubini, computed independently: the kernel batches its
// |mu2|^2 difference frequencies through one transform call and accumulates
// with compensated sums. Its imaginary part must vanish (pairing (j,k) with
// (k,j) conjugates the terms); it is checked <= 1e-10 and then discarded.
// Both values land in [0, 1 + 1e-10]. Errors on dimension mismatch and on
// |mu2|^2 > max_pairs.
struct ATau {
  double avg = 0.0;
  double kernel = 0.0;
};

ATau a_tau(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, double tau,
           std::size_t max_pairs = 4000000);

// One a_tau row per grid value, with the rounding excess above 1 (and any
// -1e-16 noise below 0) clamped away so rows satisfy 0 <= A <= 1 exactly.
struct ADecayTable {
  struct Row {
    double tau = 0.0;
    double a_avg = 0.0;
    double a_kernel = 0.0;
  };
  std::vector<Row> rows;
  std::string source_mu1, source_mu2;
};

ADecayTable a_tau_table(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2,
                        const std::vector<double>& tau_grid,
                        std::size_t max_pairs = 4000000);

// Power-law fit of A_avg(tau) over the window, reported next to the
// closed-form decay exponent beta_gamma(u, theta1, gamma, d) for the
// caller's hypothesis parameters (d = ambient dimension). The fit and the
// prediction deliberately arrive side by side and uncombined: which (u,
// theta1, gamma) describe a sampled measure is the caller's claim, not
// something the data decides here.
//
// Rows carry the average form only. Decay fitting needs sample sizes that
// push the signal above the 1/|mu2| sampling floor of A — far beyond what
// the quadratic kernel budget admits — so the identity-bearing two-form
// table stays a_tau_table's job at kernel-feasible sizes.
struct ADecayReport {
  std::vector<std::pair<double, double>> curve;  // (tau, A_avg), full grid
  DecayFit fit;
  double predicted_beta = 0.0;
};

// tau_grid must be geometric (constant ratio within 1e-9 relative) and span
// at least two octaves.
ADecayReport a_decay_fit(const DiscreteMeasure& mu1,
                         const DiscreteMeasure& mu2,
                         const std::vector<double>& tau_grid, double w_min,
                         double w_max, double u, double theta1, double gamma);

}  // namespace sdl
