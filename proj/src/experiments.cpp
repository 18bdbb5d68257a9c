#include "sdl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <numbers>
#include <utility>

#include "sdl/boxdim.hpp"
#include "sdl/distance.hpp"
#include "sdl/energy.hpp"
#include "sdl/error.hpp"
#include "sdl/io.hpp"
#include "sdl/measure.hpp"
#include "sdl/measure_spec.hpp"
#include "sdl/rng.hpp"
#include "sdl/spectrum.hpp"
#include "sdl/thresholds.hpp"
#include "sdl/transform.hpp"

namespace sdl {

namespace {

using Report = ExperimentReport;

void param(Report& r, const std::string& key, const std::string& value) {
  r.params.emplace_back(key, value);
}

void param_num(Report& r, const std::string& key, double v) {
  r.params.emplace_back(key, format_double(v));
}

void metric(Report& r, const std::string& key, double v) {
  r.metrics.emplace_back(key, v);
  if (!std::isfinite(v)) r.notes.push_back("metric '" + key + "' is not finite");
}

bool check(Report& r, const std::string& label, double lhs,
           const std::string& op, double rhs) {
  bool ok = false;
  if (op == "<=")
    ok = lhs <= rhs;
  else if (op == ">=")
    ok = lhs >= rhs;
  else if (op == "==")
    ok = lhs == rhs;
  else
    fail_assertion("experiment assertion has unknown op '" + op + "'");
  r.assertions.push_back({label, lhs, rhs, op, ok});
  return ok;
}

// FAIL wins over INCONCLUSIVE: a vacuous bound does not excuse a violated
// exact check. conclusive = false only downgrades an otherwise-clean PASS.
void finalize(Report& r, bool conclusive) {
  const auto bad = std::find_if(r.assertions.begin(), r.assertions.end(),
                                [](const Report::Assertion& a) { return !a.pass; });
  if (bad != r.assertions.end()) {
    r.verdict = Report::Verdict::fail;
    r.notes.push_back("first violated assertion: " + bad->label + ": " +
                      format_double(bad->lhs) + " " + bad->op + " " +
                      format_double(bad->rhs));
  } else {
    r.verdict = conclusive ? Report::Verdict::pass : Report::Verdict::inconclusive;
  }
}

void emit(Report& r, const std::string& out_dir, const std::string& file,
          const std::string& content) {
  if (out_dir.empty()) return;
  std::filesystem::create_directories(out_dir);
  const std::string path = out_dir + "/" + file;
  write_text_file(path, content);
  r.artifacts.push_back(path);
}

std::vector<double> zeros(std::size_t k) { return std::vector<double>(k, 0.0); }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Collapses sorted values by chained tolerance, same rule as distance_set's
// dedup; used to shrink artifact tables and to feed box counting with one
// representative per resolvable value.
std::vector<double> dedup_sorted(const std::vector<double>& sorted, double tol) {
  std::vector<double> out;
  out.reserve(sorted.size());
  for (double v : sorted)
    if (out.empty() || v - out.back() > tol) out.push_back(v);
  return out;
}

double min_positive_gap(const std::vector<double>& sorted) {
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const double diff = sorted[i + 1] - sorted[i];
    if (diff > 0.0 && diff < g) g = diff;
  }
  return g;
}

// Halving grid from eps_top down to the resolution floor, never below
// 2 * (min positive nearest-neighbor gap): under that the count saturates at
// |points| and the slope fakes dimension 0. Empty when fewer than the 4
// values a fit needs survive.
std::vector<double> box_grid(double eps_top, double resolution_floor,
                             double min_gap, std::size_t max_values) {
  const double floor_eps =
      std::max(resolution_floor, std::isfinite(min_gap) ? 2.0 * min_gap : 0.0);
  std::vector<double> g;
  for (double e = eps_top; e >= floor_eps && g.size() < max_values; e *= 0.5)
    g.push_back(e);
  if (g.size() < 4) g.clear();
  return g;
}

double min_pairwise_gap(const std::vector<double>& pts, std::size_t dim) {
  const std::size_t n = pts.size() / dim;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < dim; ++t) {
        const double diff = pts[i * dim + t] - pts[j * dim + t];
        acc += diff * diff;
      }
      if (acc > 0.0) best = std::min(best, acc);
    }
  return std::sqrt(best);
}

// Shared estimator configuration. Direction count 64 keeps the p = 4 shell
// moments usable in d up to 6; radii and window policy are the library
// defaults the calibration tests were run with.
SweepParams make_sweep(std::uint64_t seed) {
  SweepParams sweep;
  sweep.r_min = 1.0;
  sweep.r_max = 64.0;
  sweep.shells_per_octave = 4;
  sweep.n_dirs = 64;
  sweep.seed = seed;
  return sweep;
}

std::vector<double> default_theta_grid() {
  std::vector<double> g;
  for (int k = 0; k <= 8; ++k) g.push_back(k / 8.0);
  return g;
}

DiscreteMeasure realize_spec(const std::string& text, std::uint64_t seed) {
  return realize(parse_measure_spec(text), seed);
}

// ---------------------------------------------------------------------------
// identity-suite internals

struct IdentityDevs {
  double lift = 0.0;
  double autocorr = 0.0;
  double a_form = 0.0;
};

std::size_t draw_size(Rng& rng, std::size_t cap) {
  const double x = rng.uniform(std::log(2.0), std::log(static_cast<double>(cap)));
  const auto n = static_cast<std::size_t>(std::lround(std::exp(x)));
  return std::clamp<std::size_t>(n, 1, cap);
}

DiscreteMeasure random_cloud(Rng& rng, std::size_t d, std::size_t n) {
  std::vector<double> pos(n * d), w(n);
  for (auto& c : pos) c = rng.uniform(-1.0, 1.0);
  for (auto& x : w) x = rng.uniform01_open_low();
  const double total = compensated_sum(w);
  for (auto& x : w) x /= total;
  return DiscreteMeasure(d, std::move(pos), std::move(w));
}

DiscreteMeasure random_measure(Rng& rng, std::size_t d) {
  const std::uint64_t kind = rng.next_u64() % 5;
  const std::size_t n = draw_size(rng, 300);
  switch (kind) {
    case 0:
      return random_cloud(rng, d, n);
    case 1:
      return make_uniform_cube(d, n, rng.next_u64());
    case 2:
      return make_sphere_measure(d, n, rng.next_u64());
    case 3: {
      // Cantor factor, padded to ambient d by a uniform factor when needed.
      const double ratio = rng.uniform(0.15, 0.45);
      const int depth = 1 + static_cast<int>(rng.next_u64() % 5);  // <= 32 atoms
      DiscreteMeasure c = make_cantor_measure(ratio, depth);
      if (d == 1) return c;
      const std::size_t m = std::max<std::size_t>(1, 300 / c.size());
      return product_measure(c, make_uniform_cube(d - 1, m, rng.next_u64()), 300);
    }
    default: {
      const double ratio = rng.uniform(0.15, 0.45);
      const int depth = 1 + static_cast<int>(rng.next_u64() % 5);
      DiscreteMeasure c =
          make_random_translate_cantor(ratio, depth, rng.next_u64());
      if (d == 1) return c;
      const std::size_t m = std::max<std::size_t>(1, 300 / c.size());
      return product_measure(c, make_uniform_cube(d - 1, m, rng.next_u64()), 300);
    }
  }
}

IdentityDevs identity_trial(const DiscreteMeasure& mu1,
                            const DiscreteMeasure& mu2,
                            const std::vector<double>& pin, double tau,
                            const std::vector<double>& xi) {
  IdentityDevs devs;
  devs.lift = std::abs(pinned_ft_direct(pin, mu2, tau) -
                       pinned_ft_lift(pin, mu2, tau));
  const DiscreteMeasure eta = autocorrelation(mu2, 300 * 300 + 1);
  devs.autocorr = std::abs(ft_point(eta, xi) -
                           std::complex<double>(std::norm(ft_point(mu2, xi)), 0.0));
  const ATau a = a_tau(mu1, mu2, tau);
  devs.a_form = std::abs(a.avg - a.kernel);
  return devs;
}

// ---------------------------------------------------------------------------
// registry

constexpr const char* kExperimentNames[] = {
    "sharpness-spheres", "sharpness-cantor",   "brownian-salem",
    "identity-suite",    "a-decay",            "energy-equivalence",
    "spectrum-profile",
};

}  // namespace

const char* verdict_name(ExperimentReport::Verdict v) {
  switch (v) {
    case ExperimentReport::Verdict::pass:
      return "PASS";
    case ExperimentReport::Verdict::fail:
      return "FAIL";
    case ExperimentReport::Verdict::inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

ExperimentReport run_sharpness_spheres(std::size_t d, std::size_t n,
                                       std::uint64_t seed,
                                       const std::string& out_dir,
                                       const Tolerances& tol) {
  if (d < 4) fail_usage("sharpness-spheres: requires d >= 4");
  if (n < 2) fail_usage("sharpness-spheres: requires n >= 2");
  const std::size_t k1 = (d + 1) / 2, k2 = d / 2;

  Report r;
  r.name = "sharpness-spheres";
  r.seed = seed;
  param(r, "d", std::to_string(d));
  param(r, "n", std::to_string(n));
  param(r, "k1", std::to_string(k1));
  param(r, "k2", std::to_string(k2));

  const DiscreteMeasure e = product_measure(
      make_sphere_measure(k1, n, derive_seed(seed, 1)), dirac(zeros(k2)), n);
  const DiscreteMeasure f = product_measure(
      dirac(zeros(k1)), make_sphere_measure(k2, n, derive_seed(seed, 2)), n);

  // Spectrum estimation resolves decay only while the shell means clear the
  // 10/n sampling floor; a k1 = 3 sphere factor falls through it by r ~ 2 at
  // the pair-budget-sized n. The fits therefore run on denser samples of the
  // same measures — resolution of the estimator, not a change of object.
  const std::size_t n_spec = 15'000;
  param(r, "n_spectrum", std::to_string(n_spec));
  const DiscreteMeasure e_spec = product_measure(
      make_sphere_measure(k1, n_spec, derive_seed(seed, 5)), dirac(zeros(k2)),
      n_spec);
  const DiscreteMeasure f_spec = product_measure(
      dirac(zeros(k1)), make_sphere_measure(k2, n_spec, derive_seed(seed, 6)),
      n_spec);

  // The p = 4 directional mean of a k-sphere product factor concentrates
  // where the sphere block of the direction is ~ 1/r long. For k = 2 that
  // mass is log-spread across scales, so the full sweep is safe and the wide
  // window shrinks the log-transient bias of the power-law fit. For k >= 3
  // it collapses onto directions of probability ~ r^{-k}: past r ~ 8 a band
  // mean is dominated by whether one direction lands within 1/(4r) of the
  // orthogonal complement (|mu-hat|^4 ~ 1 against a band mean ~ r^{-k}), so
  // the window stays short and the heavy-tailed draw noise is beaten down by
  // a median over independent direction seeds. Calibrated against the
  // closed-form sphere transforms; the estimate is direction-noise limited
  // (atom count and per-band density barely move it).
  const auto sphere_estimate = [&](const DiscreteMeasure& m, std::size_t k,
                                   std::uint64_t salt, const std::string& tag) {
    SweepParams sweep = make_sweep(0);
    sweep.n_dirs = 512;
    sweep.shells_per_octave = 16;
    sweep.r_max = k >= 3 ? 8.0 : 64.0;
    const std::size_t reps = k >= 3 ? 15 : 5;
    const WindowPolicy policy;
    std::vector<double> ests;
    for (std::size_t i = 0; i < reps; ++i) {
      sweep.seed = derive_seed(seed, salt + i);
      ests.push_back(estimate_spectrum_point(m, 0.5, sweep, policy).first);
    }
    const double med = median(ests);
    const auto [lo, hi] = std::minmax_element(ests.begin(), ests.end());
    metric(r, tag + "_rep_min", *lo);
    metric(r, tag + "_rep_max", *hi);
    return med;
  };

  const DistanceSample dist = distance_set(e, f, false, 0.0);
  const double root2 = std::numbers::sqrt2;
  const double max_dev = std::max(std::abs(dist.values.front() - root2),
                                  std::abs(dist.values.back() - root2));
  metric(r, "distance_count", static_cast<double>(dist.values.size()));
  metric(r, "max_sqrt2_deviation", max_dev);
  check(r, "max |distance - sqrt(2)|", max_dev, "<=", tol.single_distance);

  bool conclusive = true;

  // The whole sample sits in a 1e-12-wide cluster, so any epsilon grid well
  // above that width sees one box per scale; the resolution floor is moot.
  {
    std::vector<double> grid;
    for (int k = 0; k <= 7; ++k) grid.push_back(0.25 * std::pow(2.0, -k));
    const auto [dim, curve] = box_dim_estimate(dist.values, 1, grid);
    metric(r, "boxdim_distance_set", dim);
    check(r, "box dim of D(E,F)", dim, "<=", tol.degenerate_box_dim);
    emit(r, out_dir, "sharpness_spheres_boxcurve.csv", csv_of_boxcurve(curve));
  }

  try {
    const double u_est = sphere_estimate(e_spec, k1, 30, "u");
    const double v_est = sphere_estimate(f_spec, k2, 60, "v");
    metric(r, "u_est", u_est);
    metric(r, "v_est", v_est);
    metric(r, "halfspec_sum", u_est + v_est);
    check(r, "|dim_F^1/2(E) + dim_F^1/2(F) - d/2|",
          std::abs(u_est + v_est - d / 2.0), "<=", tol.halfspec_sum);
    const double half_d = d / 2.0;
    metric(r, "beta_cor_half_at_estimates",
           beta_cor_half(std::clamp(u_est, 0.0, half_d),
                         std::clamp(v_est, 0.0, half_d), d));
  } catch (const Error& err) {
    conclusive = false;
    r.notes.push_back(std::string("spectrum estimation failed: ") + err.what());
  }

  {
    DistanceSample compact = dist;
    compact.values = dedup_sorted(dist.values, 1e-9);
    emit(r, out_dir, "sharpness_spheres_distances.csv", csv_of_distances(compact));
  }

  finalize(r, conclusive);
  return r;
}

ExperimentReport run_sharpness_cantor(std::size_t k1, std::size_t k2,
                                      double alpha, int depth,
                                      std::uint64_t seed, bool randomized,
                                      const std::string& out_dir,
                                      const Tolerances& tol) {
  if (k1 < 2 || k2 < 2) fail_usage("sharpness-cantor: requires k1, k2 >= 2");
  if (!(alpha > 0.0) || !(alpha < 0.5))
    fail_usage("sharpness-cantor: requires alpha in (0, 1/2)");
  if (depth < 0 || depth > 12)
    fail_usage("sharpness-cantor: depth must lie in [0, 12]");
  const std::size_t d = k1 + k2 + 1;
  const double ratio = std::exp2(-1.0 / alpha);

  Report r;
  r.name = "sharpness-cantor";
  r.seed = seed;
  param(r, "d", std::to_string(d));
  param(r, "k1", std::to_string(k1));
  param(r, "k2", std::to_string(k2));
  param_num(r, "alpha", alpha);
  param(r, "depth", std::to_string(depth));
  param_num(r, "ratio", ratio);
  param(r, "randomized", randomized ? "true" : "false");

  const DiscreteMeasure a =
      randomized ? make_random_translate_cantor(ratio, depth, derive_seed(seed, 1))
                 : make_cantor_measure(ratio, depth);
  const std::size_t na = a.size();
  const std::size_t n_sphere =
      std::clamp<std::size_t>(na == 0 ? 2 : 2000 / na, 2, 64);
  param(r, "n_sphere", std::to_string(n_sphere));

  const DiscreteMeasure a1 = translate(a, {1.0});
  const DiscreteMeasure a2 = translate(a, {5.0});
  const std::size_t side = n_sphere * na;
  const DiscreteMeasure e = product_measure(
      product_measure(make_sphere_measure(k1, n_sphere, derive_seed(seed, 2)),
                      a1, side),
      dirac(zeros(k2)), side);
  const DiscreteMeasure f = product_measure(
      product_measure(dirac(zeros(k1)), a2, side),
      make_sphere_measure(k2, n_sphere, derive_seed(seed, 3)), side);

  // Squared distances are exactly 2 + t^2; compare each against the nearest
  // realizable t from the 1-d factors.
  const DistanceSample sq = distance_set(e, f, true, 0.0, 8'000'000);
  const DistanceSample tset = distance_set(a1, a2, false, 0.0, 20'000'000);
  std::vector<double> targets;
  targets.reserve(tset.values.size());
  for (double t : tset.values) targets.push_back(2.0 + t * t);
  double recon = 0.0;
  for (double v : sq.values) {
    auto it = std::lower_bound(targets.begin(), targets.end(), v);
    double best = std::numeric_limits<double>::infinity();
    if (it != targets.end()) best = std::min(best, std::abs(*it - v));
    if (it != targets.begin()) best = std::min(best, std::abs(*(it - 1) - v));
    recon = std::max(recon, best);
  }
  metric(r, "reconstruction_max", recon);
  check(r, "max |dist^2 - (2 + t^2)| over nearest t", recon, "<=",
        tol.reconstruction);

  bool conclusive = true;
  const double box_bound = 2.0 * alpha + tol.box_dim_slack;

  if (na < 2) {
    r.notes.push_back(
        "depth 0: single realizable distance; dimension and bi-Lipschitz "
        "checks skipped");
  } else {
    // Box dimension of the (unsquared) distance-value set. Values closer
    // than 1e-12 are one point at every countable scale; the grid floor is
    // the construction's finest scale ratio^depth.
    std::vector<double> vals;
    vals.reserve(sq.values.size());
    for (double v : sq.values) vals.push_back(std::sqrt(v));
    std::sort(vals.begin(), vals.end());
    vals = dedup_sorted(vals, 1e-12);
    const double floor_scale = std::pow(ratio, depth);
    const auto grid = box_grid(0.5, floor_scale, min_positive_gap(vals), 20);
    if (grid.empty()) {
      conclusive = false;
      r.notes.push_back("distance set too coarse for a box-dimension fit");
    } else {
      const auto [dim, curve] = box_dim_estimate(vals, 1, grid);
      metric(r, "boxdim_distance_set", dim);
      metric(r, "boxdim_bound", box_bound);
      check(r, "box dim of D(E,F) vs 2*alpha + slack", dim, "<=", box_bound);
      emit(r, out_dir, "sharpness_cantor_boxcurve.csv", csv_of_boxcurve(curve));
    }

    // f(t) = sqrt(2 + t^2): every difference ratio is f'(xi) for some xi
    // between the two observed t's, hence inside [f'(3), f'(5)] exactly.
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    bool any = false;
    for (std::size_t i = 0; i + 1 < tset.values.size(); ++i) {
      const double t0 = tset.values[i], t1 = tset.values[i + 1];
      if (t1 - t0 < 1e-9) continue;
      const double ratio_f = (std::sqrt(2.0 + t1 * t1) - std::sqrt(2.0 + t0 * t0)) /
                             (t1 - t0);
      lo = std::min(lo, ratio_f);
      hi = std::max(hi, ratio_f);
      any = true;
    }
    if (any) {
      const double fp3 = 3.0 / std::sqrt(11.0), fp5 = 5.0 / std::sqrt(27.0);
      metric(r, "bilip_min_ratio", lo);
      metric(r, "bilip_max_ratio", hi);
      check(r, "min difference ratio of sqrt(2+t^2) vs f'(3)", lo, ">=",
            fp3 - 1e-9);
      check(r, "max difference ratio of sqrt(2+t^2) vs f'(5)", hi, "<=",
            fp5 + 1e-9);
    }

    // theta = 1 spectrum against the closed-form lower bound k1 - 1 + alpha.
    // Only the randomized construction carries the average decay that makes
    // the bound an estimator-level claim; the deterministic one reports it.
    // A 31-atom sphere factor's own 1/n transform floor multiplies into the
    // product and caps the fitted slope near 0.6, so the fits run on the
    // same construction with densely sampled sphere factors (the Cantor
    // factor is exact and shared).
    try {
      const std::size_t n_s_spec = 3000;
      const DiscreteMeasure e_spec = product_measure(
          product_measure(
              make_sphere_measure(k1, n_s_spec, derive_seed(seed, 6)), a1,
              n_s_spec * na),
          dirac(zeros(k2)), n_s_spec * na);
      const DiscreteMeasure f_spec = product_measure(
          product_measure(dirac(zeros(k1)), a2, n_s_spec * na),
          make_sphere_measure(k2, n_s_spec, derive_seed(seed, 7)),
          n_s_spec * na);
      const WindowPolicy policy;
      const auto [se, fe] = estimate_spectrum_point(
          e_spec, 1.0, make_sweep(derive_seed(seed, 4)), policy);
      const auto [sf, ff] = estimate_spectrum_point(
          f_spec, 1.0, make_sweep(derive_seed(seed, 5)), policy);
      metric(r, "dimF1_E_est", se);
      metric(r, "dimF1_F_est", sf);
      metric(r, "dimF1_E_bound", k1 - 1 + alpha);
      metric(r, "dimF1_F_bound", k2 - 1 + alpha);
      if (randomized) {
        check(r, "dim_F^1(E) >= k1 - 1 + alpha - tol", se, ">=",
              k1 - 1 + alpha - tol.dim_estimate);
        check(r, "dim_F^1(F) >= k2 - 1 + alpha - tol", sf, ">=",
              k2 - 1 + alpha - tol.dim_estimate);
      } else {
        r.notes.push_back(
            "theta = 1 spectrum lower bounds reported, not asserted: the "
            "deterministic base lacks the average Fourier decay behind them");
      }
    } catch (const Error& err) {
      conclusive = false;
      r.notes.push_back(std::string("spectrum estimation failed: ") + err.what());
    }
  }

  if (box_bound >= 1.0 && na >= 2) {
    conclusive = false;
    r.notes.push_back(
        "vacuous bound: 2*alpha + slack = " + format_double(box_bound) +
        " >= 1, the trivial maximum for a set of reals");
  }

  {
    DistanceSample compact = sq;
    compact.values = dedup_sorted(sq.values, 1e-12);
    emit(r, out_dir, "sharpness_cantor_distances_sq.csv",
         csv_of_distances(compact));
  }

  finalize(r, conclusive);
  return r;
}

ExperimentReport run_brownian_salem(double s, std::size_t d, std::size_t n,
                                    const std::vector<std::uint64_t>& seeds,
                                    const std::string& out_dir,
                                    const Tolerances& tol) {
  if (!(s > 0.0) || !(s < 1.0))
    fail_usage("brownian-salem: requires s in (0, 1)");
  if (d < 1) fail_usage("brownian-salem: requires d >= 1");
  if (n < 1) fail_usage("brownian-salem: requires n >= 1");
  if (seeds.empty()) fail_usage("brownian-salem: requires at least one seed");

  Report r;
  r.name = "brownian-salem";
  r.seed = seeds.front();
  param_num(r, "s", s);
  param(r, "d", std::to_string(d));
  param(r, "n", std::to_string(n));
  param(r, "n_seeds", std::to_string(seeds.size()));

  // Base of dimension s/2: two maps of ratio 2^(-2/s). A ratio too small to
  // represent (or depth 0) collapses the base to one atom — the degenerate
  // regime where image, distance set, and every dimension are single points.
  const double ratio = std::exp2(-2.0 / s);
  int depth = 0;
  for (std::size_t count = 1; count < n && depth < 24; count *= 2) ++depth;
  const bool degenerate = ratio < 1e-15 || depth == 0;
  const DiscreteMeasure base =
      degenerate ? dirac({0.0}) : make_cantor_measure(ratio, depth);
  param_num(r, "ratio", ratio);
  param(r, "depth", std::to_string(degenerate ? 0 : depth));
  if (degenerate)
    r.notes.push_back("degenerate base: single atom (ratio below resolution)");

  bool conclusive = true;
  std::vector<double> dim_f, box_img, box_dist;
  std::string table = "seed,dim_f,boxdim_image,boxdim_distance_set\n";
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const DiscreteMeasure img = brownian_image(base, d, seeds[i]);
    try {
      const WindowPolicy policy;
      // Image transforms carry a log|xi| factor over the pure power law
      // (sup-of-Gaussian-field extremes), which flattens short windows; a
      // wide sweep dilutes the log-derivative and recenters the fit.
      SweepParams sweep = make_sweep(derive_seed(seeds[i], 7));
      sweep.r_max = 1024.0;
      const double df = estimate_fourier_dim(img, sweep, policy).first;

      double bi = 0.0, bd = 0.0;
      const double diam = support_diameter(img);
      if (diam > 0.0) {
        const double min_gap = min_pairwise_gap(img.positions(), d);
        const auto grid = box_grid(diam / 4.0, diam * std::exp2(-14), min_gap, 12);
        if (!grid.empty()) bi = box_dim_estimate(img.positions(), d, grid).first;

        const DistanceSample dist = distance_set(img, img, false, 0.0);
        const auto vals = dedup_sorted(dist.values, 1e-13);
        const double range = vals.back() - vals.front();
        const auto dgrid = box_grid(range > 0.0 ? range / 4.0 : 0.0,
                                    range * std::exp2(-16),
                                    min_positive_gap(vals), 16);
        if (!dgrid.empty()) bd = box_dim_estimate(vals, 1, dgrid).first;
      }
      dim_f.push_back(df);
      box_img.push_back(bi);
      box_dist.push_back(bd);
      table += std::to_string(seeds[i]) + "," + format_double(df) + "," +
               format_double(bi) + "," + format_double(bd) + "\n";
    } catch (const Error& err) {
      conclusive = false;
      r.notes.push_back("seed " + std::to_string(seeds[i]) +
                        ": estimator failed: " + err.what());
    }
  }
  emit(r, out_dir, "brownian_salem_seeds.csv", table);

  if (dim_f.empty() || box_dist.empty()) {
    conclusive = false;
    r.notes.push_back("no per-seed estimates survived");
    finalize(r, conclusive);
    return r;
  }

  const double med_dimf = median(dim_f);
  const double med_img = box_img.empty() ? 0.0 : median(box_img);
  const double med_dist = median(box_dist);
  metric(r, "median_dimF", med_dimf);
  metric(r, "median_boxdim_image", med_img);
  metric(r, "median_boxdim_distance_set", med_dist);
  metric(r, "target_s", s);

  check(r, "|median dim_F - s|", std::abs(med_dimf - s), "<=", tol.dim_estimate);
  const double dist_bound = 2.0 * s + tol.salem_box_slack;
  metric(r, "distance_boxdim_bound", dist_bound);
  check(r, "median box dim of D(image) vs 2s + slack", med_dist, "<=",
        dist_bound);
  if (dist_bound >= 1.0 && !degenerate) {
    conclusive = false;
    r.notes.push_back("vacuous bound: 2s + slack = " + format_double(dist_bound) +
                      " >= 1, the trivial maximum for a set of reals");
  }

  finalize(r, conclusive);
  return r;
}

ExperimentReport run_identity_suite(std::uint64_t seed, std::size_t trials,
                                    const std::string& out_dir,
                                    const Tolerances& tol) {
  if (trials < 1) fail_usage("identity-suite: requires trials >= 1");

  Report r;
  r.name = "identity-suite";
  r.seed = seed;
  param(r, "trials", std::to_string(trials));

  IdentityDevs worst;
  bool conclusive = true;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, 1000 + trial));
    IdentityDevs devs;
    try {
      if (trial == 0) {
        // Single-atom measures: every transform has modulus one and both
        // A forms are exactly 1.
        const DiscreteMeasure one = dirac({0.25, -0.5});
        devs = identity_trial(one, one, {0.1, 0.7}, 1.75, {3.0, -2.0});
      } else if (trial == 1) {
        // tau = 0 (and xi = 0): every transform equals total mass 1.
        const std::size_t d = 1 + rng.next_u64() % 5;
        const DiscreteMeasure m1 = random_measure(rng, d);
        const DiscreteMeasure m2 = random_measure(rng, d);
        devs = identity_trial(m1, m2, zeros(d), 0.0, zeros(d));
      } else {
        const std::size_t d = 1 + rng.next_u64() % 5;
        const DiscreteMeasure m1 = random_measure(rng, d);
        const DiscreteMeasure m2 = random_measure(rng, d);
        std::vector<double> pin(d);
        for (auto& c : pin) c = rng.uniform(-1.5, 1.5);
        const double mag = std::exp(rng.uniform(std::log(0.25), std::log(16.0)));
        const double tau = (rng.next_u64() & 1) ? mag : -mag;
        std::vector<double> xi(d);
        rng.sphere_direction(xi.data(), d);
        const double rad = std::exp(rng.uniform(std::log(0.25), std::log(16.0)));
        for (auto& c : xi) c *= rad;
        devs = identity_trial(m1, m2, pin, tau, xi);
      }
    } catch (const Error& err) {
      conclusive = false;
      r.notes.push_back("trial " + std::to_string(trial) +
                        " aborted: " + err.what());
      continue;
    }
    worst.lift = std::max(worst.lift, devs.lift);
    worst.autocorr = std::max(worst.autocorr, devs.autocorr);
    worst.a_form = std::max(worst.a_form, devs.a_form);
  }

  metric(r, "max_dev_lift", worst.lift);
  metric(r, "max_dev_autocorr", worst.autocorr);
  metric(r, "max_dev_a_form", worst.a_form);
  check(r, "pinned lift identity", worst.lift, "<=", tol.identity);
  check(r, "autocorrelation identity", worst.autocorr, "<=", tol.identity);
  check(r, "A(tau) two-form identity", worst.a_form, "<=", tol.identity);

  (void)out_dir;
  finalize(r, conclusive);
  return r;
}

ExperimentReport run_a_decay(const std::string& spec1, const std::string& spec2,
                             const ADecayConfig& cfg, std::uint64_t seed,
                             const std::string& out_dir, const Tolerances& tol) {
  Report r;
  r.name = "a-decay";
  r.seed = seed;
  param(r, "spec1", spec1);
  param(r, "spec2", spec2);
  param_num(r, "u", cfg.u);
  param_num(r, "theta1", cfg.theta1);
  param_num(r, "gamma", cfg.gamma);

  const DiscreteMeasure mu1 = realize_spec(spec1, derive_seed(seed, 1));
  const DiscreteMeasure mu2 = realize_spec(spec2, derive_seed(seed, 2));
  if (cfg.tau_grid.empty()) fail_usage("a-decay: empty tau grid");
  const double w_min = cfg.w_min > 0.0 ? cfg.w_min : cfg.tau_grid.front();
  const double w_max = cfg.w_max > 0.0 ? cfg.w_max : cfg.tau_grid.back();
  param_num(r, "w_min", w_min);
  param_num(r, "w_max", w_max);
  if (!(cfg.u < mu1.dim() * cfg.theta1))
    r.notes.push_back(
        "u >= d*theta1: outside the averaging bound's stated range; the "
        "prediction is formula-only");

  bool conclusive = true;

  const ADecayReport rep =
      a_decay_fit(mu1, mu2, cfg.tau_grid, w_min, w_max, cfg.u, cfg.theta1,
                  cfg.gamma);
  metric(r, "fitted_exponent", rep.fit.exponent);
  metric(r, "predicted_beta", rep.predicted_beta);
  metric(r, "fit_rms_residual", rep.fit.rms_residual);
  metric(r, "sampling_floor", 1.0 / static_cast<double>(mu2.size()));
  emit(r, out_dir, "a_decay_curve.csv", csv_of_adecay_curve(rep));

  // Window rows drowned by the 1/|mu2| sampling floor of the averaged form
  // carry no decay information (exact single-atom measures are the
  // exception: their A is exactly 1, floor or no floor).
  if (mu2.size() > 1) {
    double win_max = 0.0;
    for (const auto& [tau, val] : rep.curve)
      if (tau >= w_min && tau <= w_max) win_max = std::max(win_max, val);
    if (win_max < 3.0 / static_cast<double>(mu2.size())) {
      conclusive = false;
      r.notes.push_back(
          "fit window sits below the sampling floor 1/|mu2|; the fitted "
          "exponent measures noise");
    }
  }

  // Two-form table at kernel-feasible sizes; beyond them the quadratic
  // kernel is priced out and the fit rests on the averaged form alone.
  const std::size_t n1 = mu1.size(), n2 = mu2.size();
  if (n2 * n2 <= 4'000'000 && n1 * n2 * n2 <= 200'000'000) {
    const ADecayTable table = a_tau_table(mu1, mu2, cfg.tau_grid);
    double dev = 0.0;
    for (const auto& row : table.rows)
      dev = std::max(dev, std::abs(row.a_avg - row.a_kernel));
    metric(r, "max_dev_a_form", dev);
    check(r, "A(tau) two-form identity on the grid", dev, "<=", tol.identity);
    emit(r, out_dir, "a_decay_table.csv", csv_of_adecay_table(table));
  } else {
    r.notes.push_back("kernel form skipped: pair budget exceeded at these sizes");
  }

  check(r, "fitted exponent >= prediction - tol", rep.fit.exponent, ">=",
        rep.predicted_beta - tol.dim_estimate);

  // A flat curve for a spread measure means the grid never witnessed decay —
  // resonant frequencies of a self-similar factor, not a refutation.
  if (support_diameter(mu2) > 0.0 && rep.fit.exponent < tol.flat_exponent) {
    conclusive = false;
    const double front = rep.curve.front().second;
    const double back = rep.curve.back().second;
    metric(r, "flatness_ratio", front > 0.0 ? back / front : 1.0);
    r.notes.push_back(
        "near-zero fitted exponent on a spread measure: the tau grid sits on "
        "Fourier resonances (self-similar measures return to |mu-hat| ~ const "
        "along ratio^-k), so the averaged-decay hypothesis was not witnessed");
  }

  finalize(r, conclusive);
  return r;
}

ExperimentReport run_energy_equivalence(const std::vector<std::string>& specs,
                                        const std::vector<double>& s_list,
                                        std::uint64_t seed,
                                        const std::string& out_dir,
                                        const Tolerances& tol) {
  if (specs.size() < 2)
    fail_usage("energy-equivalence: needs at least two measures to compare");
  if (s_list.empty()) fail_usage("energy-equivalence: needs at least one s");

  Report r;
  r.name = "energy-equivalence";
  r.seed = seed;
  for (std::size_t i = 0; i < specs.size(); ++i)
    param(r, "spec" + std::to_string(i + 1), specs[i]);

  std::vector<DiscreteMeasure> measures;
  measures.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i)
    measures.push_back(realize_spec(specs[i], derive_seed(seed, 1 + i)));
  for (const auto& m : measures)
    if (m.dim() != measures.front().dim())
      fail_usage("energy-equivalence: measures have different ambient dimensions");

  // Frozen sweep for the d = 2 calibration pair: low radii carry the bulk of
  // an s = 1 energy integral for unit-scale measures.
  SweepParams sweep = make_sweep(derive_seed(seed, 99));
  sweep.r_min = 1.0 / 64.0;
  sweep.r_max = 8.0;

  bool conclusive = true;
  std::string table = "spec,s,real_value,freq_value,ratio\n";
  for (double s : s_list) {
    param_num(r, "s", s);
    std::vector<double> ratios;
    for (std::size_t i = 0; i < measures.size(); ++i) {
      const EquivalenceRatio eq = energy_equivalence_check(measures[i], s, sweep);
      if (!eq.valid) {
        conclusive = false;
        r.notes.push_back("spec" + std::to_string(i + 1) + " at s = " +
                          format_double(s) + ": " + eq.status);
        continue;
      }
      ratios.push_back(eq.ratio);
      metric(r, "ratio_spec" + std::to_string(i + 1) + "_s" + format_double(s),
             eq.ratio);
      table += specs[i] + "," + format_double(s) + "," +
               format_double(eq.real_side.value) + "," +
               format_double(eq.freq_side.value) + "," +
               format_double(eq.ratio) + "\n";
    }
    if (ratios.size() >= 2) {
      const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
      const double spread = *hi / *lo - 1.0;
      metric(r, "ratio_spread_s" + format_double(s), spread);
      check(r, "ratio spread at s = " + format_double(s), spread, "<=",
            tol.energy_ratio);
    } else {
      conclusive = false;
      r.notes.push_back("fewer than two valid ratios at s = " +
                        format_double(s) + "; spread not testable");
    }
  }
  emit(r, out_dir, "energy_equivalence.csv", table);

  finalize(r, conclusive);
  return r;
}

ExperimentReport run_spectrum_profile(const std::string& spec,
                                      const std::vector<double>& theta_grid,
                                      std::uint64_t seed,
                                      const std::string& out_dir,
                                      const Tolerances& tol) {
  Report r;
  r.name = "spectrum-profile";
  r.seed = seed;
  param(r, "spec", spec);

  const DiscreteMeasure m = realize_spec(spec, derive_seed(seed, 1));
  const std::vector<double> grid =
      theta_grid.empty() ? default_theta_grid() : theta_grid;
  param(r, "n_thetas", std::to_string(grid.size()));

  bool conclusive = true;
  try {
    const WindowPolicy policy;
    const SpectrumProfile profile = estimate_spectrum_profile(
        m, grid, make_sweep(derive_seed(seed, 2)), policy, spec);
    for (const auto& e : profile.entries)
      metric(r, "s_est[" + format_double(e.theta) + "]", e.s_est);
    const ProfileShapeReport shape = check_profile_shape(profile, tol.profile_shape);
    metric(r, "worst_monotone_violation", shape.worst_monotone_violation);
    metric(r, "worst_concavity_violation", shape.worst_concavity_violation);
    check(r, "profile non-decreasing within tol", shape.worst_monotone_violation,
          "<=", tol.profile_shape);
    check(r, "profile midpoint-concave within tol",
          shape.worst_concavity_violation, "<=", tol.profile_shape);
    emit(r, out_dir, "spectrum_profile.csv", csv_of_profile(profile));
  } catch (const Error& err) {
    conclusive = false;
    r.notes.push_back(std::string("profile estimation failed: ") + err.what());
  }

  finalize(r, conclusive);
  return r;
}

std::vector<std::string> list_experiments() {
  return {std::begin(kExperimentNames), std::end(kExperimentNames)};
}

ExperimentReport run_named_experiment(const std::string& name,
                                      std::uint64_t seed,
                                      const std::string& out_dir) {
  if (name == "sharpness-spheres")
    return run_sharpness_spheres(4, 2000, seed, out_dir);
  if (name == "sharpness-cantor")
    return run_sharpness_cantor(2, 2, 0.3, 6, seed, false, out_dir);
  if (name == "brownian-salem") {
    std::vector<std::uint64_t> seeds;
    for (std::size_t i = 0; i < 10; ++i) seeds.push_back(derive_seed(seed, 101 + i));
    return run_brownian_salem(0.4, 2, 1024, seeds, out_dir);
  }
  if (name == "identity-suite") return run_identity_suite(seed, 200, out_dir);
  if (name == "a-decay") {
    // Calibrated default: S^2 as both measures. The grid's 17/16 offset
    // keeps rows off the quarter-integer zeros of the closed-form A; the
    // window stops where the 1/n sampling floor takes over.
    ADecayConfig cfg;
    for (int k = 0; k <= 23; ++k)
      cfg.tau_grid.push_back(1.0625 * std::pow(2.0, k / 4.0));
    cfg.w_min = 1.0;
    cfg.w_max = 4.5;
    cfg.u = 1.4;
    cfg.theta1 = 0.5;
    cfg.gamma = 1.4;
    return run_a_decay("sphere(k=3,n=8000)", "sphere(k=3,n=8000)", cfg, seed,
                       out_dir);
  }
  if (name == "energy-equivalence")
    return run_energy_equivalence({"uniform(d=2,n=2000)", "disk(n=2000)"}, {1.0},
                                  seed, out_dir);
  if (name == "spectrum-profile")
    return run_spectrum_profile("sphere(k=2,n=3000)", {}, seed, out_dir);

  std::string known;
  for (const char* n : kExperimentNames) known += std::string(" ") + n;
  fail_usage("unknown experiment '" + name + "'; registered:" + known);
}

}  // namespace sdl
