#include "sdl/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sdl/error.hpp"
#include "sdl/rng.hpp"
#include "sdl/thresholds.hpp"
#include "sdl/transform.hpp"

namespace sdl {

namespace {

// Streaming Neumaier accumulator; same algorithm as compensated_sum but for
// terms produced one at a time.
struct CompAcc {
  double sum = 0.0, comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

double sq_dist(const double* a, const double* b, std::size_t d) {
  double acc = 0.0;
  for (std::size_t t = 0; t < d; ++t) {
    const double diff = a[t] - b[t];
    acc += diff * diff;
  }
  return acc;
}

double sq_norm(const double* a, std::size_t d) {
  double acc = 0.0;
  for (std::size_t t = 0; t < d; ++t) acc += a[t] * a[t];
  return acc;
}

}  // namespace

DistanceSample distance_set(const DiscreteMeasure& e, const DiscreteMeasure& f,
                            bool squared, double dedup_tol,
                            std::size_t max_pairs) {
  if (e.dim() != f.dim())
    fail_usage("distance_set: point sets have different ambient dimensions");
  if (!(dedup_tol >= 0.0))
    fail_usage("distance_set: dedup_tol must be >= 0");
  const std::size_t ne = e.size(), nf = f.size();
  if (nf != 0 && ne > max_pairs / nf)
    fail_usage("distance_set: pair budget exceeded");

  const std::size_t d = e.dim();
  std::vector<double> values;
  values.reserve(ne * nf);
  for (std::size_t i = 0; i < ne; ++i)
    for (std::size_t j = 0; j < nf; ++j) {
      const double q = sq_dist(e.position(i), f.position(j), d);
      values.push_back(squared ? q : std::sqrt(q));
    }
  std::sort(values.begin(), values.end());

  DistanceSample out;
  out.squared = squared;
  out.values.reserve(values.size());
  for (double v : values)
    if (out.values.empty() || v - out.values.back() > dedup_tol)
      out.values.push_back(v);
  return out;
}

DiscreteMeasure pinned_measure(const std::vector<double>& x,
                               const DiscreteMeasure& m, bool squared) {
  if (x.size() != m.dim())
    fail_usage("pinned_measure: pin dimension does not match measure");
  const std::size_t n = m.size(), d = m.dim();

  std::vector<std::pair<double, double>> atoms(n);  // (value, weight)
  for (std::size_t j = 0; j < n; ++j) {
    const double q = sq_dist(x.data(), m.position(j), d);
    atoms[j] = {squared ? q : std::sqrt(q), m.weight(j)};
  }
  // Sort by value so the merge (and the weight summation order inside each
  // merged atom) is independent of the input atom order.
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<double> positions, weights;
  std::size_t j = 0;
  while (j < n) {
    std::size_t k = j + 1;
    CompAcc w;
    w.add(atoms[j].second);
    while (k < n && atoms[k].first == atoms[j].first) w.add(atoms[k++].second);
    positions.push_back(atoms[j].first);
    weights.push_back(std::min(w.value(), 1.0));
    j = k;
  }
  return DiscreteMeasure(1, std::move(positions), std::move(weights));
}

std::complex<double> pinned_ft_direct(const std::vector<double>& x,
                                      const DiscreteMeasure& m, double tau) {
  if (x.size() != m.dim())
    fail_usage("pinned_ft_direct: pin dimension does not match measure");
  const std::size_t n = m.size(), d = m.dim();
  double re = 0.0, im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double phase =
        -2.0 * std::numbers::pi * tau * sq_dist(x.data(), m.position(j), d);
    re += m.weight(j) * std::cos(phase);
    im += m.weight(j) * std::sin(phase);
  }
  return {re, im};
}

std::complex<double> pinned_ft_lift(const std::vector<double>& x,
                                    const DiscreteMeasure& m, double tau) {
  if (x.size() != m.dim())
    fail_usage("pinned_ft_lift: pin dimension does not match measure");
  const std::size_t d = m.dim();
  const DiscreteMeasure nu = lift(m);
  std::vector<double> xi(d + 1);
  for (std::size_t t = 0; t < d; ++t) xi[t] = -2.0 * tau * x[t];
  xi[d] = tau;
  const double phase = -2.0 * std::numbers::pi * tau * sq_norm(x.data(), d);
  return std::complex<double>(std::cos(phase), std::sin(phase)) *
         ft_point(nu, xi);
}

ATau a_tau(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, double tau,
           std::size_t max_pairs) {
  if (mu1.dim() != mu2.dim())
    fail_usage("a_tau: measures have different ambient dimensions");
  const std::size_t n1 = mu1.size(), n2 = mu2.size(), d = mu2.dim();
  if (n2 > max_pairs / n2) fail_usage("a_tau: kernel pair budget exceeded");

  ATau out;

  // Average form: one pinned transform per mu1 atom.
  {
    CompAcc acc;
    std::vector<double> x(d);
    for (std::size_t i = 0; i < n1; ++i) {
      const double* p = mu1.position(i);
      std::copy(p, p + d, x.begin());
      acc.add(mu1.weight(i) * std::norm(pinned_ft_direct(x, mu2, tau)));
    }
    out.avg = acc.value();
  }

  // Kernel form: mu1-hat at every difference frequency -2 tau (y_j - y_k),
  // evaluated in one batch, then the phase-weighted pair sum. Compensated
  // accumulation keeps the rounding of 4e6-term sums near eps, which the
  // 1e-10 residual-imaginary check depends on.
  {
    std::vector<double> freqs(n2 * n2 * d);
    for (std::size_t j = 0; j < n2; ++j) {
      const double* yj = mu2.position(j);
      for (std::size_t k = 0; k < n2; ++k) {
        const double* yk = mu2.position(k);
        double* row = &freqs[(j * n2 + k) * d];
        for (std::size_t t = 0; t < d; ++t)
          row[t] = -2.0 * tau * (yj[t] - yk[t]);
      }
    }
    std::vector<std::complex<double>> hat(n2 * n2);
    ft_batch(mu1, freqs.data(), n2 * n2, hat.data());

    std::vector<double> qs(n2);
    for (std::size_t j = 0; j < n2; ++j) qs[j] = sq_norm(mu2.position(j), d);

    CompAcc re, im;
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t k = 0; k < n2; ++k) {
        const double phase = -2.0 * std::numbers::pi * tau * (qs[j] - qs[k]);
        const std::complex<double> term =
            mu2.weight(j) * mu2.weight(k) *
            std::complex<double>(std::cos(phase), std::sin(phase)) *
            hat[j * n2 + k];
        re.add(term.real());
        im.add(term.imag());
      }
    if (std::abs(im.value()) > 1e-10)
      fail_assertion("a_tau: kernel sum has a non-real residue above 1e-10");
    out.kernel = re.value();
  }
  return out;
}

ADecayTable a_tau_table(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2,
                        const std::vector<double>& tau_grid,
                        std::size_t max_pairs) {
  if (tau_grid.empty()) fail_usage("a_tau_table: empty tau grid");
  ADecayTable table;
  table.rows.reserve(tau_grid.size());
  for (double tau : tau_grid) {
    const ATau a = a_tau(mu1, mu2, tau, max_pairs);
    table.rows.push_back({tau, std::clamp(a.avg, 0.0, 1.0),
                          std::clamp(a.kernel, 0.0, 1.0)});
  }
  return table;
}

ADecayReport a_decay_fit(const DiscreteMeasure& mu1,
                         const DiscreteMeasure& mu2,
                         const std::vector<double>& tau_grid, double w_min,
                         double w_max, double u, double theta1, double gamma) {
  if (tau_grid.size() < 3) fail_usage("a_decay_fit: grid needs >= 3 points");
  for (std::size_t i = 0; i + 1 < tau_grid.size(); ++i)
    if (!(tau_grid[i] > 0.0) || !(tau_grid[i + 1] > tau_grid[i]))
      fail_usage("a_decay_fit: grid must be positive and strictly increasing");
  const double ratio = tau_grid[1] / tau_grid[0];
  for (std::size_t i = 1; i + 1 < tau_grid.size(); ++i)
    if (std::abs(tau_grid[i + 1] / tau_grid[i] - ratio) > 1e-9 * ratio)
      fail_usage("a_decay_fit: grid must be geometric");
  if (tau_grid.back() < 4.0 * tau_grid.front())
    fail_usage("a_decay_fit: grid must span at least two octaves");

  if (mu1.dim() != mu2.dim())
    fail_usage("a_decay_fit: measures have different ambient dimensions");

  ADecayReport report;
  report.curve.reserve(tau_grid.size());
  const std::size_t d = mu1.dim();
  std::vector<double> x(d);
  for (double tau : tau_grid) {
    CompAcc acc;
    for (std::size_t i = 0; i < mu1.size(); ++i) {
      const double* p = mu1.position(i);
      std::copy(p, p + d, x.begin());
      acc.add(mu1.weight(i) * std::norm(pinned_ft_direct(x, mu2, tau)));
    }
    report.curve.emplace_back(tau, std::clamp(acc.value(), 0.0, 1.0));
  }
  report.fit = fit_decay(report.curve, w_min, w_max);
  report.predicted_beta = beta_gamma(u, theta1, gamma, d);
  return report;
}

}  // namespace sdl
