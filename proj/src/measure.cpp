#include "sdl/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <utility>

#include "sdl/error.hpp"
#include "sdl/rng.hpp"

namespace sdl {

DiscreteMeasure::DiscreteMeasure(std::size_t ambient_dim,
                                 std::vector<double> positions,
                                 std::vector<double> weights)
    : dim_(ambient_dim),
      positions_(std::move(positions)),
      weights_(std::move(weights)) {
  if (dim_ < 1) fail_assertion("measure: ambient dimension must be >= 1");
  const std::size_t n = weights_.size();
  if (n < 1) fail_assertion("measure: at least one atom required");
  if (positions_.size() != n * dim_)
    fail_assertion("measure: position array does not match atom count * dim");
  for (double c : positions_)
    if (!std::isfinite(c)) fail_assertion("measure: non-finite coordinate");
  for (double w : weights_)
    if (!(w > 0.0) || w > 1.0)
      fail_assertion("measure: atom weight outside (0,1]");
  const double total = compensated_sum(weights_);
  if (std::abs(total - 1.0) > 1e-12)
    fail_assertion("measure: weights do not sum to 1 within 1e-12");

  double max_norm2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double norm2 = 0.0;
    for (std::size_t t = 0; t < dim_; ++t) {
      const double c = positions_[i * dim_ + t];
      norm2 += c * c;
    }
    max_norm2 = std::max(max_norm2, norm2);
  }
  support_radius_ = std::sqrt(max_norm2);
}

std::vector<double> DiscreteMeasure::coords_dim_major() const {
  const std::size_t n = size();
  std::vector<double> out(n * dim_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < dim_; ++t)
      out[t * n + i] = positions_[i * dim_ + t];
  return out;
}

DiscreteMeasure make_sphere_measure(std::size_t k, std::size_t n,
                                    std::uint64_t seed) {
  if (k < 1) fail_usage("sphere measure: k must be >= 1");
  if (n < 1) fail_usage("sphere measure: n must be >= 1");
  Rng rng(seed);
  std::vector<double> pos(n * k);
  for (std::size_t i = 0; i < n; ++i) rng.sphere_direction(&pos[i * k], k);
  return DiscreteMeasure(k, std::move(pos),
                         std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

namespace {

// Ascending left endpoints of the level-`depth` construction intervals.
void emit_cantor(double offset, double scale, int level, int depth,
                 double ratio, std::vector<double>& out) {
  if (level == depth) {
    out.push_back(offset);
    return;
  }
  emit_cantor(offset, scale * ratio, level + 1, depth, ratio, out);
  emit_cantor(offset + scale * (1.0 - ratio), scale * ratio, level + 1, depth,
              ratio, out);
}

void check_cantor_params(double ratio, int depth) {
  if (!(ratio > 0.0) || !(ratio < 0.5))
    fail_usage("cantor measure: ratio must lie in (0, 1/2)");
  if (depth < 0 || depth > 24)
    fail_usage("cantor measure: depth must lie in [0, 24]");
}

}  // namespace

DiscreteMeasure make_cantor_measure(double ratio, int depth) {
  check_cantor_params(ratio, depth);
  std::vector<double> pos;
  pos.reserve(std::size_t{1} << depth);
  emit_cantor(0.0, 1.0, 0, depth, ratio, pos);
  std::vector<double> w(pos.size(), std::ldexp(1.0, -depth));
  return DiscreteMeasure(1, std::move(pos), std::move(w));
}

namespace {

void emit_rcantor(double offset, double length, int level, int depth,
                  double ratio, Rng& rng, std::vector<double>& out) {
  if (level == depth) {
    out.push_back(offset);
    return;
  }
  // Place two children of length ratio*length inside the parent uniformly at
  // random without overlap: split the slack with two sorted uniforms.
  const double slack = length * (1.0 - 2.0 * ratio);
  double u0 = rng.uniform01() * slack;
  double u1 = rng.uniform01() * slack;
  if (u1 < u0) std::swap(u0, u1);
  const double child = length * ratio;
  emit_rcantor(offset + u0, child, level + 1, depth, ratio, rng, out);
  emit_rcantor(offset + u1 + child, child, level + 1, depth, ratio, rng, out);
}

}  // namespace

DiscreteMeasure make_random_translate_cantor(double ratio, int depth,
                                             std::uint64_t seed) {
  check_cantor_params(ratio, depth);
  Rng rng(seed);
  std::vector<double> pos;
  pos.reserve(std::size_t{1} << depth);
  emit_rcantor(0.0, 1.0, 0, depth, ratio, rng, pos);
  std::vector<double> w(pos.size(), std::ldexp(1.0, -depth));
  return DiscreteMeasure(1, std::move(pos), std::move(w));
}

DiscreteMeasure make_uniform_cube(std::size_t d, std::size_t n,
                                  std::uint64_t seed) {
  if (d < 1) fail_usage("uniform cube: d must be >= 1");
  if (n < 1) fail_usage("uniform cube: n must be >= 1");
  Rng rng(seed);
  std::vector<double> pos(n * d);
  for (auto& c : pos) c = rng.uniform01();
  return DiscreteMeasure(d, std::move(pos),
                         std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DiscreteMeasure make_uniform_disk(std::size_t n, std::uint64_t seed) {
  if (n < 1) fail_usage("uniform disk: n must be >= 1");
  Rng rng(seed);
  std::vector<double> pos;
  pos.reserve(2 * n);
  while (pos.size() < 2 * n) {
    const double x = rng.uniform(-1.0, 1.0);
    const double y = rng.uniform(-1.0, 1.0);
    if (x * x + y * y <= 1.0) {
      pos.push_back(x);
      pos.push_back(y);
    }
  }
  return DiscreteMeasure(2, std::move(pos),
                         std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DiscreteMeasure dirac(const std::vector<double>& position) {
  if (position.empty()) fail_usage("dirac: position must have >= 1 coordinate");
  return DiscreteMeasure(position.size(), position, {1.0});
}

DiscreteMeasure product_measure(const DiscreteMeasure& a,
                                const DiscreteMeasure& b,
                                std::size_t max_atoms) {
  const std::size_t na = a.size(), nb = b.size();
  if (nb != 0 && na > max_atoms / nb)
    fail_usage("product measure: atom budget exceeded");
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<double> pos(na * nb * (da + db));
  std::vector<double> w(na * nb);
  std::size_t at = 0;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j, ++at) {
      double* p = &pos[at * (da + db)];
      std::memcpy(p, a.position(i), da * sizeof(double));
      std::memcpy(p + da, b.position(j), db * sizeof(double));
      w[at] = a.weight(i) * b.weight(j);
    }
  return DiscreteMeasure(da + db, std::move(pos), std::move(w));
}

DiscreteMeasure translate(const DiscreteMeasure& m,
                          const std::vector<double>& v) {
  if (v.size() != m.dim())
    fail_usage("translate: vector dimension does not match measure");
  std::vector<double> pos = m.positions();
  const std::size_t d = m.dim();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t t = 0; t < d; ++t) pos[i * d + t] += v[t];
  return DiscreteMeasure(d, std::move(pos), m.weights());
}

DiscreteMeasure lift(const DiscreteMeasure& m) {
  const std::size_t d = m.dim(), n = m.size();
  std::vector<double> pos(n * (d + 1));
  for (std::size_t i = 0; i < n; ++i) {
    double norm2 = 0.0;
    for (std::size_t t = 0; t < d; ++t) {
      const double c = m.position(i)[t];
      pos[i * (d + 1) + t] = c;
      norm2 += c * c;
    }
    pos[i * (d + 1) + d] = norm2;
  }
  return DiscreteMeasure(d + 1, std::move(pos), m.weights());
}

DiscreteMeasure autocorrelation(const DiscreteMeasure& m,
                                std::size_t max_atoms) {
  const std::size_t n = m.size(), d = m.dim();
  if (n > max_atoms / n) fail_usage("autocorrelation: atom budget exceeded");

  const std::size_t total = n * n;
  std::vector<double> diff(total * d), dw(total);
  std::size_t at = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j, ++at) {
      for (std::size_t t = 0; t < d; ++t)
        diff[at * d + t] = m.position(i)[t] - m.position(j)[t];
      dw[at] = m.weight(i) * m.weight(j);
    }

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(&diff[a * d], &diff[a * d] + d,
                                        &diff[b * d], &diff[b * d] + d);
  });

  const auto same = [&](std::size_t a, std::size_t b) {
    return std::equal(&diff[a * d], &diff[a * d] + d, &diff[b * d]);
  };
  std::vector<double> pos, w;
  for (std::size_t i = 0; i < total;) {
    std::size_t j = i;
    double mass = 0.0;
    while (j < total && same(order[i], order[j])) mass += dw[order[j++]];
    pos.insert(pos.end(), &diff[order[i] * d], &diff[order[i] * d] + d);
    w.push_back(mass);
    i = j;
  }
  return DiscreteMeasure(d, std::move(pos), std::move(w));
}

double support_diameter(const DiscreteMeasure& m) {
  const std::size_t n = m.size(), d = m.dim();
  if (n <= 2048) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double r2 = 0.0;
        for (std::size_t t = 0; t < d; ++t) {
          const double diff = m.position(i)[t] - m.position(j)[t];
          r2 += diff * diff;
        }
        best = std::max(best, r2);
      }
    return std::sqrt(best);
  }
  double diag2 = 0.0;
  for (std::size_t t = 0; t < d; ++t) {
    double lo = m.position(0)[t], hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, m.position(i)[t]);
      hi = std::max(hi, m.position(i)[t]);
    }
    diag2 += (hi - lo) * (hi - lo);
  }
  return std::sqrt(diag2);
}

DiscreteMeasure brownian_image(const DiscreteMeasure& base, std::size_t d,
                               std::uint64_t seed) {
  if (base.dim() != 1)
    fail_usage("brownian image: base measure must be 1-dimensional");
  if (d < 1) fail_usage("brownian image: target dimension must be >= 1");
  const std::size_t n = base.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = base.position(i)[0];
    if (t < 0.0 || t > 1.0)
      fail_usage("brownian image: base atoms must lie in [0,1]");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return base.position(a)[0] < base.position(b)[0];
  });

  Rng rng(seed);
  std::vector<double> pos(n * d), w(n), point(d, 0.0), incr(d);
  double prev_t = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = order[k];
    const double t = base.position(i)[0];
    // Fixed draw count per atom keeps the stream layout independent of gaps
    // (a zero gap still consumes its d Gaussians).
    const double sd = std::sqrt(t - prev_t);
    rng.fill_gaussian(incr.data(), d);
    for (std::size_t c = 0; c < d; ++c) point[c] += sd * incr[c];
    std::copy(point.begin(), point.end(), &pos[k * d]);
    w[k] = base.weight(i);
    prev_t = t;
  }
  return DiscreteMeasure(d, std::move(pos), std::move(w));
}

}  // namespace sdl
