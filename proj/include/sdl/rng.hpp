#pragma once
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

// Self-contained random streams. <random> distributions are implementation
// defined, which would break the "same seed => identical artifact bytes"
// contract across standard libraries, so the generator (xoshiro256++) and all
// variate transforms live here and nowhere else.

namespace sdl {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Decorrelates nearby (seed, salt) pairs before they reach a generator.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (salt + 1));
  splitmix64_next(s);
  return splitmix64_next(s);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64_next(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // (0, 1]; safe as a log argument.
  double uniform01_open_low() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller. Two uniforms per pair; no cached state, so the draw count per
  // call is fixed and streams stay reproducible under refactoring.
  void gaussian_pair(double& g0, double& g1) {
    const double u1 = uniform01_open_low();
    const double u2 = uniform01();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    g0 = rad * std::cos(ang);
    g1 = rad * std::sin(ang);
  }

  double gaussian() {
    double g0, g1;
    gaussian_pair(g0, g1);
    return g0;
  }

  void fill_gaussian(double* out, std::size_t count) {
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) gaussian_pair(out[i], out[i + 1]);
    if (i < count) out[i] = gaussian();
  }

  // Uniform direction on S^(dim-1) via normalized Gaussians; dim = 1 is a
  // fair sign (g/|g| would land a few ulp off +-1 after three roundings).
  void sphere_direction(double* out, std::size_t dim) {
    if (dim == 1) {
      out[0] = (next_u64() >> 63) ? 1.0 : -1.0;
      return;
    }
    while (true) {
      fill_gaussian(out, dim);
      double norm2 = 0.0;
      for (std::size_t t = 0; t < dim; ++t) norm2 += out[t] * out[t];
      if (norm2 > 1e-300) {
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t t = 0; t < dim; ++t) out[t] *= inv;
        return;
      }
    }
  }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

// Compensated (Neumaier) sum: weight totals must hit 1 within 1e-12 even for
// 2e6-atom products, which plain left-to-right accumulation cannot guarantee.
inline double compensated_sum(const double* x, std::size_t n) {
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = sum + x[i];
    if (std::abs(sum) >= std::abs(x[i]))
      comp += (sum - t) + x[i];
    else
      comp += (x[i] - t) + sum;
    sum = t;
  }
  return sum + comp;
}

inline double compensated_sum(const std::vector<double>& x) {
  return compensated_sum(x.data(), x.size());
}

}  // namespace sdl
