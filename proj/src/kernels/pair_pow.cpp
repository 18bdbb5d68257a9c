#include <cmath>
#include <vector>

#include "sdl/kernels.hpp"
#include "sdl/threading.hpp"

namespace sdl::kernels {

// Scalar only: pair spaces stay within ~1e7 at desk scale, where libm pow is
// cheap enough; the transform kernel is where SIMD pays.
double pair_pow_sum(const double* positions, const double* weights,
                    std::size_t n, std::size_t dim, double exponent,
                    bool* coincident) {
  constexpr std::size_t ROW_BLOCK = 256;
  const std::size_t n_blocks = (n + ROW_BLOCK - 1) / ROW_BLOCK;
  std::vector<double> partial(n_blocks, 0.0);
  std::vector<unsigned char> hit(n_blocks, 0);

  parallel_blocks(n, ROW_BLOCK,
                  [&](std::size_t b, std::size_t begin, std::size_t end) {
                    double acc = 0.0;
                    for (std::size_t i = begin; i < end; ++i) {
                      const double* xi = positions + i * dim;
                      const double wi = weights[i];
                      for (std::size_t j = i + 1; j < n; ++j) {
                        const double* xj = positions + j * dim;
                        double r2 = 0.0;
                        for (std::size_t t = 0; t < dim; ++t) {
                          const double diff = xi[t] - xj[t];
                          r2 += diff * diff;
                        }
                        if (r2 == 0.0) {
                          hit[b] = 1;
                          continue;
                        }
                        acc += wi * weights[j] * std::pow(r2, exponent);
                      }
                    }
                    partial[b] = acc;
                  });

  bool any = false;
  double total = 0.0;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    total += partial[b];
    any = any || hit[b];
  }
  if (coincident) *coincident = any;
  return total;
}

}  // namespace sdl::kernels
