#include <cmath>
#include <numbers>

#include "kernels_impl.hpp"

namespace sdl::kernels {

// Reference path: plain double loops, libm trigonometry. Everything the AVX2
// variant produces is checked against this.
void nudft_scalar(const double* coords, const double* weights, std::size_t n,
                  std::size_t dim, const double* freqs, std::size_t n_freq,
                  std::complex<double>* out) {
  constexpr double minus_two_pi = -2.0 * std::numbers::pi;
  for (std::size_t k = 0; k < n_freq; ++k) {
    const double* f = freqs + k * dim;
    double acc_re = 0.0, acc_im = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t t = 0; t < dim; ++t) dot += coords[t * n + j] * f[t];
      const double phase = minus_two_pi * dot;
      acc_re += weights[j] * std::cos(phase);
      acc_im += weights[j] * std::sin(phase);
    }
    out[k] = {acc_re, acc_im};
  }
}

}  // namespace sdl::kernels
