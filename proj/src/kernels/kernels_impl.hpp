#pragma once
#include <complex>
#include <cstddef>

// Internal seams between the dispatcher and the per-ISA translation units.
// Each entry point processes one contiguous frequency range serially; the
// dispatcher owns threading.

namespace sdl::kernels {

void nudft_scalar(const double* coords, const double* weights, std::size_t n,
                  std::size_t dim, const double* freqs, std::size_t n_freq,
                  std::complex<double>* out);

// Present on every build; falls back to the scalar loop when the TU was not
// compiled with AVX2 support.
void nudft_avx2(const double* coords, const double* weights, std::size_t n,
                std::size_t dim, const double* freqs, std::size_t n_freq,
                std::complex<double>* out);

bool avx2_compiled_in();

}  // namespace sdl::kernels
