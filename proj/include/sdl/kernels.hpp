#pragma once
#include <complex>
#include <cstddef>

// Hot inner loops, isolated so the rest of the library stays scalar and
// readable. Each kernel has a scalar reference implementation and may have
// SIMD variants; the active variant is chosen once at startup from CPU
// feature detection and can be forced for equivalence tests.

namespace sdl::kernels {

enum class Impl { scalar, avx2 };

const char* impl_name(Impl impl);
bool impl_supported(Impl impl);
Impl active_impl();
// Forces a variant (tests, --kernel flag). Throws Error(usage) if the host
// CPU lacks it.
void force_impl(Impl impl);
void clear_forced_impl();

// out[k] = sum_j weights[j] * exp(-2*pi*i * <x_j, f_k>).
// coords is dim-major: coordinate t of atom j at coords[t*n + j].
// freqs is row-major: frequency k occupies freqs[k*dim .. (k+1)*dim).
// Parallel over frequency blocks; every out[k] is written by exactly one
// worker, so results are bit-identical for any thread count.
void nudft(const double* coords, const double* weights, std::size_t n,
           std::size_t dim, const double* freqs, std::size_t n_freq,
           std::complex<double>* out);

// sum over unordered pairs i < j of w_i * w_j * (|x_i - x_j|^2)^exponent.
// positions is atom-major: atom i occupies positions[i*dim .. (i+1)*dim).
// Exactly coincident pairs are skipped and reported through *coincident
// (the caller decides whether that means +infinity).
double pair_pow_sum(const double* positions, const double* weights,
                    std::size_t n, std::size_t dim, double exponent,
                    bool* coincident);

}  // namespace sdl::kernels
