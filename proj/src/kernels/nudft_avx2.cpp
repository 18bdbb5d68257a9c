#include <cmath>
#include <numbers>

#include "kernels_impl.hpp"

// AVX2+FMA variant: 4 atoms per lane set, fused dot products, vector sin/cos.
// Compiled with -mavx2 -mfma by the build; on other targets this TU degrades
// to the scalar reference so the dispatcher can always link against it.

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace sdl::kernels {
namespace {

// Cody-Waite split of pi/2 (classic Cephes pi/4 table, doubled). KD1 carries
// ~25 mantissa bits, so k*KD1 is exact for |k| < 2^28; the phase guard below
// keeps |x| <= 1e8, well inside that.
constexpr double KD1 = 1.57079625129699707031e0;
constexpr double KD2 = 7.54978941586159635335e-8;
constexpr double KD3 = 5.39030285815811905290e-15;
constexpr double TWO_OVER_PI = 0.63661977236758134308;
// Above this the int32 quadrant and the split lose exactness; lanes get
// patched with libm instead. Desk-scale sweeps stay orders below it.
constexpr double PHASE_CUTOFF = 1.0e8;

constexpr double SINCOF[6] = {
    1.58962301576546568060e-10, -2.50507477628578072866e-8,
    2.75573136213857245213e-6,  -1.98412698295895385996e-4,
    8.33333333332211858878e-3,  -1.66666666666666307295e-1,
};
constexpr double COSCOF[6] = {
    -1.13585365213876817300e-11, 2.08757008419747316778e-9,
    -2.75573141792967388112e-7,  2.48015872888517179954e-5,
    -1.38888888888730564116e-3,  4.16666666666665929218e-2,
};

inline __m256d poly6(const double c[6], __m256d z) {
  __m256d p = _mm256_set1_pd(c[0]);
  for (int i = 1; i < 6; ++i) p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(c[i]));
  return p;
}

// sin and cos of 4 doubles. |error| vs libm is a few ulp for |x| <= 1e8;
// lanes beyond the cutoff must be patched by the caller.
inline void sincos4(__m256d x, __m256d& s_out, __m256d& c_out) {
  const __m256d k =
      _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(TWO_OVER_PI)),
                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d z = _mm256_fnmadd_pd(k, _mm256_set1_pd(KD1), x);
  z = _mm256_fnmadd_pd(k, _mm256_set1_pd(KD2), z);
  z = _mm256_fnmadd_pd(k, _mm256_set1_pd(KD3), z);

  const __m256d zz = _mm256_mul_pd(z, z);
  // sin(z) = z + z*zz*P(zz);  cos(z) = 1 - zz/2 + zz^2*Q(zz)
  const __m256d sp =
      _mm256_fmadd_pd(_mm256_mul_pd(z, zz), poly6(SINCOF, zz), z);
  __m256d cp = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), poly6(COSCOF, zz),
                               _mm256_fnmadd_pd(zz, _mm256_set1_pd(0.5),
                                                _mm256_set1_pd(1.0)));

  // Quadrant q = k mod 4 decides swap and signs:
  //   sin: q0 ->  sp, q1 ->  cp, q2 -> -sp, q3 -> -cp
  //   cos: q0 ->  cp, q1 -> -sp, q2 -> -cp, q3 ->  sp
  const __m128i k32 = _mm256_cvtpd_epi32(k);
  const __m256i q = _mm256_cvtepi32_epi64(k32);
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256d swap_mask = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
  const __m256d sin_neg = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(q, two), two));
  const __m256d cos_neg = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
      _mm256_and_si256(_mm256_add_epi64(q, one), two), two));

  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d s = _mm256_blendv_pd(sp, cp, swap_mask);
  __m256d c = _mm256_blendv_pd(cp, sp, swap_mask);
  s = _mm256_xor_pd(s, _mm256_and_pd(sin_neg, sign));
  c = _mm256_xor_pd(c, _mm256_and_pd(cos_neg, sign));
  s_out = s;
  c_out = c;
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

constexpr std::size_t MAX_BROADCAST_DIM = 16;

}  // namespace

bool avx2_compiled_in() { return true; }

void nudft_avx2(const double* coords, const double* weights, std::size_t n,
                std::size_t dim, const double* freqs, std::size_t n_freq,
                std::complex<double>* out) {
  if (dim > MAX_BROADCAST_DIM) {
    nudft_scalar(coords, weights, n, dim, freqs, n_freq, out);
    return;
  }
  constexpr double minus_two_pi = -2.0 * std::numbers::pi;
  const __m256d mtp = _mm256_set1_pd(minus_two_pi);
  const __m256d cutoff = _mm256_set1_pd(PHASE_CUTOFF);
  const __m256d absmask =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffll));

  __m256d fb[MAX_BROADCAST_DIM];
  for (std::size_t k = 0; k < n_freq; ++k) {
    const double* f = freqs + k * dim;
    for (std::size_t t = 0; t < dim; ++t) fb[t] = _mm256_set1_pd(f[t]);

    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      __m256d dot = _mm256_setzero_pd();
      for (std::size_t t = 0; t < dim; ++t)
        dot = _mm256_fmadd_pd(_mm256_loadu_pd(coords + t * n + j), fb[t], dot);
      const __m256d phase = _mm256_mul_pd(dot, mtp);
      __m256d s, c;
      sincos4(phase, s, c);
      if (_mm256_movemask_pd(
              _mm256_cmp_pd(_mm256_and_pd(phase, absmask), cutoff, _CMP_GT_OQ))) {
        alignas(32) double ph[4], sv[4], cv[4];
        _mm256_store_pd(ph, phase);
        _mm256_store_pd(sv, s);
        _mm256_store_pd(cv, c);
        for (int lane = 0; lane < 4; ++lane)
          if (std::abs(ph[lane]) > PHASE_CUTOFF) {
            sv[lane] = std::sin(ph[lane]);
            cv[lane] = std::cos(ph[lane]);
          }
        s = _mm256_load_pd(sv);
        c = _mm256_load_pd(cv);
      }
      const __m256d w = _mm256_loadu_pd(weights + j);
      acc_re = _mm256_fmadd_pd(w, c, acc_re);
      acc_im = _mm256_fmadd_pd(w, s, acc_im);
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t t = 0; t < dim; ++t) dot += coords[t * n + j] * f[t];
      const double phase = minus_two_pi * dot;
      re += weights[j] * std::cos(phase);
      im += weights[j] * std::sin(phase);
    }
    out[k] = {re, im};
  }
}

}  // namespace sdl::kernels

#else  // no AVX2 at compile time: keep the symbol, defer to the reference

namespace sdl::kernels {

bool avx2_compiled_in() { return false; }

void nudft_avx2(const double* coords, const double* weights, std::size_t n,
                std::size_t dim, const double* freqs, std::size_t n_freq,
                std::complex<double>* out) {
  nudft_scalar(coords, weights, n, dim, freqs, n_freq, out);
}

}  // namespace sdl::kernels

#endif
