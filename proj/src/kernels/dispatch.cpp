#include "sdl/kernels.hpp"

#include <atomic>

#include "kernels_impl.hpp"
#include "sdl/error.hpp"
#include "sdl/threading.hpp"

namespace sdl::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<int> g_forced{-1};

Impl detect() {
  if (avx2_compiled_in() && cpu_has_avx2()) return Impl::avx2;
  return Impl::scalar;
}

using NudftFn = void (*)(const double*, const double*, std::size_t,
                         std::size_t, const double*, std::size_t,
                         std::complex<double>*);

NudftFn nudft_fn(Impl impl) {
  return impl == Impl::avx2 ? &nudft_avx2 : &nudft_scalar;
}

}  // namespace

const char* impl_name(Impl impl) {
  switch (impl) {
    case Impl::scalar: return "scalar";
    case Impl::avx2: return "avx2";
  }
  return "?";
}

bool impl_supported(Impl impl) {
  return impl == Impl::scalar || (avx2_compiled_in() && cpu_has_avx2());
}

Impl active_impl() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Impl>(forced);
  static const Impl detected = detect();
  return detected;
}

void force_impl(Impl impl) {
  if (!impl_supported(impl))
    fail_usage(std::string("kernel variant not supported on this host: ") +
               impl_name(impl));
  g_forced.store(static_cast<int>(impl), std::memory_order_relaxed);
}

void clear_forced_impl() { g_forced.store(-1, std::memory_order_relaxed); }

void nudft(const double* coords, const double* weights, std::size_t n,
           std::size_t dim, const double* freqs, std::size_t n_freq,
           std::complex<double>* out) {
  if (n_freq == 0) return;
  const NudftFn fn = nudft_fn(active_impl());
  // Each frequency row is written by exactly one worker: reproducible for
  // any SDL_THREADS value. Block size balances dispatch overhead against
  // load balance for the short batches shell sweeps produce.
  constexpr std::size_t FREQ_BLOCK = 32;
  parallel_blocks(n_freq, FREQ_BLOCK,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    fn(coords, weights, n, dim, freqs + begin * dim,
                       end - begin, out + begin);
                  });
}

}  // namespace sdl::kernels
