#include "sdl/threading.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace sdl {

namespace {

int resolve_default() {
  if (const char* env = std::getenv("SDL_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

int g_override = 0;

}  // namespace

int thread_count() { return g_override >= 1 ? g_override : resolve_default(); }

void set_thread_count(int n) { g_override = n; }

void parallel_blocks(
    std::size_t total, std::size_t block,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (total == 0) return;
  if (block == 0) block = 1;
  const std::size_t n_blocks = (total + block - 1) / block;
  const int workers = thread_count();
  if (workers <= 1 || n_blocks <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b)
      fn(b, b * block, std::min(total, (b + 1) * block));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    while (true) {
      const std::size_t b = next.fetch_add(1);
      if (b >= n_blocks) return;
      fn(b, b * block, std::min(total, (b + 1) * block));
    }
  };
  std::vector<std::thread> pool;
  const std::size_t spawn =
      std::min<std::size_t>(static_cast<std::size_t>(workers) - 1, n_blocks - 1);
  pool.reserve(spawn);
  for (std::size_t i = 0; i < spawn; ++i) pool.emplace_back(drain);
  drain();
  for (auto& th : pool) th.join();
}

}  // namespace sdl
