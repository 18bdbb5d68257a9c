#pragma once
#include <cstddef>
#include <functional>

namespace sdl {

// Worker count: SDL_THREADS env var if set, else hardware concurrency.
int thread_count();
void set_thread_count(int n);  // CLI override; n < 1 restores the default

// Invokes fn(block_index, begin, end) over [0, total) in fixed-size blocks.
// Block boundaries depend only on (total, block), never on the worker count,
// so per-block partials reduced in block order give identical bits whether
// the loop ran on 1 thread or 16.
void parallel_blocks(
    std::size_t total, std::size_t block,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace sdl
