#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace giantmol {

// Runs fn(i) for i in [0, n) on up to `workers` threads, each owning one
// contiguous block. fn must only write to slot i of its output.
template <class Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
  const std::size_t k = std::clamp<std::size_t>(workers < 1 ? 1 : workers, 1, std::max<std::size_t>(n, 1));
  if (k == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(k);
  std::vector<std::thread> pool;
  pool.reserve(k);
  const std::size_t block = (n + k - 1) / k;
  for (std::size_t w = 0; w < k; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(n, lo + block);
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace giantmol
