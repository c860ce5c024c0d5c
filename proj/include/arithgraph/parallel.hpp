#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace arithgraph {

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Work is claimed in
/// index order; the first exception by index is rethrown after all workers
/// finish, so results written per index are deterministic.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& fn) {
  std::vector<std::exception_ptr> errors(n);
  auto run = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(jobs, 1u), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) run(i);
      });
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace arithgraph
