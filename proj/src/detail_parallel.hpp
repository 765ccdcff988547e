#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace graphspectra::detail {

/// Worker cap from GRAPHSPECTRA_THREADS; unset or invalid means 1 so runs
/// are reproducible by default.
inline int thread_cap() {
  const char* env = std::getenv("GRAPHSPECTRA_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  if (v < 1) return 1;
  const unsigned hw = std::thread::hardware_concurrency();
  return std::min<int>(v, hw ? static_cast<int>(hw) : 1);
}

/// Runs fn(chunk_index, begin, end) over a fixed partition of [0, n); the
/// partition depends only on the thread cap, so results that reduce one
/// value per chunk in order are deterministic for a fixed cap. The first
/// worker exception is rethrown on the calling thread.
template <class Fn>
void parallel_chunks(int n, int n_chunks, Fn&& fn) {
  n_chunks = std::max(1, std::min(n_chunks, n));
  if (n_chunks == 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(n_chunks);
  workers.reserve(n_chunks);
  for (int c = 0; c < n_chunks; ++c) {
    const int begin = static_cast<int>(static_cast<long long>(n) * c / n_chunks);
    const int end =
        static_cast<int>(static_cast<long long>(n) * (c + 1) / n_chunks);
    workers.emplace_back([&fn, &errors, c, begin, end] {
      try {
        fn(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (std::thread& w : workers) w.join();
  for (const std::exception_ptr& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

}  // namespace graphspectra::detail
