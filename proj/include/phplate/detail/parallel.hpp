// Copyright (c) 2026 the phplate authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef PHPLATE_DETAIL_PARALLEL_HPP
#define PHPLATE_DETAIL_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace phplate::detail {

/// Runs worker(i) for i in [0, n) across hardware threads. Each index is an
/// independent unit of work writing only to its own slot, so results do not
/// depend on the schedule; callers reduce over slots in index order.
template <class Worker>
void parallel_for(std::size_t n, Worker&& worker) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const std::size_t threads = std::min<std::size_t>(hw, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) worker(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        worker(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace phplate::detail

#endif  // PHPLATE_DETAIL_PARALLEL_HPP
