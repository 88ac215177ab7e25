// Copyright 2026 The maxaffine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace maxaffine {

// Worker count for data-parallel loops. requested == 0 means "auto": the
// hardware concurrency, capped by the MAXAFFINE_THREADS environment variable
// when that is set to a positive integer.
inline int ResolveThreadCount(int requested) {
  int n = requested;
  if (n <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    n = hw == 0 ? 1 : static_cast<int>(hw);
  }
  if (const char* cap = std::getenv("MAXAFFINE_THREADS")) {
    int parsed = std::atoi(cap);
    if (parsed > 0 && parsed < n) n = parsed;
  }
  return n < 1 ? 1 : n;
}

// Runs body(i) for i in [0, count) on the given number of workers. Work is
// handed out through a shared atomic counter; callers that need deterministic
// output should write results into a presized slot per index. The first
// exception thrown by any worker is rethrown on the calling thread.
inline void ParallelForIndex(std::size_t count, int threads,
                             const std::function<void(std::size_t)>& body) {
  threads = ResolveThreadCount(threads);
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  if (static_cast<std::size_t>(threads) > count) threads = static_cast<int>(count);

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace maxaffine
