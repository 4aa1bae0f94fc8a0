// Copyright 2026 The gadepth Authors
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

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace gadepth {

inline std::size_t default_workers() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Result of one task: a value or the exception it threw.
template <class R>
struct Slot {
  std::optional<R> value;
  std::exception_ptr error;

  R get() && {
    if (error) std::rethrow_exception(error);
    return std::move(*value);
  }
};

/// Runs fn(0), ..., fn(n-1) on up to `workers` threads. Slots come back in
/// index order whatever the completion order.
template <class F>
auto parallel_slots(std::size_t n, F fn, std::size_t workers = default_workers())
    -> std::vector<Slot<decltype(fn(std::size_t{}))>> {
  using R = decltype(fn(std::size_t{}));
  std::vector<Slot<R>> slots(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].value.emplace(fn(i));
      } catch (...) {
        slots[i].error = std::current_exception();
      }
    }
  };
  workers = std::min(workers, n);
  if (workers <= 1) {
    work();
    return slots;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  return slots;
}

/// Like parallel_slots, but rethrows the lowest-index failure.
template <class F>
auto parallel_map(std::size_t n, F fn, std::size_t workers = default_workers())
    -> std::vector<decltype(fn(std::size_t{}))> {
  auto slots = parallel_slots(n, std::move(fn), workers);
  std::vector<decltype(fn(std::size_t{}))> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(s).get());
  return out;
}

}  // namespace gadepth
