// Copyright 2026 The stochvc Authors.
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

#ifndef STOCHVC_PARALLEL_H_
#define STOCHVC_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace stochvc {

// Work is cut into fixed-size chunks that do not depend on the thread count.
// Reductions over chunk results in index order are therefore bit-identical
// for any number of workers.
inline constexpr std::size_t kDefaultChunk = 256;

// Calls fn(begin, end) for each chunk of [0, count) and returns the results
// in chunk order. threads <= 1 runs inline. The first exception thrown by any
// chunk is rethrown after all workers have joined.
template <typename Fn>
auto map_chunks(std::size_t count, std::size_t chunk, int threads, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t, std::size_t>> {
  using R = std::invoke_result_t<Fn&, std::size_t, std::size_t>;
  chunk = std::max<std::size_t>(chunk, 1);
  const std::size_t num_chunks = (count + chunk - 1) / chunk;
  std::vector<R> results(num_chunks);
  if (num_chunks == 0) return results;

  const std::size_t workers =
      std::min<std::size_t>(std::max(threads, 1), num_chunks);
  if (workers == 1) {
    for (std::size_t c = 0; c < num_chunks; ++c) {
      results[c] = fn(c * chunk, std::min(count, (c + 1) * chunk));
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= num_chunks) return;
      try {
        results[c] = fn(c * chunk, std::min(count, (c + 1) * chunk));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(num_chunks);
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

// Per-index map: out[i] = fn(i).
template <typename Fn>
auto map_indices(std::size_t count, int threads, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  static_assert(!std::is_same_v<R, bool>,
                "std::vector<bool> is not safe for concurrent writes");
  std::vector<R> out(count);
  map_chunks(count, 16, threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) out[i] = fn(i);
    return 0;
  });
  return out;
}

}  // namespace stochvc

#endif  // STOCHVC_PARALLEL_H_
