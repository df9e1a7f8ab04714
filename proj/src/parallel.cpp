// Copyright 2026 The Reef Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reef/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace reef {

int worker_count() {
  if (const char* env = std::getenv("REEF_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? int(hw) : 1;
}

void parallel_chunks(size_t count, size_t chunk_size,
                     const std::function<void(size_t, size_t, size_t)>& fn) {
  if (count == 0) return;
  if (chunk_size == 0) chunk_size = 1;
  size_t chunks = (count + chunk_size - 1) / chunk_size;
  size_t workers = std::min<size_t>(size_t(worker_count()), chunks);

  if (workers <= 1) {
    for (size_t c = 0; c < chunks; ++c) {
      size_t begin = c * chunk_size;
      fn(c, begin, std::min(begin + chunk_size, count));
    }
    return;
  }

  std::atomic<size_t> next{0};
  auto run = [&] {
    for (;;) {
      size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      size_t begin = c * chunk_size;
      fn(c, begin, std::min(begin + chunk_size, count));
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (size_t i = 1; i < workers; ++i) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
  size_t chunk = std::max<size_t>(1, count / (size_t(worker_count()) * 8));
  parallel_chunks(count, chunk, [&](size_t, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) fn(i);
  });
}

}  // namespace reef
