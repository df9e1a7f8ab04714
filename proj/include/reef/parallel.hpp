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

#pragma once

#include <cstddef>
#include <functional>

namespace reef {

// Worker count: REEF_THREADS if set and > 0, otherwise all hardware threads.
int worker_count();

// Splits [0, count) into fixed chunks of chunk_size and runs fn(chunk_index,
// begin, end) on a pool of workers. Chunk boundaries depend only on count and
// chunk_size, so per-chunk results are identical for any worker count; callers
// that reduce must fold per-chunk partials in chunk order.
void parallel_chunks(size_t count, size_t chunk_size,
                     const std::function<void(size_t, size_t, size_t)>& fn);

// Element-wise map over [0, count). fn must touch only its own index.
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

}  // namespace reef
