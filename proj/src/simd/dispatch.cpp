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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "reef/error.hpp"
#include "reef/simd/kernels.hpp"

namespace reef::simd {

extern const Kernels kScalarKernels;
#ifdef REEF_HAVE_AVX2
extern const Kernels kAvx2Kernels;
#endif

bool avx2_supported() {
#ifdef REEF_HAVE_AVX2
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const char* backend_name(Backend backend) {
  return backend == Backend::kAvx2 ? "avx2" : "scalar";
}

const Kernels* kernels_for(Backend backend) {
  if (backend == Backend::kScalar) return &kScalarKernels;
#ifdef REEF_HAVE_AVX2
  if (avx2_supported()) return &kAvx2Kernels;
#endif
  return nullptr;
}

namespace {

Backend detect_backend() {
  if (const char* env = std::getenv("REEF_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::kScalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (!avx2_supported()) throw Error("REEF_SIMD=avx2 but CPU lacks AVX2");
      return Backend::kAvx2;
    }
  }
  return avx2_supported() ? Backend::kAvx2 : Backend::kScalar;
}

std::atomic<int> g_backend{-1};

}  // namespace

Backend active_backend() {
  int b = g_backend.load(std::memory_order_acquire);
  if (b < 0) {
    Backend detected = detect_backend();
    int expected = -1;
    g_backend.compare_exchange_strong(expected, int(detected));
    b = g_backend.load(std::memory_order_acquire);
  }
  return Backend(b);
}

void set_backend(Backend backend) {
  if (!kernels_for(backend))
    throw Error(std::string("SIMD backend unavailable: ") + backend_name(backend));
  g_backend.store(int(backend), std::memory_order_release);
}

const Kernels& kernels() { return *kernels_for(active_backend()); }

}  // namespace reef::simd
