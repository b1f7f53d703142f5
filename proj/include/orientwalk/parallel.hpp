// Copyright 2026 The orientwalk Authors.
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

// Trial-level parallelism.
//
// Trials write into per-trial slots and are reduced afterwards in trial order,
// so the serial loop is the reference and the OpenMP loop must reproduce it
// bit for bit whatever the thread count.

#pragma once

#include <cstdint>
#include <exception>
#include <vector>

#include <omp.h>

namespace orientwalk {

enum class Execution { kSerial, kParallel };

inline void SetThreadCount(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

inline Execution ExecutionForThreads(int threads) {
  return threads > 1 ? Execution::kParallel : Execution::kSerial;
}

/// Calls fn(trial) for trial in [0, count). Exceptions thrown by trials are
/// rethrown after the loop; the lowest failing trial wins.
template <class Fn>
void ForEachTrial(std::uint64_t count, Execution exec, Fn&& fn) {
  if (exec == Execution::kSerial) {
    for (std::uint64_t t = 0; t < count; ++t) fn(t);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t t = 0; t < n; ++t) {
    try {
      fn(static_cast<std::uint64_t>(t));
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace orientwalk
