// Copyright 2026 The betgames Authors
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

#ifndef BETGAMES_PARALLEL_HPP
#define BETGAMES_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace betgames {

// Worker count: BETGAMES_THREADS env var wins, then the OpenMP default.
inline int worker_count() {
#ifdef _OPENMP
  if (const char* env = std::getenv("BETGAMES_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Index-parallel loop. Results must be written to disjoint, preallocated
// slots so the output is identical to the serial reference. Exceptions are
// captured inside the parallel region and rethrown on the calling thread.
template <class F>
void parallel_for(std::size_t count, F&& body, bool parallel = true) {
#ifdef _OPENMP
  if (parallel && count > 1) {
    std::exception_ptr error;
    const int threads = worker_count();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
    for (long long k = 0; k < static_cast<long long>(count); ++k) {
      try {
        body(static_cast<std::size_t>(k));
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#endif
  for (std::size_t k = 0; k < count; ++k) body(k);
}

}  // namespace betgames

#endif  // BETGAMES_PARALLEL_HPP
