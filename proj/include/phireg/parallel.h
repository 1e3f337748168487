// Copyright 2026 The phireg Authors.
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

#ifndef PHIREG_PARALLEL_H_
#define PHIREG_PARALLEL_H_

#include <exception>

namespace phireg {

// kSerial is the reference path; kParallel must produce bit-identical results
// because every loop body below touches disjoint state.
enum class ExecPolicy { kSerial, kParallel };

// Runs f(0), ..., f(n - 1). Under kParallel the iterations are spread over
// OpenMP threads; the first exception thrown by any iteration is rethrown on
// the calling thread after the loop.
template <typename F>
void ForEach(int n, ExecPolicy policy, F&& f) {
  if (policy == ExecPolicy::kSerial || n < 2) {
    for (int k = 0; k < n; ++k) f(k);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < n; ++k) {
    try {
      f(k);
    } catch (...) {
#pragma omp critical(phireg_for_each_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace phireg

#endif  // PHIREG_PARALLEL_H_
