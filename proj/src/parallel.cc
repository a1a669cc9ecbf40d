// Copyright 2026 The VCA Bounds Authors
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

#include "vca/parallel.h"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace vca {

int WorkerCount() {
  int workers = omp_get_max_threads();
  if (const char* env = std::getenv("VCA_THREADS"); env != nullptr) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) {
      workers = std::min<long>(workers, cap);
    }
  }
  return std::max(workers, 1);
}

}  // namespace vca
