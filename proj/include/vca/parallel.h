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

#ifndef VCA_PARALLEL_H_
#define VCA_PARALLEL_H_

namespace vca {

// Number of OpenMP workers used by the parallel kernels: omp_get_max_threads()
// capped by the VCA_THREADS environment variable when it holds a positive
// integer.
int WorkerCount();

}  // namespace vca

#endif  // VCA_PARALLEL_H_
