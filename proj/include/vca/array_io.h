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

#ifndef VCA_ARRAY_IO_H_
#define VCA_ARRAY_IO_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "vca/coverage.h"

namespace vca {

// Array file: header "n k v seed algorithm", then n lines of k symbols.
// `algorithm` is a single token naming the constructor and random source,
// e.g. "random+mt19937_64".
struct ArrayFile {
  VcaArray array;
  std::uint64_t seed = 0;
  std::string algorithm;
};

ArrayFile ReadArray(std::istream& in);
void WriteArray(std::ostream& out, const ArrayFile& file);

ArrayFile LoadArray(const std::string& path);
void SaveArray(const std::string& path, const ArrayFile& file);

}  // namespace vca

#endif  // VCA_ARRAY_IO_H_
