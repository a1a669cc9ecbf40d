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

#include "vca/array_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "vca/hypergraph_io.h"

namespace vca {

ArrayFile ReadArray(std::istream& in) {
  ArrayFile file;
  std::string header;
  if (!std::getline(in, header)) throw FormatError("empty array file");
  std::istringstream fields(header);
  long long n = -1, k = -1, v = -1;
  if (!(fields >> n >> k >> v >> file.seed >> file.algorithm) || n < 0 ||
      k < 0 || v < 2) {
    throw FormatError("array header must be 'n k v seed algorithm'");
  }
  std::vector<std::vector<long long>> rows = io_internal::ReadIntegerLines(in);
  if (static_cast<long long>(rows.size()) != n) {
    throw FormatError(
        fmt::format("header declares {} rows, file has {}", n, rows.size()));
  }
  file.array = VcaArray(static_cast<int>(n), static_cast<int>(k),
                        static_cast<int>(v));
  for (int r = 0; r < n; ++r) {
    if (static_cast<long long>(rows[r].size()) != k) {
      throw FormatError(fmt::format("row {} has {} symbols, expected {}", r,
                                    rows[r].size(), k));
    }
    for (int c = 0; c < k; ++c) {
      long long symbol = rows[r][c];
      if (symbol < 0 || symbol >= v) {
        throw FormatError(
            fmt::format("row {} column {}: symbol {} outside [0, {})", r, c,
                        symbol, v));
      }
      file.array.at(r, c) = static_cast<int>(symbol);
    }
  }
  return file;
}

void WriteArray(std::ostream& out, const ArrayFile& file) {
  const VcaArray& a = file.array;
  out << fmt::format("{} {} {} {} {}\n", a.n, a.k, a.v, file.seed,
                     file.algorithm);
  for (int r = 0; r < a.n; ++r) out << fmt::format("{}\n", fmt::join(a.row(r), " "));
}

ArrayFile LoadArray(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(fmt::format("cannot open '{}'", path));
  return ReadArray(in);
}

void SaveArray(const std::string& path, const ArrayFile& file) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  WriteArray(out, file);
}

}  // namespace vca
