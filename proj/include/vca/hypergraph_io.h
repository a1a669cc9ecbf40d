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

#ifndef VCA_HYPERGRAPH_IO_H_
#define VCA_HYPERGRAPH_IO_H_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "vca/hypergraph.h"

namespace vca {

// Malformed input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `.hg` text format: the first content line holds k, every following
// nonempty line is one edge as space-separated 0-based vertex indices.
// Lines starting with '#' are comments.
//
// Reading validates the result and throws FormatError on a parse error or an
// invariant violation. Writing emits the canonical form (sorted vertices,
// original edge order), so Write(Read(Write(h))) is byte-identical.
Hypergraph ReadHypergraph(std::istream& in);
void WriteHypergraph(std::ostream& out, const Hypergraph& h);

Hypergraph LoadHypergraph(const std::string& path);
void SaveHypergraph(const std::string& path, const Hypergraph& h);

// Edge partition file: the first content line lists the class ranks, the
// remaining integers give the class of each edge in edge order.
EdgeClassPartition ReadPartition(std::istream& in);
void WritePartition(std::ostream& out, const EdgeClassPartition& classes);

EdgeClassPartition LoadPartition(const std::string& path);
void SavePartition(const std::string& path, const EdgeClassPartition& classes);

namespace io_internal {

// Splits `in` into non-comment, non-blank lines of integers. Throws
// FormatError naming the 1-based line number on a non-integer token.
std::vector<std::vector<long long>> ReadIntegerLines(std::istream& in);

}  // namespace io_internal
}  // namespace vca

#endif  // VCA_HYPERGRAPH_IO_H_
