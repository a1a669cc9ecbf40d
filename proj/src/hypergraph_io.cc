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

#include "vca/hypergraph_io.h"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

namespace vca {

namespace io_internal {

std::vector<std::vector<long long>> ReadIntegerLines(std::istream& in) {
  std::vector<std::vector<long long>> lines;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<long long> values;
    std::string token;
    while (tokens >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw FormatError(
            fmt::format("line {}: '{}' is not an integer", line_number, token));
      }
      values.push_back(value);
    }
    lines.push_back(std::move(values));
  }
  return lines;
}

}  // namespace io_internal

Hypergraph ReadHypergraph(std::istream& in) {
  std::vector<std::vector<long long>> lines = io_internal::ReadIntegerLines(in);
  if (lines.empty() || lines[0].size() != 1) {
    throw FormatError("hypergraph file must start with a line holding k");
  }
  long long k = lines[0][0];
  if (k < 0 || k > std::numeric_limits<int>::max()) {
    throw FormatError(fmt::format("invalid vertex count {}", k));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Edge e;
    for (long long vertex : lines[i]) {
      if (vertex < 0 || vertex >= k) {
        throw FormatError(fmt::format("edge {}: vertex {} out of range [0, {})",
                                      i - 1, vertex, k));
      }
      e.push_back(static_cast<int>(vertex));
    }
    edges.push_back(std::move(e));
  }
  Hypergraph h(static_cast<int>(k), std::move(edges));
  if (auto violation = Validate(h)) throw FormatError(*violation);
  return h;
}

void WriteHypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.num_vertices() << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

Hypergraph LoadHypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(fmt::format("cannot open '{}'", path));
  return ReadHypergraph(in);
}

void SaveHypergraph(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  WriteHypergraph(out, h);
}

EdgeClassPartition ReadPartition(std::istream& in) {
  std::vector<std::vector<long long>> lines = io_internal::ReadIntegerLines(in);
  if (lines.empty()) throw FormatError("partition file is empty");
  EdgeClassPartition classes;
  for (long long rank : lines[0]) {
    if (rank < 1) throw FormatError(fmt::format("invalid class rank {}", rank));
    classes.class_rank.push_back(static_cast<int>(rank));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (long long c : lines[i]) {
      if (c < 0 || c >= classes.num_classes()) {
        throw FormatError(fmt::format("class index {} out of range", c));
      }
      classes.class_of.push_back(static_cast<int>(c));
    }
  }
  return classes;
}

void WritePartition(std::ostream& out, const EdgeClassPartition& classes) {
  for (int i = 0; i < classes.num_classes(); ++i) {
    if (i > 0) out << ' ';
    out << classes.class_rank[i];
  }
  out << '\n';
  for (int c : classes.class_of) out << c << '\n';
}

EdgeClassPartition LoadPartition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(fmt::format("cannot open '{}'", path));
  return ReadPartition(in);
}

void SavePartition(const std::string& path, const EdgeClassPartition& classes) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  WritePartition(out, classes);
}

}  // namespace vca
