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

// Command-line front end: gen, bounds, construct, verify, figure-data.
//
// Exit codes: 0 success, 1 verification or construction failure, 2 usage or
// input error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "CLI11.hpp"
#include "vca/array_io.h"
#include "vca/bounds.h"
#include "vca/construct.h"
#include "vca/coverage.h"
#include "vca/design.h"
#include "vca/general_lll.h"
#include "vca/generators.h"
#include "vca/hypergraph.h"
#include "vca/hypergraph_io.h"
#include "vca/report.h"
#include "vca/rng.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "2..10", "2,3,5" or "7".
std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    for (int i = lo; i <= hi; ++i) out.push_back(i);
  } else {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  }
  if (out.empty()) throw UsageError(fmt::format("empty range '{}'", text));
  return out;
}

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  out << text;
}

struct GenArgs {
  std::string family;
  std::string out;
  int k = 0;
  int t = 0;
  std::optional<std::uint64_t> seed;
  std::string design_out;
  std::string partition_out;
};

int RunGen(const GenArgs& args) {
  vca::Hypergraph h;
  if (args.family == "complete") {
    h = vca::CompleteUniform(args.k, args.t);
  } else if (args.family == "cyclic") {
    h = vca::CyclicConsecutive(args.k, args.t);
  } else if (args.family == "triangulation") {
    if (!args.seed) throw UsageError("triangulation requires --seed");
    h = vca::RandomTriangulation({.k = args.k, .rng_seed = *args.seed});
  } else if (args.family == "sts") {
    vca::DesignBlocks d = vca::SteinerTripleSystem(args.k);
    h = vca::DesignToHypergraph(d);
    std::string design_out = args.design_out;
    if (design_out.empty() && !args.out.empty() && args.out != "-") {
      design_out = args.out + ".design";
    }
    if (!design_out.empty()) vca::SaveDesign(design_out, d);
  } else if (args.family == "h15") {
    vca::ClassifiedHypergraph c = vca::H15();
    h = c.hypergraph;
    if (!args.partition_out.empty()) vca::SavePartition(args.partition_out, c.classes);
  } else {
    throw UsageError(fmt::format("unknown family '{}'", args.family));
  }
  std::ostringstream text;
  vca::WriteHypergraph(text, h);
  Emit(args.out, text.str());
  return kOk;
}

struct BoundsArgs {
  std::string hg;
  std::string partition;
  std::string classes;
  std::optional<long long> edges;
  std::string v_range;
  std::string out;
  std::string tables;
  std::string k_grid = "7,9,13,25,99";
  std::string t_values = "3";
  bool precise = false;
};

int RunBounds(const BoundsArgs& args) {
  if (args.tables == "steiner") {
    std::vector<int> v = ParseIntList(args.v_range.empty() ? "2" : args.v_range);
    if (v.size() != 1) throw UsageError("steiner tables take a single --v");
    auto rows = vca::SteinerTable(ParseIntList(args.k_grid),
                                  ParseIntList(args.t_values), v[0]);
    Emit(args.out, vca::SteinerTableCsv(rows, args.precise));
    return kOk;
  }
  if (!args.tables.empty()) {
    throw UsageError(fmt::format("unknown table mode '{}'", args.tables));
  }
  if (args.hg.empty() == args.classes.empty()) {
    throw UsageError("give exactly one of --hg or --classes");
  }
  std::vector<vca::BoundTableRow> rows;
  if (!args.hg.empty()) {
    vca::Hypergraph h = vca::LoadHypergraph(args.hg);
    vca::EdgeClassPartition classes = args.partition.empty()
                                          ? vca::PartitionByCardinality(h)
                                          : vca::LoadPartition(args.partition);
    rows = vca::BoundTable(h, classes,
                           ParseIntList(args.v_range.empty() ? "2" : args.v_range));
  } else {
    std::ifstream in(args.classes);
    if (!in) throw vca::FormatError(fmt::format("cannot open '{}'", args.classes));
    vca::EventClassSystem sys = vca::ReadEventClassSystem(in);
    std::vector<int> v = args.v_range.empty() ? std::vector<int>{sys.v}
                                              : ParseIntList(args.v_range);
    rows = vca::BoundTable(sys, args.edges, v);
  }
  Emit(args.out, vca::BoundTableCsv(rows, args.precise));
  return kOk;
}

struct ConstructArgs {
  std::string hg;
  int v = 2;
  std::string algorithm = "vardens";
  std::optional<std::uint64_t> seed;
  std::optional<int> n;
  long long max_rounds = 100000;
  std::string out;
};

int RunConstruct(const ConstructArgs& args) {
  const vca::Hypergraph h = vca::LoadHypergraph(args.hg);
  const int t = vca::Rank(h);
  vca::ArrayFile file;
  long long bound = 0;
  int status = kOk;
  if (args.algorithm == "vardens") {
    file.seed = args.seed.value_or(0);
    file.array = vca::VarDensRelabeled(h, args.v, file.seed);
    file.algorithm = "vardens";
    bound = vca::NDens(h.num_edges(), t, args.v).n_int;
  } else if (args.algorithm == "random" || args.algorithm == "mt") {
    if (!args.seed) throw UsageError(fmt::format("--alg {} requires --seed", args.algorithm));
    file.seed = *args.seed;
    bound = vca::NProbSymmetric(vca::DependencyDegree(h), t, args.v).n_int;
    const int n = args.n.value_or(static_cast<int>(bound));
    file.algorithm = fmt::format("{}+{}", args.algorithm, vca::Rng::kAlgorithm);
    if (args.algorithm == "random") {
      file.array = vca::RandomFill(h, args.v, n, file.seed);
    } else {
      vca::MoserTardosResult mt =
          vca::MoserTardos(h, args.v, n, file.seed, args.max_rounds);
      file.array = mt.array;
      if (!mt.success) {
        std::cerr << fmt::format("moser-tardos: gave up after {} resamplings\n",
                                 mt.rounds);
        status = kFailure;
      }
    }
  } else {
    throw UsageError(fmt::format("unknown algorithm '{}'", args.algorithm));
  }
  const bool verified = vca::Verify(file.array, h).covered;
  if (!verified) status = kFailure;
  std::ostringstream text;
  vca::WriteArray(text, file);
  Emit(args.out, text.str());
  std::cerr << fmt::format("N={} bound={} verified={}\n", file.array.n, bound,
                           verified);
  return status;
}

int RunVerify(const std::string& array_path, const std::string& hg_path) {
  const vca::ArrayFile file = vca::LoadArray(array_path);
  const vca::Hypergraph h = vca::LoadHypergraph(hg_path);
  const vca::VerifyResult result = vca::Verify(file.array, h);
  if (result.covered) {
    std::cout << "covered\n";
    return kOk;
  }
  std::cout << fmt::format("uncovered: edge {} {{{}}} missing ({})\n",
                           result.edge, fmt::join(h.edge(result.edge), ","),
                           fmt::join(result.missing, ","));
  return kFailure;
}

struct FigureArgs {
  std::string hg;
  std::string partition;
  std::string v_range = "2..10";
  int trials = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool precise = false;
};

int RunFigureData(const FigureArgs& args) {
  if (args.trials > 0 && !args.seed) throw UsageError("--trials requires --seed");
  if (args.trials < 0) throw UsageError("--trials must be >= 0");
  vca::Hypergraph h = vca::LoadHypergraph(args.hg);
  vca::EdgeClassPartition classes = args.partition.empty()
                                        ? vca::PartitionByCardinality(h)
                                        : vca::LoadPartition(args.partition);
  auto rows = vca::FigureData(h, classes, ParseIntList(args.v_range),
                              args.trials, args.seed.value_or(0));
  Emit(args.out, vca::FigureDataCsv(rows, args.precise));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variable strength covering array bounds and constructions"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a hypergraph family as .hg");
  gen_cmd->add_option("family", gen.family, "complete|cyclic|triangulation|sts|h15")
      ->required();
  gen_cmd->add_option("out", gen.out, "Output .hg path (default stdout)");
  gen_cmd->add_option("--k", gen.k, "Vertex count");
  gen_cmd->add_option("--t", gen.t, "Edge size");
  gen_cmd->add_option("--seed", gen.seed, "Triangulation seed");
  gen_cmd->add_option("--design-out", gen.design_out,
                      "Design file for sts (default <out>.design)");
  gen_cmd->add_option("--partition-out", gen.partition_out,
                      "Edge-class partition file for h15");

  BoundsArgs bounds;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "Bound comparison table as CSV");
  bounds_cmd->add_option("--hg", bounds.hg, "Hypergraph file");
  bounds_cmd->add_option("--partition", bounds.partition,
                         "Edge-class partition for --hg (default: by edge size)");
  bounds_cmd->add_option("--classes", bounds.classes, "Event class system file");
  bounds_cmd->add_option("--edges", bounds.edges, "Edge count for n_dens with --classes");
  bounds_cmd->add_option("--v-range,--v", bounds.v_range, "e.g. 2..10 or 2,3,5");
  bounds_cmd->add_option("--out", bounds.out, "CSV path (default stdout)");
  bounds_cmd->add_option("--tables", bounds.tables, "steiner: design formula table");
  bounds_cmd->add_option("--k-grid", bounds.k_grid, "k values for --tables steiner");
  bounds_cmd->add_option("--t", bounds.t_values, "t values for --tables steiner");
  bounds_cmd->add_flag("--precise", bounds.precise, "Full precision numbers");

  ConstructArgs construct;
  CLI::App* construct_cmd = app.add_subcommand("construct", "Build an array");
  construct_cmd->add_option("hg", construct.hg, "Hypergraph file")->required();
  construct_cmd->add_option("--v", construct.v, "Alphabet size");
  construct_cmd->add_option("--alg", construct.algorithm, "random|mt|vardens");
  construct_cmd->add_option("--seed", construct.seed, "Random seed");
  construct_cmd->add_option("--n", construct.n, "Rows for random/mt (default ceil n_s)");
  construct_cmd->add_option("--max-rounds", construct.max_rounds, "Resampling cap for mt");
  construct_cmd->add_option("--out", construct.out, "Array path (default stdout)");

  std::string verify_array, verify_hg;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check an array against a hypergraph");
  verify_cmd->add_option("array", verify_array)->required();
  verify_cmd->add_option("hg", verify_hg)->required();

  FigureArgs figure;
  CLI::App* figure_cmd =
      app.add_subcommand("figure-data", "Log-scale comparison series as CSV");
  figure_cmd->add_option("hg", figure.hg, "Hypergraph file")->required();
  figure_cmd->add_option("--partition", figure.partition, "Edge-class partition");
  figure_cmd->add_option("--v-range,--v", figure.v_range, "e.g. 2..10");
  figure_cmd->add_option("--trials", figure.trials, "VarDens relabeling trials per v");
  figure_cmd->add_option("--seed", figure.seed, "Base seed for trials");
  figure_cmd->add_option("--out", figure.out, "CSV path (default stdout)");
  figure_cmd->add_flag("--precise", figure.precise, "Full precision numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return RunGen(gen);
    if (*bounds_cmd) return RunBounds(bounds);
    if (*construct_cmd) return RunConstruct(construct);
    if (*verify_cmd) return RunVerify(verify_array, verify_hg);
    if (*figure_cmd) return RunFigureData(figure);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
