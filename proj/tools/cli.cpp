#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "wmesc/analysis.hpp"
#include "wmesc/generators.hpp"
#include "wmesc/instance.hpp"
#include "wmesc/oracle.hpp"
#include "wmesc/packing.hpp"
#include "wmesc/solver.hpp"

namespace wmesc::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

// Input problems the user can fix; mapped to exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

Instance read_instance(const std::string& path) {
  auto in = open_input(path);
  try {
    return parse_instance(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json solution_json(const Solution& sol) {
  Json j;
  j["chosen"] = sol.chosen;
  j["covered"] = sol.covered;
  j["weight"] = sol.weight;
  return j;
}

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  write(file);
  if (!file) throw InputError("failed writing '" + path + "'");
}

struct SolveArgs {
  std::string input;
  bool stats = false;
  double tol = kDefaultTolerance;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  Instance inst = read_instance(a.input);
  SolveOptions opts;
  opts.tol = a.tol;
  auto result = solve(inst, opts);
  Json j = solution_json(result.solution);
  if (a.stats) {
    j["branch_nodes"] = result.stats.branch_nodes;
    j["leaves"] = result.stats.leaves;
    j["max_depth"] = result.stats.max_depth;
    j["elapsed_s"] = result.stats.elapsed_s;
  }
  out << j.dump() << '\n';
  return kOk;
}

int cmd_oracle(const std::string& input, std::ostream& out) {
  Instance inst = read_instance(input);
  if (inst.m() > kBruteForceMaxSubsets) {
    throw InputError("oracle handles at most " + std::to_string(kBruteForceMaxSubsets) + " subsets, instance has " +
                     std::to_string(inst.m()));
  }
  out << solution_json(brute_force(inst)).dump() << '\n';
  return kOk;
}

struct GenArgs {
  std::string kind;
  std::uint64_t seed = 0;
  std::size_t n = 10;
  std::size_t m = 5;
  std::size_t max_size = 3;
  double overlap = 0.3;
  std::size_t k = 3;
  std::size_t noise = 0;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  Instance inst;
  try {
    if (a.kind == "random") {
      inst = gen_random(GenConfig{a.seed, a.n, a.m, a.max_size, a.overlap});
    } else if (a.kind == "path") {
      inst = gen_path(a.m, a.seed);
    } else if (a.kind == "ring") {
      inst = gen_ring(a.m, a.seed);
    } else if (a.kind == "planted") {
      inst = gen_planted(a.n, a.k, a.noise, a.seed).instance;
    } else {
      throw InputError("unknown generator kind '" + a.kind + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  emit(a.output, out, [&](std::ostream& os) { write_instance(os, inst); });
  return kOk;
}

struct BenchArgs {
  std::string dir;
  std::string output;
  std::optional<double> timeout;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  std::error_code ec;
  if (!fs::is_directory(a.dir, ec)) throw InputError("cannot read corpus directory '" + a.dir + "'");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) throw InputError("cannot read corpus directory '" + a.dir + "': " + ec.message());
  std::sort(files.begin(), files.end());

  std::vector<Instance> corpus;
  corpus.reserve(files.size());
  for (const auto& f : files) corpus.push_back(read_instance(f.string()));

  BenchOptions opts;
  if (a.timeout) opts.timeout = std::chrono::duration<double>(*a.timeout);
  auto rows = bench_corpus(corpus, opts);
  emit(a.output, out, [&](std::ostream& os) { write_bench_csv(os, rows); });
  return kOk;
}

int cmd_reduce(const std::string& input, const std::string& output, std::ostream& out) {
  auto in = open_input(input);
  Instance inst;
  try {
    inst = reduce_3set_packing(parse_packing(in));
  } catch (const ParseError& e) {
    throw InputError(input + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(input + ": " + e.what());
  }
  emit(output, out, [&](std::ostream& os) { write_instance(os, inst); });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for weighted mutually exclusive maximum set cover", "wmesc"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a WMESC v1 instance exactly");
  solve_cmd->add_option("input", solve_args.input, "Instance file")->required();
  solve_cmd->add_flag("--stats", solve_args.stats, "Include search-tree statistics");
  solve_cmd->add_option("--tol", solve_args.tol, "Weight tie tolerance")->check(CLI::NonNegativeNumber);

  std::string oracle_input;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference solve (m <= 25)");
  oracle_cmd->add_option("input", oracle_input, "Instance file")->required();

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", gen_args.kind, "random | path | ring | planted")->required();
  gen_cmd->add_option("--seed", gen_args.seed, "64-bit seed");
  gen_cmd->add_option("--n", gen_args.n, "Ground set size (random, planted)");
  gen_cmd->add_option("--m", gen_args.m, "Subset count (random, path, ring)");
  gen_cmd->add_option("--max-size", gen_args.max_size, "Maximum subset size (random)");
  gen_cmd->add_option("--overlap", gen_args.overlap, "Element reuse probability (random)");
  gen_cmd->add_option("--k", gen_args.k, "Planted subsets (planted)");
  gen_cmd->add_option("--noise", gen_args.noise, "Noise subsets (planted)");
  gen_cmd->add_option("-o,--output", gen_args.output, "Output file (default stdout)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Solve every instance in a directory and write CSV");
  bench_cmd->add_option("dir", bench_args.dir, "Corpus directory")->required();
  bench_cmd->add_option("-o,--output", bench_args.output, "CSV file (default stdout)");
  bench_cmd->add_option("--timeout", bench_args.timeout, "Per-instance limit in seconds")
      ->check(CLI::NonNegativeNumber);

  std::string reduce_input;
  std::string reduce_output;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a 3-set packing file to a WMESC instance");
  reduce_cmd->add_option("input", reduce_input, "Packing file, one triple per line")->required();
  reduce_cmd->add_option("-o,--output", reduce_output, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out);
    if (*oracle_cmd) return cmd_oracle(oracle_input, out);
    if (*gen_cmd) return cmd_gen(gen_args, out);
    if (*bench_cmd) return cmd_bench(bench_args, out);
    if (*reduce_cmd) return cmd_reduce(reduce_input, reduce_output, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace wmesc::cli
