#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wmesc/instance.hpp"
#include "wmesc/solver.hpp"

namespace wmesc {

/// Largest characteristic root over all branching rules used by the solver.
inline constexpr double kSolverGrowthBound = 1.3248;

/// Branching recurrence T(m) <= sum_j T(m - gaps[j]).
class Recurrence {
 public:
  explicit Recurrence(std::vector<unsigned> gaps);
  const std::vector<unsigned>& gaps() const noexcept { return gaps_; }
  unsigned max_gap() const noexcept;

  /// t^D - sum_j t^(D - d_j), D the largest gap.
  double characteristic(double t) const;

 private:
  std::vector<unsigned> gaps_;
};

/// Unique root >= 1 of the characteristic polynomial, by bisection to
/// absolute error <= 1e-12.
double branching_root(const Recurrence& r);

using SlackFn = std::function<double(std::size_t)>;

/// m + 1
double linear_slack(std::size_t m);

struct BoundReport {
  bool pass = false;
  std::uint64_t leaves = 0;
  double bound = 0.0;
  /// leaves / root^m (exponential mode) or leaves / (2 m^2) (quadratic mode).
  double ratio = 0.0;
};

/// Pass iff leaves <= slack(m) * root^m.
BoundReport check_bound(const SolveStats& stats, std::size_t m, double root, const SlackFn& slack = linear_slack);

/// Pass iff leaves <= 2 m^2, the bound for a single path or ring.
BoundReport check_quadratic_bound(const SolveStats& stats, std::size_t m);

struct BenchRow {
  std::size_t m = 0;
  std::size_t n = 0;
  std::optional<std::size_t> covered;  // empty on timeout
  std::optional<double> weight;
  SolveStats stats;
  double leaf_ratio = 0.0;  // leaves / kSolverGrowthBound^m
  std::string status;       // "ok" or "timeout"
};

struct BenchOptions {
  std::optional<std::chrono::duration<double>> timeout;
  double tol = kDefaultTolerance;
};

/// Solves every instance in order; timeouts become rows, not exceptions.
std::vector<BenchRow> bench_corpus(const std::vector<Instance>& corpus, const BenchOptions& opts = {});

inline constexpr const char* kBenchCsvHeader =
    "m,n,covered,weight,branch_nodes,leaves,max_depth,elapsed_s,leaf_ratio,status";

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace wmesc
