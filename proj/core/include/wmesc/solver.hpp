#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "wmesc/instance.hpp"
#include "wmesc/intersection_graph.hpp"

namespace wmesc {

/// Search-tree instrumentation.
///
/// A leaf is a call that returns without branching and without recursing:
/// an empty alive set, or a batch of degree-0 nodes committed at once.
/// Component splits recurse but do not branch, so across a whole solve
/// `leaves <= 2 * branch_nodes + 1`.
struct SolveStats {
  std::uint64_t branch_nodes = 0;
  std::uint64_t leaves = 0;
  std::size_t max_depth = 0;
  double elapsed_s = 0.0;
};

struct SolveOptions {
  double tol = kDefaultTolerance;
  /// Wall-clock budget. Exceeding it raises SolveTimeout.
  std::optional<std::chrono::duration<double>> time_limit;
};

struct SolveResult {
  Solution solution;
  SolveStats stats;
};

class SolveTimeout : public std::runtime_error {
 public:
  explicit SolveTimeout(SolveStats partial);
  const SolveStats& stats() const noexcept { return stats_; }

 private:
  SolveStats stats_;
};

/// Exact solver for arbitrary instances: maximum coverage, then minimum weight.
/// Components are solved independently; components of maximum degree <= 3
/// go to the degree-3 rule, otherwise the maximum-degree node is branched on.
SolveResult solve(const Instance& inst, const SolveOptions& opts = {});

/// Same contract, restricted to instances whose intersection graph has
/// maximum degree <= 3. Throws PreconditionError otherwise.
SolveResult solve_deg3(const Instance& inst, const SolveOptions& opts = {});

/// Same contract, restricted to maximum degree <= 2 (disjoint paths and
/// rings). Throws PreconditionError otherwise.
SolveResult solve_deg2(const Instance& inst, const SolveOptions& opts = {});

/// Alive sets of the two children produced by branching on `x`.
struct BranchSplit {
  SubProblem include;  // closure of x removed; x goes into the solution
  SubProblem exclude;  // only x removed
};

BranchSplit branch(const IntersectionGraph& g, const SubProblem& sub, SubsetIndex x);

}  // namespace wmesc
