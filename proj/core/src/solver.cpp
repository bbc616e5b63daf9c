#include "wmesc/solver.hpp"

#include <algorithm>
#include <string>

#include "deep_stack.hpp"

namespace wmesc {

SolveTimeout::SolveTimeout(SolveStats partial)
    : std::runtime_error("solve exceeded its time limit"), stats_(partial) {}

BranchSplit branch(const IntersectionGraph& g, const SubProblem& sub, SubsetIndex x) {
  BranchSplit split{sub, sub};
  split.include.erase(neighbor_closure(g, sub, x));
  split.exclude.erase(x);
  return split;
}

namespace {

// Which branching rule a call applies. Recursion never moves back up:
// removing nodes cannot raise a degree.
enum class Rule { General, Deg3, Deg2 };

using Clock = std::chrono::steady_clock;

class Search {
 public:
  Search(const Instance& inst, const IntersectionGraph& g, const SolveOptions& opts)
      : inst_(inst), g_(g), tol_(opts.tol), start_(Clock::now()) {
    if (opts.time_limit) {
      deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(*opts.time_limit);
    }
  }

  SolveResult run(Rule rule) {
    Solution sol;
    // Exclude-branches shrink the alive set by one, so depth can reach ~2m.
    std::size_t stack_bytes = (std::size_t{1} << 20) + (2 * inst_.m() + 8) * 4096;
    stack_bytes = std::min<std::size_t>(stack_bytes, std::size_t{1} << 31);
    detail::run_with_stack(stack_bytes, [&] { sol = solve(rule, SubProblem::all(inst_.m()), 0); });
    std::sort(sol.chosen.begin(), sol.chosen.end());
    stats_.elapsed_s = elapsed();
    return {std::move(sol), stats_};
  }

 private:
  Solution solve(Rule rule, const SubProblem& sub, std::size_t depth) {
    enter(depth);
    if (sub.empty()) {
      ++stats_.leaves;
      return {};
    }
    auto comps = components(g_, sub);
    if (comps.size() == 1 && comps.front().size() >= 2) return branch_on(rule, sub, comps.front(), depth);

    Solution acc;
    bool committed = false;
    for (const auto& comp : comps) {
      if (comp.size() == 1) {
        commit(acc, comp.front());
        committed = true;
        continue;
      }
      Solution part = branch_on(rule, SubProblem::of(inst_.m(), comp), comp, depth + 1);
      acc.chosen.insert(acc.chosen.end(), part.chosen.begin(), part.chosen.end());
      acc.covered += part.covered;
      acc.weight += part.weight;
    }
    if (committed) ++stats_.leaves;
    return acc;
  }

  // `comp` is the whole of `sub`: connected, at least two nodes.
  Solution branch_on(Rule rule, const SubProblem& sub, const std::vector<SubsetIndex>& comp, std::size_t depth) {
    enter(depth);
    SubsetIndex pivot = 0;
    bool chosen = false;

    if (rule == Rule::General) {
      auto [x, d] = max_degree_node(g_, sub);
      if (d <= 3) {
        rule = Rule::Deg3;
      } else {
        pivot = x;
        chosen = true;
      }
    }
    if (rule == Rule::Deg3 && !chosen) {
      std::size_t dmax = 0;
      for (SubsetIndex v : comp) dmax = std::max(dmax, g_.degree(v, sub));
      if (dmax > 3) throw PreconditionError("degree-3 rule applied to a node of degree " + std::to_string(dmax));
      if (dmax <= 2) {
        rule = Rule::Deg2;
      } else {
        pivot = select_pivot_deg3(g_, sub, comp);
        chosen = true;
      }
    }
    if (rule == Rule::Deg2 && !chosen) pivot = select_pivot_deg2(g_, sub, comp);

    ++stats_.branch_nodes;
    check_deadline();

    auto split = branch(g_, sub, pivot);
    Solution with = solve(rule, split.include, depth + 1);
    commit(with, pivot);
    Solution without = solve(rule, split.exclude, depth + 1);
    return better(without, with, tol_) ? std::move(without) : std::move(with);
  }

  void commit(Solution& sol, SubsetIndex i) const {
    sol.chosen.push_back(i);
    sol.covered += inst_.subset(i).size();
    sol.weight += inst_.weight(i);
  }

  void enter(std::size_t depth) { stats_.max_depth = std::max(stats_.max_depth, depth); }

  void check_deadline() {
    if (!deadline_ || (stats_.branch_nodes & 15) != 0) return;
    if (Clock::now() >= *deadline_) {
      stats_.elapsed_s = elapsed();
      throw SolveTimeout(stats_);
    }
  }

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  const Instance& inst_;
  const IntersectionGraph& g_;
  double tol_;
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
  SolveStats stats_;
};

SolveResult run_rule(const Instance& inst, const SolveOptions& opts, Rule rule, std::size_t max_degree,
                     const char* name) {
  auto g = build_graph(inst);
  if (inst.m() > 0) {
    auto [x, d] = max_degree_node(g, SubProblem::all(inst.m()));
    if (d > max_degree) {
      throw PreconditionError(std::string(name) + ": node " + std::to_string(x) + " has degree " + std::to_string(d));
    }
  }
  return Search(inst, g, opts).run(rule);
}

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& opts) {
  auto g = build_graph(inst);
  return Search(inst, g, opts).run(Rule::General);
}

SolveResult solve_deg3(const Instance& inst, const SolveOptions& opts) {
  return run_rule(inst, opts, Rule::Deg3, 3, "solve_deg3");
}

SolveResult solve_deg2(const Instance& inst, const SolveOptions& opts) {
  return run_rule(inst, opts, Rule::Deg2, 2, "solve_deg2");
}

}  // namespace wmesc
