#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "wmesc/analysis.hpp"
#include "wmesc/generators.hpp"
#include "wmesc/oracle.hpp"
#include "wmesc/solver.hpp"

namespace wmesc {
namespace {

using Indices = std::vector<SubsetIndex>;

void expect_valid(const Instance& inst, const Solution& sol) {
  ASSERT_TRUE(std::is_sorted(sol.chosen.begin(), sol.chosen.end()));
  auto re = evaluate(inst, sol.chosen);
  EXPECT_EQ(re.covered, sol.covered);
  EXPECT_NEAR(re.weight, sol.weight, 1e-9);
}

TEST(Solve, EmptyInstance) {
  auto r = solve(Instance(0, {}, {}));
  EXPECT_TRUE(r.solution.chosen.empty());
  EXPECT_EQ(r.solution.covered, 0u);
  EXPECT_EQ(r.solution.weight, 0.0);
  EXPECT_EQ(r.stats.branch_nodes, 0u);
  EXPECT_EQ(r.stats.leaves, 1u);
}

TEST(Solve, DisjointSubsetsAllTaken) {
  auto r = solve(Instance(3, {{0, 1}, {2}}, {0.5, 3.0}));
  EXPECT_EQ(r.solution.chosen, (Indices{0, 1}));
  EXPECT_EQ(r.solution.covered, 3u);
  EXPECT_DOUBLE_EQ(r.solution.weight, 3.5);
  EXPECT_EQ(r.stats.branch_nodes, 0u);
}

TEST(Solve, TwoComponents) {
  auto inst = Instance(5, {{0, 1}, {1, 2}, {3, 4}}, {1.0, 1.0, 1.0});
  auto r = solve(inst);
  EXPECT_EQ(r.solution.covered, 4u);
  EXPECT_DOUBLE_EQ(r.solution.weight, 2.0);
  EXPECT_TRUE(r.solution.chosen == (Indices{0, 2}) || r.solution.chosen == (Indices{1, 2}));
  expect_valid(inst, r.solution);
}

TEST(Solve, Star) {
  auto r = solve(testing::star());
  EXPECT_EQ(r.solution.chosen, (Indices{1, 2, 3}));
  EXPECT_EQ(r.solution.covered, 6u);
  EXPECT_DOUBLE_EQ(r.solution.weight, 3.0);
}

TEST(SolveDeg3, Examples) {
  auto star = solve_deg3(testing::star()).solution;
  EXPECT_EQ(star.covered, 6u);
  EXPECT_DOUBLE_EQ(star.weight, 3.0);

  auto p3 = solve_deg3(testing::path3()).solution;
  EXPECT_EQ(p3.chosen, (Indices{0, 2}));
  EXPECT_EQ(p3.covered, 4u);

  auto k4 = solve_deg3(testing::k4()).solution;
  EXPECT_EQ(k4.chosen.size(), 1u);
  EXPECT_EQ(k4.covered, 3u);
  EXPECT_DOUBLE_EQ(k4.weight, 1.0);
}

TEST(SolveDeg3, RejectsDegreeFour) {
  auto hub = testing::unit_weights(8, {{0, 1, 2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  EXPECT_THROW(solve_deg3(hub), PreconditionError);
  EXPECT_NO_THROW(solve(hub));
}

TEST(SolveDeg2, Examples) {
  auto p3 = solve_deg2(testing::path3()).solution;
  EXPECT_EQ(p3.chosen, (Indices{0, 2}));
  EXPECT_EQ(p3.covered, 4u);
  EXPECT_DOUBLE_EQ(p3.weight, 2.0);

  auto r3 = solve_deg2(testing::ring3()).solution;
  EXPECT_EQ(r3.chosen.size(), 1u);
  EXPECT_EQ(r3.covered, 2u);
  EXPECT_DOUBLE_EQ(r3.weight, 1.0);

  auto two = solve_deg2(Instance(3, {{0, 1}, {1, 2}}, {5.0, 1.0})).solution;
  EXPECT_EQ(two.chosen, (Indices{1}));
  EXPECT_EQ(two.covered, 2u);
  EXPECT_DOUBLE_EQ(two.weight, 1.0);
}

TEST(SolveDeg2, RejectsDegreeThree) { EXPECT_THROW(solve_deg2(testing::star()), PreconditionError); }

TEST(Branch, Splits) {
  auto p3 = build_graph(testing::path3());
  auto s = branch(p3, SubProblem::all(3), 1);
  EXPECT_TRUE(s.include.empty());
  EXPECT_EQ(s.exclude.members(), (Indices{0, 2}));

  auto star = build_graph(testing::star());
  auto t = branch(star, SubProblem::all(4), 0);
  EXPECT_TRUE(t.include.empty());
  EXPECT_EQ(t.exclude.members(), (Indices{1, 2, 3}));

  auto lone = build_graph(testing::unit_weights(4, {{0, 1}, {2, 3}}));
  auto u = branch(lone, SubProblem::all(2), 0);
  EXPECT_EQ(u.include.members(), (Indices{1}));
  EXPECT_EQ(u.exclude.members(), (Indices{1}));
}

TEST(Solve, IncludeBranchWinsExactTies) {
  // Equal weights: branching on node 0 keeps the include branch.
  auto inst = Instance(3, {{0, 1}, {1, 2}}, {1.0, 1.0});
  EXPECT_EQ(solve(inst).solution.chosen, (Indices{0}));
}

TEST(Solve, MatchesOracleProperty) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 400; ++trial) {
    auto inst = testing::random_instance(rng, 14);
    auto got = solve(inst).solution;
    auto want = brute_force(inst);
    ASSERT_EQ(got.covered, want.covered) << serialize_instance(inst);
    ASSERT_NEAR(got.weight, want.weight, 1e-9) << serialize_instance(inst);
    ASSERT_TRUE(testing::pairwise_disjoint(inst, got.chosen));
    expect_valid(inst, got);
  }
}

TEST(SolveDeg3, MatchesOracleOnBoundedDegree) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    GenConfig cfg{rng(), 8 + rng() % 20, 2 + rng() % 13, 1 + rng() % 3, 0.3};
    auto inst = gen_bounded_degree(cfg, 3, 200);
    if (!inst) continue;
    ++checked;
    auto got = solve_deg3(*inst).solution;
    auto want = brute_force(*inst);
    ASSERT_EQ(got.covered, want.covered);
    ASSERT_NEAR(got.weight, want.weight, 1e-9);
  }
  EXPECT_GT(checked, 100);
}

TEST(Solve, CoverageMonotoneUnderDeletion) {
  std::mt19937_64 rng(4321);
  for (int trial = 0; trial < 150; ++trial) {
    auto inst = testing::random_instance(rng, 12);
    if (inst.m() < 2) continue;
    auto drop = static_cast<std::size_t>(rng() % inst.m());
    auto subsets = inst.subsets();
    auto weights = inst.weights();
    subsets.erase(subsets.begin() + static_cast<std::ptrdiff_t>(drop));
    weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(drop));
    Instance smaller(inst.n(), subsets, weights);
    auto full = solve(inst).solution.covered;
    auto reduced = solve(smaller).solution.covered;
    ASSERT_LE(reduced, full);
    ASSERT_EQ(reduced, brute_force(smaller).covered);
  }
}

TEST(Solve, WeightScalingProperty) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = testing::random_instance(rng, 16);
    const double c = 0.25 + static_cast<double>(rng() % 1000) / 100.0;
    auto w = inst.weights();
    for (auto& x : w) x *= c;
    Instance scaled(inst.n(), inst.subsets(), w);
    auto base = solve(inst).solution;
    auto big = solve(scaled).solution;
    ASSERT_EQ(big.covered, base.covered);
    ASSERT_NEAR(big.weight, c * base.weight, 1e-9 * std::max(1.0, c * base.weight));
  }
}

TEST(Solve, Deterministic) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    auto inst = testing::random_instance(rng, 25, 40);
    auto a = solve(inst);
    auto b = solve(inst);
    ASSERT_EQ(a.solution.chosen, b.solution.chosen);
    ASSERT_EQ(a.solution.weight, b.solution.weight);
    ASSERT_EQ(a.stats.branch_nodes, b.stats.branch_nodes);
    ASSERT_EQ(a.stats.leaves, b.stats.leaves);
    ASSERT_EQ(a.stats.max_depth, b.stats.max_depth);
  }
}

TEST(SolveStats, LeafCountingInvariant) {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 200; ++trial) {
    auto inst = testing::random_instance(rng, 25, 40);
    auto s = solve(inst).stats;
    ASSERT_GE(s.leaves, 1u);
    ASSERT_LE(s.leaves, 2 * s.branch_nodes + 1);
    ASSERT_LE(s.max_depth, 2 * inst.m() + 1);
  }
}

TEST(SolveStats, SingleTreeWithoutSplits) {
  // K4 never splits into components, so it is one binary tree.
  auto s = solve(testing::k4()).stats;
  EXPECT_EQ(s.leaves, s.branch_nodes + 1);
}

TEST(SolveDeg2, QuadraticLeafBound) {
  for (std::size_t m : {3u, 4u, 5u, 10u, 17u, 50u, 100u, 257u, 400u}) {
    auto p = solve_deg2(gen_path(m, m)).stats;
    EXPECT_LE(p.leaves, 2 * m * m) << "path m=" << m;
    auto r = solve_deg2(gen_ring(m, m)).stats;
    EXPECT_LE(r.leaves, 2 * m * m) << "ring m=" << m;
  }
}

TEST(Solve, PathAndRingMatchOracle) {
  for (std::size_t m = 1; m <= 14; ++m) {
    auto p = gen_path(m, 100 + m);
    auto got = solve(p).solution;
    auto want = brute_force(p);
    EXPECT_EQ(got.covered, want.covered);
    EXPECT_NEAR(got.weight, want.weight, 1e-9);
    if (m < 3) continue;
    auto r = gen_ring(m, 200 + m);
    got = solve(r).solution;
    want = brute_force(r);
    EXPECT_EQ(got.covered, want.covered);
    EXPECT_NEAR(got.weight, want.weight, 1e-9);
  }
}

TEST(Solve, DeepCliqueRecursion) {
  // Every subset holds element 0: each exclude-branch peels off one node.
  const std::size_t m = 600;
  std::vector<std::vector<Element>> subsets;
  std::vector<double> weights;
  for (std::size_t i = 0; i < m; ++i) {
    subsets.push_back({0, static_cast<Element>(1 + i)});
    weights.push_back(static_cast<double>(m - i));
  }
  auto r = solve(Instance(m + 1, subsets, weights));
  EXPECT_EQ(r.solution.chosen, (Indices{static_cast<SubsetIndex>(m - 1)}));
  EXPECT_EQ(r.solution.covered, 2u);
  EXPECT_DOUBLE_EQ(r.solution.weight, 1.0);
  EXPECT_GE(r.stats.max_depth, m - 4);
}

TEST(Solve, TimeoutReportsPartialStats) {
  auto inst = gen_random(GenConfig{3, 60, 90, 4, 0.6});
  SolveOptions opts;
  opts.time_limit = std::chrono::duration<double>(0.0);
  try {
    solve(inst, opts);
    FAIL() << "expected timeout";
  } catch (const SolveTimeout& t) {
    EXPECT_GT(t.stats().branch_nodes, 0u);
  }
}

TEST(Solve, TolIsHonoured) {
  // Two singletons cover the same; weights differ by less than the default tolerance.
  auto inst = Instance(2, {{0, 1}, {0, 1}}, {1.0, 1.0 - 1e-12});
  EXPECT_EQ(solve(inst).solution.chosen, (Indices{0}));
  SolveOptions exact;
  exact.tol = 0.0;
  EXPECT_EQ(solve(inst, exact).solution.chosen, (Indices{1}));
}

}  // namespace
}  // namespace wmesc
