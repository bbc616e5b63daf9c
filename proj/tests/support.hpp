#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wmesc/generators.hpp"
#include "wmesc/instance.hpp"

namespace wmesc::testing {

inline Instance unit_weights(std::size_t n, std::vector<std::vector<Element>> subsets) {
  std::vector<double> w(subsets.size(), 1.0);
  return Instance(n, std::move(subsets), std::move(w));
}

/// S0={0,1}, S1={1,2}, S2={2,3}: intersection graph is a 3-node path.
inline Instance path3() { return unit_weights(4, {{0, 1}, {1, 2}, {2, 3}}); }

/// S0={0,1}, S1={1,2}, S2={0,2}: triangle.
inline Instance ring3() { return unit_weights(3, {{0, 1}, {1, 2}, {0, 2}}); }

/// Hub S0={0,1,2} touching three leaves.
inline Instance star() { return unit_weights(6, {{0, 1, 2}, {0, 3}, {1, 4}, {2, 5}}); }

/// Four pairwise-overlapping triples.
inline Instance k4() { return unit_weights(6, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}); }

/// Edges 0-1, 0-2, 0-3, 2-3, 1-4, 1-5: nodes 0 and 1 have degree 3, only
/// node 1 touches a degree-1 node.
inline Instance pivot_gadget() {
  return unit_weights(6, {{0, 1, 2}, {0, 4, 5}, {1, 3}, {2, 3}, {4}, {5}});
}

/// Random instance with parameters drawn from `rng`; m in [1, max_m].
inline Instance random_instance(std::mt19937_64& rng, std::size_t max_m, std::size_t max_n = 30) {
  static constexpr double kOverlaps[] = {0.0, 0.3, 0.7, 1.0};
  GenConfig cfg;
  cfg.seed = rng();
  cfg.n = 3 + rng() % (max_n - 2);
  cfg.m = 1 + rng() % max_m;
  cfg.max_size = 1 + rng() % std::min<std::size_t>(cfg.n, 5);
  cfg.overlap = kOverlaps[rng() % 4];
  return gen_random(cfg);
}

/// Brute-force pairwise check that `chosen` is mutually exclusive.
inline bool pairwise_disjoint(const Instance& inst, const std::vector<SubsetIndex>& chosen) {
  for (std::size_t a = 0; a < chosen.size(); ++a) {
    for (std::size_t b = a + 1; b < chosen.size(); ++b) {
      for (Element x : inst.subset(chosen[a])) {
        for (Element y : inst.subset(chosen[b])) {
          if (x == y) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace wmesc::testing
