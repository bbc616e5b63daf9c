#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wmesc/instance.hpp"

namespace wmesc {

// All generators draw from std::mt19937_64 seeded with the caller's 64-bit
// seed. Raw 64-bit outputs are mapped to values by hand (see generators.cpp)
// instead of through <random> distributions, whose algorithms differ between
// standard library implementations. Same seed, same bytes, on any platform.

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t n = 1;
  std::size_t m = 1;
  std::size_t max_size = 1;
  /// Probability that each element slot reuses an element already placed in
  /// an earlier subset instead of taking a fresh one.
  double overlap = 0.0;
};

/// Throws std::invalid_argument unless n >= 1, m >= 1, 1 <= max_size <= n
/// and 0 <= overlap <= 1.
void validate(const GenConfig& cfg);

/// m nonempty subsets with sizes uniform in [1, max_size] and weights uniform in [0, 10).
Instance gen_random(const GenConfig& cfg);

/// Rejection-samples gen_random until the intersection graph has maximum
/// degree <= max_degree. Returns nullopt after `attempts` failures.
std::optional<Instance> gen_bounded_degree(const GenConfig& cfg, std::size_t max_degree,
                                           std::size_t attempts = 1000);

/// Intersection graph is exactly the path 0 - 1 - ... - (m-1). Requires m >= 1.
Instance gen_path(std::size_t m, std::uint64_t seed);

/// Intersection graph is exactly the cycle 0 - 1 - ... - (m-1) - 0. Requires m >= 3.
Instance gen_ring(std::size_t m, std::uint64_t seed);

struct PlantedInstance {
  Instance instance;
  std::vector<SubsetIndex> planted;  // sorted; disjoint, covers all n elements
};

/// k disjoint subsets partitioning {0..n-1} plus `noise` random overlapping
/// subsets, in shuffled order. Requires 1 <= k <= n.
PlantedInstance gen_planted(std::size_t n, std::size_t k, std::size_t noise, std::uint64_t seed);

}  // namespace wmesc
