#pragma once

#include <cstddef>

#include "wmesc/instance.hpp"
#include "wmesc/packing.hpp"

namespace wmesc {

inline constexpr std::size_t kBruteForceMaxSubsets = 25;
inline constexpr std::size_t kBruteForceMaxTriples = 20;

/// Exhaustive reference: tries all 2^m selections in ascending bitmask order
/// and keeps the first one not beaten under `better(., ., 0)`. Throws
/// std::invalid_argument when m exceeds kBruteForceMaxSubsets.
Solution brute_force(const Instance& inst);

/// Size of a maximum pairwise-disjoint subfamily of triples. Throws
/// std::invalid_argument above kBruteForceMaxTriples.
std::size_t brute_force_packing(const PackingInstance& p);

}  // namespace wmesc
