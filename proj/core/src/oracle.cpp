#include "wmesc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wmesc {

namespace {

bool intersects(std::span<const Element> a, std::span<const Element> b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

Solution brute_force(const Instance& inst) {
  const std::size_t m = inst.m();
  if (m > kBruteForceMaxSubsets) {
    throw std::invalid_argument("brute force limited to " + std::to_string(kBruteForceMaxSubsets) + " subsets, got " +
                                std::to_string(m));
  }
  std::vector<std::uint32_t> clash(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (intersects(inst.subset(i), inst.subset(j))) {
        clash[i] |= std::uint32_t{1} << j;
        clash[j] |= std::uint32_t{1} << i;
      }
    }
  }

  Solution best;
  std::uint32_t best_mask = 0;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t raw = 1; raw < limit; ++raw) {
    auto mask = static_cast<std::uint32_t>(raw);
    bool ok = true;
    Solution cand;
    for (std::uint32_t rest = mask; rest != 0 && ok; rest &= rest - 1) {
      auto i = static_cast<std::size_t>(std::countr_zero(rest));
      if (clash[i] & mask) ok = false;
      cand.covered += inst.subset(i).size();
      cand.weight += inst.weight(i);
    }
    if (ok && better(cand, best, 0.0)) {
      best = cand;
      best_mask = mask;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (best_mask & (std::uint32_t{1} << i)) best.chosen.push_back(static_cast<SubsetIndex>(i));
  }
  return best;
}

std::size_t brute_force_packing(const PackingInstance& p) {
  const std::size_t k = p.size();
  if (k > kBruteForceMaxTriples) {
    throw std::invalid_argument("packing brute force limited to " + std::to_string(kBruteForceMaxTriples) +
                                " triples, got " + std::to_string(k));
  }
  const auto& triples = p.triples();
  std::vector<std::uint32_t> clash(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      bool shared = false;
      for (const auto& a : triples[i]) {
        for (const auto& b : triples[j]) shared = shared || a == b;
      }
      if (shared) {
        clash[i] |= std::uint32_t{1} << j;
        clash[j] |= std::uint32_t{1} << i;
      }
    }
  }
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    bool ok = true;
    for (std::uint32_t rest = mask; rest != 0 && ok; rest &= rest - 1) {
      ok = (clash[static_cast<std::size_t>(std::countr_zero(rest))] & mask) == 0;
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

}  // namespace wmesc
