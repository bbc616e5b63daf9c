#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "wmesc/instance.hpp"

namespace wmesc {

/// Subset indices still in play during the search. Degrees, closures and
/// components are always taken relative to this mask.
class SubProblem {
 public:
  SubProblem() = default;
  /// Every index in [0, m) alive.
  static SubProblem all(std::size_t m);
  static SubProblem of(std::size_t m, std::span<const SubsetIndex> members);

  bool contains(SubsetIndex i) const { return i < alive_.size() && alive_.test(i); }
  void erase(SubsetIndex i) { alive_.reset(i); }
  void erase(std::span<const SubsetIndex> indices);

  bool empty() const { return alive_.none(); }
  std::size_t size() const { return alive_.count(); }
  std::size_t universe() const { return alive_.size(); }

  /// Alive indices in increasing order.
  std::vector<SubsetIndex> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (auto i = alive_.find_first(); i != boost::dynamic_bitset<>::npos; i = alive_.find_next(i)) {
      f(static_cast<SubsetIndex>(i));
    }
  }

  friend bool operator==(const SubProblem&, const SubProblem&) = default;

 private:
  explicit SubProblem(boost::dynamic_bitset<> alive) : alive_(std::move(alive)) {}
  boost::dynamic_bitset<> alive_;
};

/// One node per subset, an edge whenever two subsets share an element.
class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  explicit IntersectionGraph(std::vector<std::vector<SubsetIndex>> adjacency);

  std::size_t m() const noexcept { return adjacency_.size(); }
  std::span<const SubsetIndex> neighbors(SubsetIndex v) const { return adjacency_.at(v); }
  std::size_t edge_count() const noexcept;

  /// Number of alive neighbours of `v`.
  std::size_t degree(SubsetIndex v, const SubProblem& sub) const;

  friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;

 private:
  std::vector<std::vector<SubsetIndex>> adjacency_;  // sorted, symmetric, loop-free
};

/// Builds the graph through an element -> subsets inverted index, so the cost
/// tracks total subset size plus edge count.
IntersectionGraph build_graph(const Instance& inst);

/// Connected components of the alive-induced subgraph. Each component is
/// sorted; components are ordered by their smallest index.
std::vector<std::vector<SubsetIndex>> components(const IntersectionGraph& g, const SubProblem& sub);

/// `x` plus its alive neighbours, sorted. Throws PreconditionError if `x` is not alive.
std::vector<SubsetIndex> neighbor_closure(const IntersectionGraph& g, const SubProblem& sub, SubsetIndex x);

/// Smallest alive index of maximum alive degree, with that degree.
std::pair<SubsetIndex, std::size_t> max_degree_node(const IntersectionGraph& g, const SubProblem& sub);

/// Pivot for a component whose maximum alive degree is exactly 3: the
/// smallest-index degree-3 node adjacent to a node of minimum degree, or the
/// smallest index when every node has degree 3. If no degree-3 node touches
/// a minimum-degree node, takes the degree-3 node whose lowest neighbour
/// degree is smallest (ties to the smaller index).
SubsetIndex select_pivot_deg3(const IntersectionGraph& g, const SubProblem& sub,
                              std::span<const SubsetIndex> component);

/// Pivot for a path or ring component (max degree <= 2, at least two nodes).
/// Paths yield the lower median walking from the smaller endpoint; rings
/// yield their smallest index.
SubsetIndex select_pivot_deg2(const IntersectionGraph& g, const SubProblem& sub,
                              std::span<const SubsetIndex> component);

}  // namespace wmesc
