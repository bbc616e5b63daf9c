#include "wmesc/intersection_graph.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

namespace wmesc {

SubProblem SubProblem::all(std::size_t m) {
  boost::dynamic_bitset<> alive(m);
  alive.set();
  return SubProblem(std::move(alive));
}

SubProblem SubProblem::of(std::size_t m, std::span<const SubsetIndex> members) {
  boost::dynamic_bitset<> alive(m);
  for (SubsetIndex i : members) alive.set(i);
  return SubProblem(std::move(alive));
}

void SubProblem::erase(std::span<const SubsetIndex> indices) {
  for (SubsetIndex i : indices) alive_.reset(i);
}

std::vector<SubsetIndex> SubProblem::members() const {
  std::vector<SubsetIndex> out;
  out.reserve(size());
  for_each([&](SubsetIndex i) { out.push_back(i); });
  return out;
}

IntersectionGraph::IntersectionGraph(std::vector<std::vector<SubsetIndex>> adjacency)
    : adjacency_(std::move(adjacency)) {}

std::size_t IntersectionGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency_) twice += nbrs.size();
  return twice / 2;
}

std::size_t IntersectionGraph::degree(SubsetIndex v, const SubProblem& sub) const {
  std::size_t d = 0;
  for (SubsetIndex u : adjacency_.at(v)) d += sub.contains(u) ? 1 : 0;
  return d;
}

IntersectionGraph build_graph(const Instance& inst) {
  std::vector<std::vector<SubsetIndex>> holders(inst.n());
  for (SubsetIndex i = 0; i < inst.m(); ++i) {
    for (Element e : inst.subset(i)) holders[e].push_back(i);
  }
  std::vector<std::vector<SubsetIndex>> adjacency(inst.m());
  for (const auto& list : holders) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        adjacency[list[a]].push_back(list[b]);
        adjacency[list[b]].push_back(list[a]);
      }
    }
  }
  for (auto& nbrs : adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return IntersectionGraph(std::move(adjacency));
}

std::vector<std::vector<SubsetIndex>> components(const IntersectionGraph& g, const SubProblem& sub) {
  std::vector<std::vector<SubsetIndex>> out;
  boost::dynamic_bitset<> seen(g.m());
  std::vector<SubsetIndex> stack;
  sub.for_each([&](SubsetIndex root) {
    if (seen.test(root)) return;
    std::vector<SubsetIndex> comp;
    seen.set(root);
    stack.push_back(root);
    while (!stack.empty()) {
      SubsetIndex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (SubsetIndex u : g.neighbors(v)) {
        if (sub.contains(u) && !seen.test(u)) {
          seen.set(u);
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  });
  return out;
}

std::vector<SubsetIndex> neighbor_closure(const IntersectionGraph& g, const SubProblem& sub, SubsetIndex x) {
  if (!sub.contains(x)) throw PreconditionError("neighbor_closure: node " + std::to_string(x) + " is not alive");
  std::vector<SubsetIndex> out{x};
  for (SubsetIndex u : g.neighbors(x)) {
    if (sub.contains(u)) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<SubsetIndex, std::size_t> max_degree_node(const IntersectionGraph& g, const SubProblem& sub) {
  if (sub.empty()) throw PreconditionError("max_degree_node: no alive nodes");
  std::pair<SubsetIndex, std::size_t> best{0, 0};
  bool first = true;
  sub.for_each([&](SubsetIndex v) {
    std::size_t d = g.degree(v, sub);
    if (first || d > best.second) best = {v, d};
    first = false;
  });
  return best;
}

SubsetIndex select_pivot_deg3(const IntersectionGraph& g, const SubProblem& sub,
                              std::span<const SubsetIndex> component) {
  if (component.empty()) throw PreconditionError("select_pivot_deg3: empty component");
  std::vector<std::size_t> deg(component.size());
  std::size_t dmin = std::numeric_limits<std::size_t>::max();
  std::size_t dmax = 0;
  for (std::size_t i = 0; i < component.size(); ++i) {
    deg[i] = g.degree(component[i], sub);
    dmin = std::min(dmin, deg[i]);
    dmax = std::max(dmax, deg[i]);
  }
  if (dmax != 3) {
    throw PreconditionError("select_pivot_deg3: component maximum degree is " + std::to_string(dmax) + ", not 3");
  }
  // Components arrive sorted, but the rule is defined on indices, not positions.
  std::vector<std::size_t> order(component.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return component[a] < component[b]; });

  if (dmin == 3) return component[order.front()];

  // The degree-3 node whose lowest-degree neighbour is lowest, ties to the
  // smaller index. When some degree-3 node touches a degree-dmin node this is
  // exactly that rule; otherwise (e.g. 3 - 2 - 1 chains) it still picks a
  // degree-3 node next to a node of degree < 3, which connectivity guarantees.
  std::optional<SubsetIndex> best;
  std::size_t best_nd = std::numeric_limits<std::size_t>::max();
  for (std::size_t i : order) {
    if (deg[i] != 3) continue;
    std::size_t nd = std::numeric_limits<std::size_t>::max();
    for (SubsetIndex u : g.neighbors(component[i])) {
      if (sub.contains(u)) nd = std::min(nd, g.degree(u, sub));
    }
    if (nd < best_nd) {
      best_nd = nd;
      best = component[i];
    }
    if (best_nd == dmin) break;
  }
  return *best;
}

SubsetIndex select_pivot_deg2(const IntersectionGraph& g, const SubProblem& sub,
                              std::span<const SubsetIndex> component) {
  if (component.size() < 2) throw PreconditionError("select_pivot_deg2: component needs at least two nodes");
  std::optional<SubsetIndex> start;
  SubsetIndex smallest = component.front();
  for (SubsetIndex v : component) {
    std::size_t d = g.degree(v, sub);
    if (d > 2) throw PreconditionError("select_pivot_deg2: node " + std::to_string(v) + " has degree " +
                                       std::to_string(d));
    if (d == 0) throw PreconditionError("select_pivot_deg2: component is not connected");
    smallest = std::min(smallest, v);
    if (d == 1 && (!start || v < *start)) start = v;
  }
  if (!start) return smallest;  // ring

  std::vector<SubsetIndex> path{*start};
  SubsetIndex prev = *start;
  SubsetIndex cur = *start;
  while (true) {
    std::optional<SubsetIndex> next;
    for (SubsetIndex u : g.neighbors(cur)) {
      if (sub.contains(u) && u != prev) next = u;
    }
    if (!next) break;
    prev = cur;
    cur = *next;
    path.push_back(cur);
  }
  if (path.size() != component.size()) throw PreconditionError("select_pivot_deg2: component is not a simple path");
  return path[(path.size() - 1) / 2];
}

}  // namespace wmesc
