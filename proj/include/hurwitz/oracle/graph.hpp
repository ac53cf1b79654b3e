#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "hurwitz/oracle/tuples.hpp"
#include "hurwitz/tropical/monodromy_graph.hpp"

namespace hurwitz {

/// Color of the edge for a cycle of ρ under γ: bold when γ moves the cycle
/// to another one, dashed when the cycle is even and contains fixed points
/// of γ, normal otherwise.
inline EdgeColor cycle_color(const Permutation& gamma, const std::vector<int>& cycle, const std::vector<int>& cycle_of) {
  const int first = cycle.front();
  if (cycle_of[static_cast<std::size_t>(gamma(first))] != cycle_of[static_cast<std::size_t>(first)]) return EdgeColor::bold;
  if (cycle.size() % 2 == 0)
    for (int x : cycle)
      if (gamma(x) == x) return EdgeColor::dashed;
  return EdgeColor::normal;
}

/// Colored monodromy graph of a tuple; vertex i is the cut or join made by
/// τᵢ₊₁, so the numbering is the vertex order.
inline MonodromyGraph monodromy_graph_of_tuple(const MonodromyTuple& t) {
  const int d = t.degree();
  struct Open {
    int from;
    int weight;
    EdgeColor color;
  };
  std::vector<GraphEdge> edges;
  std::vector<Open> open;               // indexed by edge slot
  std::vector<int> slot_of(static_cast<std::size_t>(d));  // point -> open slot

  auto open_cycles = [&](const Permutation& rho, int from, const std::vector<int>& only_points) {
    const auto cycles = rho.cycles();
    std::vector<int> cycle_of(static_cast<std::size_t>(d));
    for (std::size_t c = 0; c < cycles.size(); ++c)
      for (int x : cycles[c]) cycle_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
    for (const auto& cycle : cycles) {
      const bool touched = std::any_of(cycle.begin(), cycle.end(), [&](int x) {
        return std::find(only_points.begin(), only_points.end(), x) != only_points.end();
      });
      if (!only_points.empty() && !touched)
        continue;
      const int slot = static_cast<int>(open.size());
      open.push_back({from, static_cast<int>(cycle.size()), cycle_color(t.gamma, cycle, cycle_of)});
      for (int x : cycle) slot_of[static_cast<std::size_t>(x)] = slot;
    }
  };
  auto close = [&](int slot, int to) {
    const auto& o = open[static_cast<std::size_t>(slot)];
    edges.push_back({o.from, to, o.weight, o.color});
    open[static_cast<std::size_t>(slot)].weight = 0;
  };

  open_cycles(t.partials.front(), kLeaf, {});
  for (int v = 0; v < t.length(); ++v) {
    const auto& tau = t.taus[static_cast<std::size_t>(v)];
    int a = -1;
    int b = -1;
    for (int x = 0; x < d; ++x)
      if (tau(x) != x) (a < 0 ? a : b) = x;
    const int sa = slot_of[static_cast<std::size_t>(a)];
    const int sb = slot_of[static_cast<std::size_t>(b)];
    close(sa, v);
    if (sb != sa) close(sb, v);
    open_cycles(t.partials[static_cast<std::size_t>(v + 1)], v, {a, b});
  }
  for (const auto& o : open)
    if (o.weight > 0) edges.push_back({o.from, kLeaf, o.weight, o.color});
  return MonodromyGraph(t.length(), std::move(edges));
}

/// Number of tuples (with structure) yielding each vertex-ordered graph.
inline std::map<MonodromyGraph, BigInt> tuple_counts_by_graph(HurwitzQuery q, const OracleConfig& config = {}) {
  q.with_structure = true;
  std::map<MonodromyGraph, BigInt> counts;
  enumerate_tuples(q, [&](const MonodromyTuple& t) { ++counts[monodromy_graph_of_tuple(t)]; }, config);
  return counts;
}

/// Tuples yielding the vertex-ordered graph g.
inline BigInt tuple_count_for_graph(const MonodromyGraph& g, const HurwitzQuery& q, const OracleConfig& config = {}) {
  if (g.in_weights() != q.mu || g.out_weights() != q.nu || g.vertex_count() != q.branch_points())
    throw InvalidArgument("graph does not match the query");
  const auto counts = tuple_counts_by_graph(q, config);
  const auto it = counts.find(g);
  return it == counts.end() ? BigInt(0) : it->second;
}

}  // namespace hurwitz
