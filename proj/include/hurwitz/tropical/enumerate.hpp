#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hurwitz/query.hpp"
#include "hurwitz/tropical/coloring.hpp"
#include "hurwitz/tropical/monodromy_graph.hpp"

namespace hurwitz {

namespace detail {

inline constexpr int kOpen = -2;

/// One edge of a partially swept graph. Open edges have to == kOpen. A
/// `pair` record stands for two bold in-ends of equal weight that must be
/// joined at the same vertex (a balanced in-fork); it is split into two
/// edges when consumed.
struct SweepEdge {
  int from = kLeaf;
  int to = kOpen;
  int weight = 0;
  EdgeColor color = EdgeColor::normal;
  bool pair = false;

  friend bool operator==(const SweepEdge&, const SweepEdge&) = default;
  friend auto operator<=>(const SweepEdge&, const SweepEdge&) = default;
};

using SweepState = std::vector<SweepEdge>;

inline int open_edge_count(const SweepState& s) {
  int n = 0;
  for (const auto& e : s)
    if (e.to == kOpen) n += e.pair ? 2 : 1;
  return n;
}

/// Every real coloring of the in-ends, up to permuting equal ends.
inline std::vector<SweepState> initial_states(const Partition& mu) {
  std::map<int, int> multiplicity;
  for (int p : mu.parts()) ++multiplicity[p];
  std::vector<SweepState> states{SweepState{}};
  for (const auto& [w, count] : multiplicity) {
    std::vector<SweepState> next;
    for (const auto& base : states) {
      for (int pairs = 0; 2 * pairs <= count; ++pairs) {
        const int single = count - 2 * pairs;
        const int max_dashed = (w % 2 == 0) ? single : 0;
        for (int dashed = 0; dashed <= max_dashed; ++dashed) {
          SweepState s = base;
          for (int i = 0; i < pairs; ++i) s.push_back({kLeaf, kOpen, w, EdgeColor::bold, true});
          for (int i = 0; i < dashed; ++i) s.push_back({kLeaf, kOpen, w, EdgeColor::dashed, false});
          for (int i = 0; i < single - dashed; ++i) s.push_back({kLeaf, kOpen, w, EdgeColor::normal, false});
          std::sort(s.begin(), s.end());
          next.push_back(std::move(s));
        }
      }
    }
    states = std::move(next);
  }
  return states;
}

/// Successors obtained by placing vertex v as a cut or a join with an
/// admissible color picture.
inline void sweep_successors(const SweepState& state, int v, std::set<SweepState>& out) {
  auto emit = [&](SweepState s) {
    std::sort(s.begin(), s.end());
    out.insert(std::move(s));
  };
  const std::size_t n = state.size();
  for (std::size_t i = 0; i < n; ++i) {
    const SweepEdge& e = state[i];
    if (e.to != kOpen) continue;
    if (i > 0 && state[i - 1] == e) continue;  // identical open edges give isomorphic results

    if (e.pair) {
      SweepState s = state;
      s[i] = {kLeaf, v, e.weight, EdgeColor::bold, false};
      s.push_back({kLeaf, v, e.weight, EdgeColor::bold, false});
      s.push_back({v, kOpen, 2 * e.weight, EdgeColor::normal, false});
      emit(std::move(s));
      continue;
    }

    // Cuts.
    if (e.color != EdgeColor::bold) {
      auto cut = [&](int a, int b, EdgeColor ca, EdgeColor cb) {
        SweepState s = state;
        s[i].to = v;
        s.push_back({v, kOpen, a, ca, false});
        s.push_back({v, kOpen, b, cb, false});
        emit(std::move(s));
      };
      const int w = e.weight;
      if (e.color == EdgeColor::normal && w % 2 == 0) {
        cut(w / 2, w / 2, EdgeColor::bold, EdgeColor::bold);
        for (int a = 2; a <= w / 2; a += 2) cut(a, w - a, EdgeColor::normal, EdgeColor::normal);
      } else if (e.color == EdgeColor::dashed) {
        for (int a = 1; a <= w / 2; a += 2) cut(a, w - a, EdgeColor::normal, EdgeColor::normal);
      } else if (e.color == EdgeColor::normal) {
        for (int a = 1; a <= w / 2; ++a) cut(a, w - a, EdgeColor::normal, EdgeColor::normal);
      }
    }

    // Joins with a later open edge.
    for (std::size_t j = i + 1; j < n; ++j) {
      const SweepEdge& f = state[j];
      if (f.to != kOpen || f.pair) continue;
      if (j > i + 1 && state[j - 1] == f) continue;
      EdgeColor joined;
      if (e.color == EdgeColor::bold || f.color == EdgeColor::bold) {
        // Only the two halves of one bold pair may be joined.
        if (e.color != f.color || e.from == kLeaf || e.from != f.from || e.weight != f.weight) continue;
        joined = EdgeColor::normal;
      } else if (e.color == EdgeColor::dashed || f.color == EdgeColor::dashed) {
        continue;
      } else if (e.weight % 2 == 1 && f.weight % 2 == 1) {
        joined = EdgeColor::dashed;
      } else {
        joined = EdgeColor::normal;
      }
      SweepState s = state;
      s[i].to = v;
      s[j].to = v;
      s.push_back({v, kOpen, e.weight + f.weight, joined, false});
      emit(std::move(s));
    }
  }
}

inline std::optional<MonodromyGraph> finish_sweep(const SweepState& state, int vertex_count, const Partition& nu) {
  std::vector<GraphEdge> edges;
  std::vector<int> out_weights;
  UnionFind uf(vertex_count);
  for (const auto& e : state) {
    if (e.pair) return std::nullopt;
    if (e.to == kOpen) {
      if (e.from == kLeaf) return std::nullopt;
      out_weights.push_back(e.weight);
      edges.push_back({e.from, kLeaf, e.weight, e.color});
    } else {
      if (e.from != kLeaf) uf.unite(e.from, e.to);
      edges.push_back({e.from, e.to, e.weight, e.color});
    }
  }
  if (uf.components() != 1) return std::nullopt;
  if (Partition(std::move(out_weights)) != nu) return std::nullopt;
  return MonodromyGraph(vertex_count, std::move(edges));
}

}  // namespace detail

/// Every vertex-ordered real monodromy graph for (g, μ, ν), each exactly
/// once up to isomorphism, sorted. Built by sweeping from the in-ends and
/// placing one cut or join per branch point.
inline std::vector<MonodromyGraph> enumerate_ordered_graphs(const HurwitzQuery& q) {
  q.validate();
  const int r = q.branch_points();
  const int target = q.nu.length();
  std::set<detail::SweepState> layer;
  for (auto& s : detail::initial_states(q.mu)) layer.insert(std::move(s));
  for (int v = 0; v < r; ++v) {
    std::set<detail::SweepState> next;
    for (const auto& s : layer) detail::sweep_successors(s, v, next);
    const int remaining = r - v - 1;
    layer.clear();
    for (auto& s : next)
      if (std::abs(detail::open_edge_count(s) - target) <= remaining) layer.insert(s);
  }
  std::vector<MonodromyGraph> graphs;
  for (const auto& s : layer)
    if (auto g = detail::finish_sweep(s, r, q.nu)) graphs.push_back(std::move(*g));
  std::sort(graphs.begin(), graphs.end());
  return graphs;
}

/// Equivalence classes of real monodromy graphs (vertex order forgotten),
/// each with its ordering count o(Γ), sorted by canonical form.
inline std::vector<GraphClass> enumerate_graphs(const HurwitzQuery& q) {
  std::map<MonodromyGraph, GraphClass> classes;
  std::map<MonodromyGraph, BigInt> members;
  for (const auto& g : enumerate_ordered_graphs(q)) {
    GraphClass c = classify(g);
    ++members[c.canonical];
    classes.emplace(c.canonical, std::move(c));
  }
  std::vector<GraphClass> out;
  for (auto& [canonical, c] : classes) {
    if (members[canonical] != c.orderings) throw std::logic_error("ordering count disagrees with enumerated orderings");
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace hurwitz
