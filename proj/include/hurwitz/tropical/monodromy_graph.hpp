#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/poset.hpp"
#include "hurwitz/symgrp/partition.hpp"

namespace hurwitz {

enum class EdgeColor : std::uint8_t { normal = 0, dashed = 1, bold = 2 };

inline const char* color_name(EdgeColor c) {
  switch (c) {
    case EdgeColor::normal: return "normal";
    case EdgeColor::dashed: return "dashed";
    case EdgeColor::bold: return "bold";
  }
  return "?";
}

/// Marks the leaf side of an end: from == kLeaf is an in-end, to == kLeaf an
/// out-end.
inline constexpr int kLeaf = -1;

struct GraphEdge {
  int from = kLeaf;
  int to = kLeaf;
  int weight = 0;
  EdgeColor color = EdgeColor::normal;

  bool is_in_end() const { return from == kLeaf; }
  bool is_out_end() const { return to == kLeaf; }
  bool is_bounded() const { return from != kLeaf && to != kLeaf; }
  bool is_even() const { return weight % 2 == 0; }

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

/// The three edges at an inner vertex, split by direction.
struct VertexStar {
  std::vector<std::size_t> in;
  std::vector<std::size_t> out;
};

/// Directed, weighted, colored graph with 3-valent inner vertices and
/// unlabeled ends. Inner vertices are 0..r-1; when every bounded edge runs
/// from a lower to a higher index the numbering is a vertex ordering in the
/// monodromy-graph sense.
///
/// Edges are kept sorted, so two graphs with the same vertex numbering are
/// isomorphic (respecting that numbering) iff they compare equal.
class MonodromyGraph {
 public:
  MonodromyGraph() = default;

  MonodromyGraph(int vertex_count, std::vector<GraphEdge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
      if (e.weight <= 0) throw InvalidArgument("edge weights must be positive");
      if (e.from < kLeaf || e.from >= vertex_count_ || e.to < kLeaf || e.to >= vertex_count_)
        throw InvalidArgument("edge endpoint out of range");
      if (e.from == kLeaf && e.to == kLeaf) throw InvalidArgument("edge with two leaves");
    }
    std::sort(edges_.begin(), edges_.end());
  }

  int vertex_count() const { return vertex_count_; }
  std::span<const GraphEdge> edges() const { return edges_; }
  const GraphEdge& edge(std::size_t i) const { return edges_[i]; }

  Partition in_weights() const {
    std::vector<int> w;
    for (const auto& e : edges_)
      if (e.is_in_end()) w.push_back(e.weight);
    return Partition(std::move(w));
  }
  Partition out_weights() const {
    std::vector<int> w;
    for (const auto& e : edges_)
      if (e.is_out_end()) w.push_back(e.weight);
    return Partition(std::move(w));
  }
  int degree() const { return in_weights().size(); }

  int bounded_edge_count() const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const GraphEdge& e) { return e.is_bounded(); }));
  }
  /// First Betti number, assuming the graph is connected.
  int genus() const { return bounded_edge_count() - vertex_count_ + 1; }

  std::vector<VertexStar> stars() const {
    std::vector<VertexStar> s(static_cast<std::size_t>(vertex_count_));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      if (e.from != kLeaf) s[static_cast<std::size_t>(e.from)].out.push_back(i);
      if (e.to != kLeaf) s[static_cast<std::size_t>(e.to)].in.push_back(i);
    }
    return s;
  }

  /// Vertex partial order generated by the bounded edges.
  Poset vertex_poset() const {
    Poset p{vertex_count_, {}};
    for (const auto& e : edges_)
      if (e.is_bounded()) p.relations.emplace_back(e.from, e.to);
    return p;
  }

  bool vertices_in_order() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const GraphEdge& e) { return !e.is_bounded() || e.from < e.to; });
  }

  /// Renumbers vertex v as new_index[v].
  MonodromyGraph relabeled(std::span<const int> new_index) const {
    std::vector<GraphEdge> edges(edges_.begin(), edges_.end());
    for (auto& e : edges) {
      if (e.from != kLeaf) e.from = new_index[static_cast<std::size_t>(e.from)];
      if (e.to != kLeaf) e.to = new_index[static_cast<std::size_t>(e.to)];
    }
    return MonodromyGraph(vertex_count_, std::move(edges));
  }

  /// Same shape, every edge normal.
  MonodromyGraph uncolored() const {
    std::vector<GraphEdge> edges(edges_.begin(), edges_.end());
    for (auto& e : edges) e.color = EdgeColor::normal;
    return MonodromyGraph(vertex_count_, std::move(edges));
  }

  /// Same shape with colors[i] on edges()[i].
  MonodromyGraph recolored(std::span<const EdgeColor> colors) const {
    if (colors.size() != edges_.size()) throw InvalidArgument("color count mismatch");
    std::vector<GraphEdge> edges(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].color = colors[i];
    return MonodromyGraph(vertex_count_, std::move(edges));
  }

  /// Compact deterministic text, e.g. "r=1 [in->0 w2 dashed] [0->out w1 normal]".
  std::string to_string() const {
    std::string s = "r=" + std::to_string(vertex_count_);
    for (const auto& e : edges_) {
      s += " [";
      s += e.from == kLeaf ? "in" : std::to_string(e.from + 1);
      s += "->";
      s += e.to == kLeaf ? "out" : std::to_string(e.to + 1);
      s += " w" + std::to_string(e.weight) + " " + color_name(e.color) + "]";
    }
    return s;
  }

  friend bool operator==(const MonodromyGraph&, const MonodromyGraph&) = default;
  friend auto operator<=>(const MonodromyGraph&, const MonodromyGraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<GraphEdge> edges_;
};

/// Problems with the non-color invariants (empty when the shape is a valid
/// monodromy graph of some genus): connectivity, 3-valence, balancing,
/// acyclicity, no inner sink or source.
inline std::vector<std::string> structural_problems(const MonodromyGraph& g) {
  std::vector<std::string> problems;
  const int n = g.vertex_count();
  if (n == 0) problems.emplace_back("no inner vertices");
  const auto stars = g.stars();
  for (int v = 0; v < n; ++v) {
    const auto& s = stars[static_cast<std::size_t>(v)];
    const std::string where = "vertex " + std::to_string(v + 1);
    if (s.in.size() + s.out.size() != 3) problems.push_back(where + " is not 3-valent");
    if (s.in.empty() || s.out.empty()) problems.push_back(where + " is a sink or source");
    int in_sum = 0;
    int out_sum = 0;
    for (auto i : s.in) in_sum += g.edge(i).weight;
    for (auto i : s.out) out_sum += g.edge(i).weight;
    if (in_sum != out_sum) problems.push_back(where + " is not balanced");
  }
  UnionFind uf(std::max(n, 1));
  for (const auto& e : g.edges())
    if (e.is_bounded()) uf.unite(e.from, e.to);
  if (n > 0 && uf.components() != 1) problems.emplace_back("graph is disconnected");
  if (n > 0 && n <= 24 && linear_extension_count(g.vertex_poset()) == 0) problems.emplace_back("orientation has a directed cycle");
  return problems;
}

/// Unordered equivalence class of an ordered graph: the lexicographically
/// smallest renumbering over all linear extensions, plus how many distinct
/// ordered graphs the class contains.
struct GraphClass {
  MonodromyGraph canonical;
  /// o(Γ): distinct vertex-ordered graphs in the class.
  BigInt orderings = 0;
};

inline GraphClass classify(const MonodromyGraph& g) {
  const Poset poset = g.vertex_poset();
  std::vector<MonodromyGraph> ordered;
  std::vector<int> new_index(static_cast<std::size_t>(g.vertex_count()));
  for_each_linear_extension(poset, [&](const std::vector<int>& order) {
    for (std::size_t pos = 0; pos < order.size(); ++pos) new_index[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
    ordered.push_back(g.relabeled(new_index));
  });
  if (ordered.empty()) throw InvalidArgument("graph orientation has a directed cycle");
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  return GraphClass{ordered.front(), BigInt(ordered.size())};
}

}  // namespace hurwitz
