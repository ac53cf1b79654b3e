#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/dyadic.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/poset.hpp"

namespace hurwitz {

/// Labeled end weights; index i of `mu` is in-end i, index j of `nu` is
/// out-end ℓ(μ)+j. Order matters here, unlike Partition.
using Entries = std::vector<int>;

/// Bitmask over the n ends.
using LeafSet = std::uint32_t;

/// 3-valent tree with n labeled ends. Nodes 0..n-1 are the ends (in-ends
/// first), nodes n..2n-3 the inner vertices.
struct LabeledTree {
  int ends = 0;
  int in_ends = 0;
  std::vector<std::pair<int, int>> edges;

  int inner_count() const { return ends - 2; }
  bool is_leaf(int node) const { return node < ends; }
  bool is_internal(std::size_t e) const { return !is_leaf(edges[e].first) && !is_leaf(edges[e].second); }

  std::vector<std::size_t> internal_edges() const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (is_internal(e)) out.push_back(e);
    return out;
  }

  /// Ends on the side of edge e that contains `node` (one of its endpoints).
  LeafSet side(std::size_t e, int node) const {
    const int nodes = 2 * ends - 2;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (k == e) continue;
      adj[static_cast<std::size_t>(edges[k].first)].push_back(edges[k].second);
      adj[static_cast<std::size_t>(edges[k].second)].push_back(edges[k].first);
    }
    std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
    std::vector<int> stack{node};
    seen[static_cast<std::size_t>(node)] = true;
    LeafSet mask = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (is_leaf(x)) mask |= LeafSet{1} << x;
      for (int y : adj[static_cast<std::size_t>(x)])
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
    }
    return mask;
  }

  /// The side of e containing end 0 (the first in-end).
  LeafSet split(std::size_t e) const {
    const LeafSet s = side(e, edges[e].first);
    return (s & 1u) ? s : (full_set() & ~s);
  }

  LeafSet full_set() const { return ends >= 32 ? ~LeafSet{0} : ((LeafSet{1} << ends) - 1); }
};

/// All (2n-5)!! trees with n labeled ends, by inserting end k on every edge
/// of each tree on ends 0..k-1.
inline std::vector<LabeledTree> all_trees(int l_mu, int l_nu, int max_ends = 7) {
  const int n = l_mu + l_nu;
  if (l_mu < 1 || l_nu < 1 || n < 3) throw InvalidArgument("trees need at least one in-end, one out-end and three ends");
  if (n > max_ends || n > 12) {
    BigInt count = 1;
    for (int k = 2 * n - 5; k > 1; k -= 2) count *= k;
    throw InfeasibleQuery("tree enumeration is capped at " + std::to_string(max_ends) + " ends", count);
  }
  // Inner vertices are renumbered at the end; while growing, inner vertex
  // k is stored as node 100 + k.
  constexpr int kInner = 100;
  std::vector<std::vector<std::pair<int, int>>> trees{{{0, kInner}, {1, kInner}, {2, kInner}}};
  for (int leaf = 3; leaf < n; ++leaf) {
    std::vector<std::vector<std::pair<int, int>>> next;
    const int w = kInner + leaf - 2;
    for (const auto& t : trees) {
      for (std::size_t e = 0; e < t.size(); ++e) {
        auto grown = t;
        const auto [u, v] = t[e];
        grown[e] = {u, w};
        grown.emplace_back(w, v);
        grown.emplace_back(leaf, w);
        next.push_back(std::move(grown));
      }
    }
    trees = std::move(next);
  }
  std::vector<LabeledTree> out;
  for (auto& t : trees) {
    for (auto& [u, v] : t) {
      if (u >= kInner) u = u - kInner + n;
      if (v >= kInner) v = v - kInner + n;
    }
    out.push_back(LabeledTree{n, l_mu, std::move(t)});
  }
  return out;
}

inline void check_entries(const Entries& mu, const Entries& nu) {
  if (mu.empty() || nu.empty()) throw InvalidArgument("μ and ν must be non-empty");
  long long sum = 0;
  for (int m : mu) {
    if (m <= 0) throw InvalidArgument("entries must be positive");
    sum += m;
  }
  for (int v : nu) {
    if (v <= 0) throw InvalidArgument("entries must be positive");
    sum -= v;
  }
  if (sum != 0) throw InvalidArgument("|μ| must equal |ν|");
}

/// Σ_{i∈I} μᵢ − Σ_{j∈J} νⱼ over the ends in `set`.
inline long long signed_sum(LeafSet set, const Entries& mu, const Entries& nu) {
  long long s = 0;
  const int l_mu = static_cast<int>(mu.size());
  for (int i = 0; i < l_mu; ++i)
    if (set & (LeafSet{1} << i)) s += mu[static_cast<std::size_t>(i)];
  for (std::size_t j = 0; j < nu.size(); ++j)
    if (set & (LeafSet{1} << (l_mu + static_cast<int>(j)))) s -= nu[j];
  return s;
}

/// ω(e), measured from the side containing the first in-end; positive
/// means e points away from that side.
inline long long edge_weight(const LabeledTree& t, std::size_t e, const Entries& mu, const Entries& nu) {
  if (e >= t.edges.size()) throw InvalidArgument("edge index out of range");
  if (!t.is_internal(e)) throw InvalidArgument("edge_weight is defined on internal edges, not ends");
  if (static_cast<int>(mu.size()) != t.in_ends || static_cast<int>(mu.size() + nu.size()) != t.ends)
    throw InvalidArgument("entry counts do not match the tree's ends");
  return signed_sum(t.split(e), mu, nu);
}

/// Result of orienting a tree: p(T) and, when p = 1, the directed internal
/// edges between inner vertices (numbered 0..n-3).
struct TreeOrientation {
  int p = 0;
  std::vector<std::pair<int, int>> arcs;
  /// (in-degree, out-degree) of each inner vertex, ends included.
  std::vector<std::pair<int, int>> degrees;
};

/// Orients ends by type and internal edges by the sign of ω.
inline TreeOrientation orient_tree(const LabeledTree& t, const Entries& mu, const Entries& nu) {
  check_entries(mu, nu);
  const int n = t.ends;
  TreeOrientation o;
  o.degrees.assign(static_cast<std::size_t>(t.inner_count()), {0, 0});
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    auto [u, v] = t.edges[e];
    if (t.is_leaf(u) || t.is_leaf(v)) {
      const int leaf = t.is_leaf(u) ? u : v;
      const int inner = (t.is_leaf(u) ? v : u) - n;
      auto& deg = o.degrees[static_cast<std::size_t>(inner)];
      (leaf < t.in_ends ? deg.first : deg.second) += 1;
      continue;
    }
    const long long w = edge_weight(t, e, mu, nu);
    if (w == 0) throw OnWallError("internal edge has weight 0: the point lies on a wall");
    // u's side contains end 0 iff split(e) is the side of u.
    const bool u_has_first = (t.side(e, u) & 1u) != 0;
    int from = u_has_first ? u : v;
    int to = u_has_first ? v : u;
    if (w < 0) std::swap(from, to);
    o.arcs.emplace_back(from - n, to - n);
    o.degrees[static_cast<std::size_t>(from - n)].second += 1;
    o.degrees[static_cast<std::size_t>(to - n)].first += 1;
  }
  o.p = 1;
  for (auto [in, out] : o.degrees)
    if (in == 0 || out == 0) o.p = 0;
  if (o.p == 0) o.arcs.clear();
  return o;
}

/// o(T): vertex orders compatible with the orientation.
inline BigInt tree_orderings(const LabeledTree& t, const TreeOrientation& o) {
  if (o.p != 1) throw InvalidArgument("tree has no admissible orientation");
  return linear_extension_count(Poset{t.inner_count(), o.arcs});
}

inline int pari(long long w) { return (w % 2 == 0) ? 2 : 1; }

/// 2^{-B}·Π pari(ω(e)) over internal edges; B counts balanced forks.
inline Dyadic tree_multiplicity(const LabeledTree& t, const TreeOrientation& o, const Entries& mu, const Entries& nu) {
  if (o.p != 1) throw InvalidArgument("tree_multiplicity needs an oriented tree (p = 1)");
  const int n = t.ends;
  BigInt product = 1;
  for (auto e : t.internal_edges()) product *= pari(edge_weight(t, e, mu, nu));
  // Ends grouped by inner vertex and direction.
  std::vector<std::vector<int>> in_weights(static_cast<std::size_t>(t.inner_count()));
  std::vector<std::vector<int>> out_weights(static_cast<std::size_t>(t.inner_count()));
  for (auto [u, v] : t.edges) {
    if (!t.is_leaf(u) && !t.is_leaf(v)) continue;
    const int leaf = t.is_leaf(u) ? u : v;
    const auto inner = static_cast<std::size_t>((t.is_leaf(u) ? v : u) - n);
    if (leaf < t.in_ends)
      in_weights[inner].push_back(mu[static_cast<std::size_t>(leaf)]);
    else
      out_weights[inner].push_back(nu[static_cast<std::size_t>(leaf - t.in_ends)]);
  }
  int forks = 0;
  for (std::size_t x = 0; x < in_weights.size(); ++x) {
    if (in_weights[x].size() == 2 && in_weights[x][0] == in_weights[x][1]) ++forks;
    if (out_weights[x].size() == 2 && out_weights[x][0] == out_weights[x][1]) ++forks;
  }
  return Dyadic(product) * Dyadic::pow2(-forks);
}

struct FOptions {
  /// Allow ℓ(μ), ℓ(ν) ≤ 2, where F is only an upper bound for H₀.
  bool acknowledge_bound_only = false;
};

/// F(μ,ν) = 2^{n-3} Σ_T p(T)·o(T) over all trees with n labeled ends.
inline Dyadic F_value(const Entries& mu, const Entries& nu, const FOptions& options = {}) {
  check_entries(mu, nu);
  if (mu.size() < 3 && nu.size() < 3 && !options.acknowledge_bound_only)
    throw InvalidArgument("F needs a partition with at least three parts unless the bound-only regime is acknowledged");
  const int l_mu = static_cast<int>(mu.size());
  const int l_nu = static_cast<int>(nu.size());
  BigInt total = 0;
  for (const auto& t : all_trees(l_mu, l_nu)) {
    const auto o = orient_tree(t, mu, nu);
    if (o.p == 1) total += tree_orderings(t, o);
  }
  return Dyadic(total) * Dyadic::pow2(l_mu + l_nu - 3);
}

}  // namespace hurwitz
