#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "hurwitz/dyadic.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/oracle/tuples.hpp"
#include "hurwitz/query.hpp"
#include "hurwitz/symgrp/enumerate.hpp"
#include "hurwitz/symgrp/matching.hpp"

namespace hurwitz {

/// Matchings one step away: cut a pair or join two free vertices.
inline std::vector<Matching> restricted_neighbors(const Matching& m) {
  std::vector<Matching> out;
  for (auto [a, b] : m.pairs()) {
    Matching n = m;
    n.remove_pair(a, b);
    out.push_back(std::move(n));
  }
  for (int a = 0; a < m.degree(); ++a) {
    if (!m.is_free(a)) continue;
    for (int b = a + 1; b < m.degree(); ++b) {
      if (!m.is_free(b)) continue;
      Matching n = m;
      n.add_pair(a, b);
      out.push_back(std::move(n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Neighbors read off the Cayley graph itself: τ∘m over all transpositions
/// τ, kept when the product is again an involution.
inline std::vector<Matching> cayley_involution_neighbors(const Matching& m) {
  const Permutation p = involution_of(m);
  std::vector<Matching> out;
  for (const auto& t : all_transpositions(m.degree())) {
    Permutation q = compose(t, p);
    if (q.is_involution()) out.push_back(matching_of(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The pair added or removed between adjacent matchings, as a transposition.
inline Permutation step_transposition(const Matching& from, const Matching& to) {
  for (int a = 0; a < from.degree(); ++a) {
    if (from.partner(a) == to.partner(a)) continue;
    const int b = from.is_free(a) ? to.partner(a) : from.partner(a);
    Matching toggled = from;
    if (from.is_free(a)) {
      if (!from.is_free(b)) break;
      toggled.add_pair(a, b);
    } else {
      toggled.remove_pair(a, b);
    }
    if (toggled != to) break;
    return Permutation::transposition(from.degree(), a, b);
  }
  throw InvalidArgument("matchings are not adjacent");
}

/// Induced subgraph of the transposition Cayley graph on the involutions of
/// S_d, stored densely over the sorted list of matchings.
class RestrictedCayleyGraph {
 public:
  explicit RestrictedCayleyGraph(int degree) : degree_(degree) {
    if (degree < 1) throw InvalidArgument("degree must be positive");
    for (const auto& p : all_involutions(degree)) vertices_.push_back(matching_of(p));
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
    adjacency_.resize(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      for (const auto& n : restricted_neighbors(vertices_[i])) adjacency_[i].push_back(index_.at(n));
  }

  int degree() const { return degree_; }
  std::size_t size() const { return vertices_.size(); }
  const Matching& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }

  std::size_t index(const Matching& m) const {
    const auto it = index_.find(m);
    if (it == index_.end()) throw InvalidArgument("matching has the wrong degree");
    return it->second;
  }

  /// walks[k][v]: walks of length k from v to `end`.
  std::vector<std::vector<BigInt>> walks_to(std::size_t end, int length) const {
    std::vector<std::vector<BigInt>> w(static_cast<std::size_t>(length) + 1, std::vector<BigInt>(size(), 0));
    w[0][end] = 1;
    for (int k = 1; k <= length; ++k)
      for (std::size_t v = 0; v < size(); ++v)
        for (auto u : adjacency_[v]) w[static_cast<std::size_t>(k)][v] += w[static_cast<std::size_t>(k - 1)][u];
    return w;
  }

  struct Shortest {
    int length = -1;
    BigInt count = 0;
  };

  /// Distances and numbers of shortest walks from `start` to every vertex.
  std::vector<Shortest> shortest_from(std::size_t start) const {
    std::vector<Shortest> out(size());
    out[start] = {0, 1};
    std::vector<std::size_t> layer{start};
    for (int dist = 1; !layer.empty(); ++dist) {
      std::vector<std::size_t> next;
      for (auto v : layer)
        for (auto u : adjacency_[v]) {
          if (out[u].length == -1) {
            out[u].length = dist;
            next.push_back(u);
          }
          if (out[u].length == dist) out[u].count += out[v].count;
        }
      layer = std::move(next);
    }
    return out;
  }

 private:
  int degree_;
  std::vector<Matching> vertices_;
  std::map<Matching, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

struct WalkQuery {
  Matching start;
  Matching end;
  int length = 0;
};

/// Length-r walks from start to end in the restricted Cayley graph.
inline BigInt count_walks(const WalkQuery& q) {
  if (q.start.degree() != q.end.degree()) throw InvalidArgument("matchings must have equal degree");
  if (q.length < 0) throw InvalidArgument("walk length must be non-negative");
  if (q.start.degree() > 10) throw InfeasibleQuery("walk counting is capped at degree 10", BigInt(0));
  const RestrictedCayleyGraph g(q.start.degree());
  return g.walks_to(g.index(q.end), q.length)[static_cast<std::size_t>(q.length)][g.index(q.start)];
}

/// Tuples with fixed (γ, σ₀ = σ, σᵣ = ρ) counted as walks from m(σ∘γ) to
/// m(ρ∘γ), optionally keeping only walks whose recovered transpositions
/// together with σ act transitively.
inline BigInt count_real_tuples_via_walks(const Permutation& gamma, const Permutation& sigma, const Permutation& rho, int r,
                                          bool require_transitive, const RestrictedCayleyGraph* graph = nullptr) {
  const int d = gamma.degree();
  if (sigma.degree() != d || rho.degree() != d) throw InvalidArgument("degree mismatch");
  if (!gamma.is_involution()) throw InvalidArgument("gamma must be an involution");
  const Permutation start_p = compose(sigma, gamma);
  const Permutation end_p = compose(rho, gamma);
  if (!start_p.is_involution() || !end_p.is_involution()) throw InvalidArgument("sigma∘gamma and rho∘gamma must be involutions");
  if (r < 0) throw InvalidArgument("walk length must be non-negative");
  std::optional<RestrictedCayleyGraph> local;
  if (graph == nullptr) graph = &local.emplace(d);
  const auto start = graph->index(matching_of(start_p));
  const auto end = graph->index(matching_of(end_p));
  const auto reach = graph->walks_to(end, r);
  if (!require_transitive) return reach[static_cast<std::size_t>(r)][start];

  BigInt total = 0;
  UnionFind base(d);
  for (int x = 0; x < d; ++x) base.unite(x, sigma(x));
  // Depth-first over walks; the union-find of σ and the τ's so far is
  // carried along by value.
  std::function<void(std::size_t, int, UnionFind)> walk = [&](std::size_t v, int left, UnionFind uf) {
    if (left == 0) {
      if (uf.components() == 1) total += 1;
      return;
    }
    for (auto u : graph->neighbors(v)) {
      if (reach[static_cast<std::size_t>(left - 1)][u] == 0) continue;
      const auto tau = step_transposition(graph->vertex(v), graph->vertex(u));
      UnionFind next = uf;
      for (int x = 0; x < d; ++x)
        if (tau(x) != x) next.unite(x, tau(x));
      walk(u, left - 1, std::move(next));
    }
  };
  if (reach[static_cast<std::size_t>(r)][start] != 0) walk(start, r, base);
  return total;
}

/// Σ over γ, σ₀ of type μ and σᵣ of type ν (both inverted by γ) of the
/// transitive walk counts, divided by d!. Equals H̃_g(μ,ν).
inline Dyadic walk_tuple_aggregate(const HurwitzQuery& q, int max_degree = 6) {
  q.validate();
  const int d = q.degree();
  if (d > max_degree) throw InfeasibleQuery("walk aggregate is capped at degree " + std::to_string(max_degree), tuple_search_space(q));
  const RestrictedCayleyGraph graph(d);
  const auto sigmas = permutations_of_type(q.mu);
  const auto rhos = permutations_of_type(q.nu);
  BigInt total = 0;
  for (const auto& gamma : all_involutions(d)) {
    for (const auto& sigma : sigmas) {
      if (!inverts(gamma, sigma)) continue;
      for (const auto& rho : rhos) {
        if (!inverts(gamma, rho)) continue;
        total += count_real_tuples_via_walks(gamma, sigma, rho, q.branch_points(), true, &graph);
      }
    }
  }
  return Dyadic(total).divided_by(factorial(d));
}

}  // namespace hurwitz
