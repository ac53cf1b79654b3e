#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "hurwitz/cayley/graph.hpp"
#include "hurwitz/dyadic.hpp"
#include "hurwitz/symgrp/matching.hpp"

namespace hurwitz {

/// One connected component of the union of two matchings s and t.
struct MatchingComponent {
  std::vector<int> vertices;
  bool cycle = false;
  int s_edges = 0;
  int t_edges = 0;

  int size() const { return static_cast<int>(vertices.size()); }
};

/// Components of s ∪ t. A pair present in both is an alternating cycle of
/// size 2; an isolated vertex is a path of size 1.
inline std::vector<MatchingComponent> matching_components(const Matching& s, const Matching& t) {
  if (s.degree() != t.degree()) throw InvalidArgument("matchings must have equal degree");
  const int d = s.degree();
  UnionFind uf(d);
  for (int x = 0; x < d; ++x) {
    uf.unite(x, s.partner(x));
    uf.unite(x, t.partner(x));
  }
  std::vector<int> slot(static_cast<std::size_t>(d), -1);
  std::vector<MatchingComponent> out;
  for (int x = 0; x < d; ++x) {
    const int root = uf.find(x);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    auto& c = out[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])];
    c.vertices.push_back(x);
    if (s.partner(x) > x) ++c.s_edges;
    if (t.partner(x) > x) ++c.t_edges;
  }
  for (auto& c : out) c.cycle = c.s_edges + c.t_edges == c.size() && c.size() >= 2;
  return out;
}

struct ComponentProfile {
  int degree = 0;
  std::vector<int> path_sizes;   ///< a₁ ≥ a₂ ≥ …
  std::vector<int> cycle_sizes;  ///< b₁ ≥ b₂ ≥ …

  friend bool operator==(const ComponentProfile&, const ComponentProfile&) = default;
};

inline ComponentProfile component_profile(const Matching& s, const Matching& t) {
  ComponentProfile p;
  p.degree = s.degree();
  for (const auto& c : matching_components(s, t)) (c.cycle ? p.cycle_sizes : p.path_sizes).push_back(c.size());
  std::sort(p.path_sizes.begin(), p.path_sizes.end(), std::greater<>());
  std::sort(p.cycle_sizes.begin(), p.cycle_sizes.end(), std::greater<>());
  return p;
}

enum class Series : std::uint8_t { P, C };

/// Seidel–Entringer triangle; row n ends with the zigzag number A(n), the
/// coefficient of xⁿ/n! in sec(x) + tan(x).
inline std::vector<BigInt> zigzag_numbers(int up_to) {
  if (up_to < 0) throw InvalidArgument("n must be non-negative");
  std::vector<BigInt> zigzag{1};
  std::vector<BigInt> row{1};
  for (int n = 1; n <= up_to; ++n) {
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 1);
    next[0] = 0;
    for (int k = 1; k <= n; ++k) next[static_cast<std::size_t>(k)] = next[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(n - k)];
    row = std::move(next);
    zigzag.push_back(row.back());
  }
  return zigzag;
}

/// Taylor coefficients t_n (of xⁿ/n!) of tan(x), from tan' = 1 + tan².
inline std::vector<BigInt> tangent_coefficients(int up_to) {
  std::vector<BigInt> t(static_cast<std::size_t>(std::max(up_to, 1)) + 1, 0);
  t[1] = 1;
  for (int n = 1; n + 1 <= up_to; ++n) {
    BigInt sum = 0;
    BigInt binom = 1;
    for (int k = 0; k <= n; ++k) {
      sum += binom * t[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(n - k)];
      binom = binom * (n - k) / (k + 1);
    }
    t[static_cast<std::size_t>(n + 1)] = sum;
  }
  t.resize(static_cast<std::size_t>(up_to) + 1);
  return t;
}

/// P: coefficient of xⁿ/n! in sec(x) + tan(x).
/// C: coefficient of xⁿ/n! in x·tan(x)/2, i.e. n·t_{n-1}/2.
inline BigInt egf_coefficient(Series series, int n) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  if (series == Series::P) return zigzag_numbers(n).back();
  if (n == 0) return 0;
  const auto t = tangent_coefficients(n - 1);
  return BigInt(n) * t[static_cast<std::size_t>(n - 1)] / 2;
}

struct PathCount {
  int length = -1;
  BigInt count = 0;

  friend bool operator==(const PathCount&, const PathCount&) = default;
};

/// Length d − m and count (d−m)!/(Π(aᵢ−1)!·Π bⱼ!)·Π P(aᵢ−1)·Π C(bⱼ) from
/// the component profile of s ∪ t (m = number of paths). A pair shared by
/// s and t is a cycle of size 2 and so contributes two steps.
inline PathCount min_paths_formula(const Matching& s, const Matching& t) {
  const auto profile = component_profile(s, t);
  const int d = profile.degree;
  const int length = d - static_cast<int>(profile.path_sizes.size());
  const int largest = std::max({1, profile.path_sizes.empty() ? 1 : profile.path_sizes.front(),
                                profile.cycle_sizes.empty() ? 1 : profile.cycle_sizes.front()});
  const auto zigzag = zigzag_numbers(largest);
  BigInt count = factorial(length);
  for (int a : profile.path_sizes) count = count / factorial(a - 1) * zigzag[static_cast<std::size_t>(a - 1)];
  for (int b : profile.cycle_sizes) count = count / factorial(b) * egf_coefficient(Series::C, b);
  return {length, count};
}

/// Shortest-walk length and count by breadth-first search in the
/// restricted Cayley graph.
inline PathCount min_paths_bfs(const Matching& s, const Matching& t, int max_degree = 8) {
  if (s.degree() != t.degree()) throw InvalidArgument("matchings must have equal degree");
  if (s.degree() > max_degree) throw InfeasibleQuery("BFS is capped at degree " + std::to_string(max_degree), BigInt(0));
  const RestrictedCayleyGraph g(s.degree());
  const auto result = g.shortest_from(g.index(s))[g.index(t)];
  return {result.length, result.count};
}

}  // namespace hurwitz
