#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/symgrp/permutation.hpp"

namespace hurwitz {

/// A matching in the complete graph K_d, i.e. an involution of S_d read as
/// a set of disjoint pairs. Unmatched vertices are the fixed points.
class Matching {
 public:
  Matching() = default;

  /// Empty matching on d vertices.
  explicit Matching(int degree) : partner_(static_cast<std::size_t>(degree)) {
    if (degree < 1) throw InvalidArgument("matching degree must be at least 1");
    for (int x = 0; x < degree; ++x) partner_[static_cast<std::size_t>(x)] = x;
  }

  /// From 0-indexed pairs; rejects overlapping pairs.
  Matching(int degree, const std::vector<std::pair<int, int>>& pairs) : Matching(degree) {
    for (auto [a, b] : pairs) add_pair(a, b);
  }

  int degree() const { return static_cast<int>(partner_.size()); }
  int partner(int x) const { return partner_[static_cast<std::size_t>(x)]; }
  bool is_free(int x) const { return partner(x) == x; }

  /// Pairs (a, b) with a < b, sorted.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < degree(); ++x)
      if (partner(x) > x) out.emplace_back(x, partner(x));
    return out;
  }

  int pair_count() const {
    int n = 0;
    for (int x = 0; x < degree(); ++x)
      if (partner(x) > x) ++n;
    return n;
  }

  bool contains(int a, int b) const { return a != b && partner(a) == b; }

  void add_pair(int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= degree() || b >= degree())
      throw InvalidArgument("invalid matching pair");
    if (!is_free(a) || !is_free(b)) throw InvalidArgument("matching pairs must be disjoint");
    partner_[static_cast<std::size_t>(a)] = b;
    partner_[static_cast<std::size_t>(b)] = a;
  }

  void remove_pair(int a, int b) {
    if (!contains(a, b)) throw InvalidArgument("pair not in matching");
    partner_[static_cast<std::size_t>(a)] = a;
    partner_[static_cast<std::size_t>(b)] = b;
  }

  /// "1-2,3-4"; the empty matching prints as "".
  std::string to_string() const {
    std::string out;
    for (auto [a, b] : pairs()) {
      if (!out.empty()) out += ',';
      out += std::to_string(a + 1) + "-" + std::to_string(b + 1);
    }
    return out;
  }

  /// Parses "1-2,3-4" (1-indexed). Degree 0 means "largest point mentioned".
  static Matching parse(std::string_view text, int degree = 0) {
    std::vector<std::pair<int, int>> pairs;
    int largest = 0;
    std::size_t start = 0;
    while (start < text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      const std::string_view token = text.substr(start, end - start);
      const auto dash = token.find('-');
      if (dash == std::string_view::npos) throw InvalidArgument("expected a-b in matching '" + std::string(text) + "'");
      const int a = parse_point(token.substr(0, dash));
      const int b = parse_point(token.substr(dash + 1));
      largest = std::max({largest, a, b});
      pairs.emplace_back(a - 1, b - 1);
      start = end + 1;
    }
    if (degree == 0) degree = std::max(largest, 1);
    if (largest > degree) throw InvalidArgument("matching point exceeds degree");
    return Matching(degree, pairs);
  }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  static int parse_point(std::string_view s) {
    if (s.empty()) throw InvalidArgument("empty matching point");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw InvalidArgument("invalid matching point");
      v = v * 10 + (c - '0');
      if (v > 1'000'000) throw InvalidArgument("matching point out of range");
    }
    if (v < 1) throw InvalidArgument("matching points are 1-indexed");
    return v;
  }

  std::vector<int> partner_;
};

inline Matching matching_of(const Permutation& p) {
  if (!p.is_involution()) throw InvalidArgument("matching_of requires an involution");
  Matching m(p.degree());
  for (int x = 0; x < p.degree(); ++x)
    if (p(x) > x) m.add_pair(x, p(x));
  return m;
}

inline Permutation involution_of(const Matching& m) {
  std::vector<int> images(static_cast<std::size_t>(m.degree()));
  for (int x = 0; x < m.degree(); ++x) images[static_cast<std::size_t>(x)] = m.partner(x);
  return Permutation(std::move(images));
}

}  // namespace hurwitz
