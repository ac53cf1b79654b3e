#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/symgrp/permutation.hpp"

namespace hurwitz {

/// Integer partition, parts kept weakly decreasing.
class Partition {
 public:
  Partition() = default;

  /// Sorts the parts; rejects non-positive entries.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p <= 0) throw InvalidArgument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  std::span<const int> parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// |Aut|: product of factorials of part multiplicities.
  BigInt automorphism_count() const {
    std::map<int, int> mult;
    for (int p : parts_) ++mult[p];
    BigInt r = 1;
    for (const auto& [part, m] : mult) r *= factorial(m);
    return r;
  }

  /// "4,2,2"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  /// Comma-separated positive integers in any order.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view token = text.substr(start, end - start);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      if (token.empty()) throw InvalidArgument("empty part in partition '" + std::string(text) + "'");
      int value = 0;
      for (char c : token) {
        if (c < '0' || c > '9') throw InvalidArgument("invalid partition '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw InvalidArgument("partition part too large");
      }
      parts.push_back(value);
      start = end + 1;
    }
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of d, parts decreasing, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(rest - p, p);
      parts.pop_back();
    }
  };
  rec(d, d);
  return out;
}

inline Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : p.cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

/// Disjoint-set forest over {0,...,n-1}.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& px = parent_[static_cast<std::size_t>(x)];
      px = parent_[static_cast<std::size_t>(px)];
      x = px;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    --components_;
    return true;
  }
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  int components_;
};

/// Whether ⟨generators⟩ acts transitively on {0,...,d-1}. The orbits of the
/// generated group are the connected components of the generator graph.
inline bool is_transitive(std::span<const Permutation> generators, int d) {
  UnionFind uf(d);
  for (const auto& g : generators) {
    if (g.degree() != d) throw InvalidArgument("generator degree mismatch");
    for (int x = 0; x < d; ++x) uf.unite(x, g(x));
  }
  return uf.components() == 1;
}

}  // namespace hurwitz
