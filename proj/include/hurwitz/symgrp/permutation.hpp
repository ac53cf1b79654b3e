#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

/// A bijection of {0,...,d-1}, stored as its dense image array.
///
/// Text I/O uses 1-indexed cycle notation, e.g. "(1 2 3)(4 5)", with fixed
/// points omitted and "id" for the identity.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw InvalidArgument("permutation degree must be at least 1");
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
        throw InvalidArgument("image array is not a bijection");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation identity(int degree) {
    if (degree < 1) throw InvalidArgument("permutation degree must be at least 1");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images), Unchecked{});
  }

  /// The transposition swapping a and b (0-indexed, a != b).
  static Permutation transposition(int degree, int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= degree || b >= degree)
      throw InvalidArgument("invalid transposition points");
    Permutation p = identity(degree);
    std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
    return p;
  }

  /// Builds a permutation from disjoint 0-indexed cycles.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(degree);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int x = cycle[i];
        if (x < 0 || x >= degree) throw InvalidArgument("cycle point out of range");
        if (used[static_cast<std::size_t>(x)]) throw InvalidArgument("cycles are not disjoint");
        used[static_cast<std::size_t>(x)] = true;
        p.images_[static_cast<std::size_t>(x)] = cycle[(i + 1) % cycle.size()];
      }
    }
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) inv[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
    return Permutation(std::move(inv), Unchecked{});
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[x] != static_cast<int>(x)) return false;
    return true;
  }

  bool is_involution() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[static_cast<std::size_t>(images_[x])] != static_cast<int>(x)) return false;
    return true;
  }

  bool is_transposition() const {
    int moved = 0;
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (images_[x] == static_cast<int>(x)) continue;
      if (images_[static_cast<std::size_t>(images_[x])] != static_cast<int>(x)) return false;
      ++moved;
    }
    return moved == 2;
  }

  /// Cycles including fixed points, each starting at its smallest point,
  /// ordered by smallest point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < degree(); ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      std::vector<int> cycle;
      for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
        seen[static_cast<std::size_t>(x)] = true;
        cycle.push_back(x);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  int cycle_count() const {
    int count = 0;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < degree(); ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      ++count;
      for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) seen[static_cast<std::size_t>(x)] = true;
    }
    return count;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend Permutation compose(const Permutation& p, const Permutation& q);
};

/// p∘q, the map x ↦ p(q(x)): q is applied first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidArgument("degree mismatch in compose");
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) images[static_cast<std::size_t>(x)] = p(q(x));
  return Permutation(std::move(images), Permutation::Unchecked{});
}

/// g∘p∘g⁻¹.
inline Permutation conjugate_by(const Permutation& p, const Permutation& g) {
  if (p.degree() != g.degree()) throw InvalidArgument("degree mismatch in conjugate_by");
  return compose(compose(g, p), g.inverse());
}

inline std::string to_cycle_string(const Permutation& p) {
  std::string out;
  for (const auto& cycle : p.cycles()) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

/// Parses 1-indexed cycle notation. A degree of 0 means "largest point
/// mentioned" (and 1 for a bare "id").
inline Permutation parse_cycles(std::string_view text, int degree = 0) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (text.substr(i, 2) == "id") {
    i += 2;
    skip_space();
    if (i != text.size()) throw InvalidArgument("trailing characters after 'id'");
  } else {
    while (i < text.size()) {
      if (text[i] != '(') throw InvalidArgument("expected '(' in cycle notation: " + std::string(text));
      ++i;
      std::vector<int> cycle;
      for (;;) {
        skip_space();
        if (i >= text.size()) throw InvalidArgument("unterminated cycle: " + std::string(text));
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw InvalidArgument("unexpected character in cycle notation: " + std::string(text));
        int value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + (text[i] - '0');
          if (value > 1'000'000) throw InvalidArgument("point out of range");
          ++i;
        }
        if (value < 1) throw InvalidArgument("cycle points are 1-indexed");
        cycle.push_back(value - 1);
      }
      if (cycle.empty()) throw InvalidArgument("empty cycle");
      cycles.push_back(std::move(cycle));
      skip_space();
    }
    if (cycles.empty()) throw InvalidArgument("empty permutation text");
  }
  int largest = 0;
  for (const auto& c : cycles)
    for (int x : c) largest = std::max(largest, x + 1);
  if (degree == 0) degree = std::max(largest, 1);
  if (largest > degree) throw InvalidArgument("cycle point exceeds degree");
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace hurwitz
