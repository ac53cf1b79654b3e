#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/genus0/tree.hpp"

namespace hurwitz {

/// Hyperplane Σ_{i∈I} μᵢ = Σ_{j∈J} νⱼ. Indices are 0-based; I always
/// contains the first in-end (the complementary pair is identified).
struct Wall {
  std::vector<int> I;
  std::vector<int> J;

  /// "1:2,3" with 1-based indices.
  std::string to_string() const {
    std::string s;
    auto list = [&](const std::vector<int>& v) {
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k] + 1);
    };
    list(I);
    s += ':';
    list(J);
    return s;
  }

  friend bool operator==(const Wall&, const Wall&) = default;
  friend auto operator<=>(const Wall&, const Wall&) = default;
};

/// Wall given by the set of ends on one side of an edge split.
inline Wall wall_from_split(LeafSet side, int l_mu, int l_nu) {
  const LeafSet full = (LeafSet{1} << (l_mu + l_nu)) - 1;
  if (!(side & 1u)) side = full & ~side;
  Wall w;
  for (int i = 0; i < l_mu; ++i)
    if (side & (LeafSet{1} << i)) w.I.push_back(i);
  for (int j = 0; j < l_nu; ++j)
    if (side & (LeafSet{1} << (l_mu + j))) w.J.push_back(j);
  return w;
}

inline LeafSet wall_side(const Wall& w, int l_mu) {
  LeafSet s = 0;
  for (int i : w.I) s |= LeafSet{1} << i;
  for (int j : w.J) s |= LeafSet{1} << (l_mu + j);
  return s;
}

/// Normalizes and validates (I, J); accepts either side of the split.
inline Wall make_wall(std::vector<int> I, std::vector<int> J, int l_mu, int l_nu) {
  LeafSet side = 0;
  for (int i : I) {
    if (i < 0 || i >= l_mu) throw InvalidArgument("wall index outside μ");
    side |= LeafSet{1} << i;
  }
  for (int j : J) {
    if (j < 0 || j >= l_nu) throw InvalidArgument("wall index outside ν");
    side |= LeafSet{1} << (l_mu + j);
  }
  Wall w = wall_from_split(side, l_mu, l_nu);
  const bool proper = !w.J.empty() && static_cast<int>(w.J.size()) < l_nu && static_cast<int>(w.I.size()) < l_mu;
  if (!proper) throw InvalidArgument("(I, J) = " + w.to_string() + " is not a wall: the hyperplane misses the positive orthant");
  return w;
}

/// All walls for ℓ(μ) = l_mu, ℓ(ν) = l_nu. A split is a wall iff I, J and
/// both complements are non-empty (otherwise the signed sum has a fixed
/// sign on positive entries); every such split is an edge of some tree.
inline std::vector<Wall> walls(int l_mu, int l_nu) {
  if (l_mu < 1 || l_nu < 1) throw InvalidArgument("partitions must be non-empty");
  const int n = l_mu + l_nu;
  std::vector<Wall> out;
  if (n < 4) return out;
  for (LeafSet side = 1; side < (LeafSet{1} << n); side += 2) {  // contains end 0
    Wall w = wall_from_split(side, l_mu, l_nu);
    if (w.J.empty() || static_cast<int>(w.J.size()) == l_nu || static_cast<int>(w.I.size()) == l_mu) continue;
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// "1,2:3" (1-based) to a normalized wall.
inline Wall parse_wall(std::string_view text, int l_mu, int l_nu) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("wall must read I:J");
  auto indices = [](std::string_view part) {
    std::vector<int> v;
    std::size_t start = 0;
    while (start < part.size()) {
      auto end = part.find(',', start);
      if (end == std::string_view::npos) end = part.size();
      const auto token = part.substr(start, end - start);
      if (token.empty()) throw InvalidArgument("empty wall index");
      int x = 0;
      for (char c : token) {
        if (c < '0' || c > '9') throw InvalidArgument("invalid wall index");
        x = x * 10 + (c - '0');
        if (x > 64) throw InvalidArgument("wall index out of range");
      }
      if (x < 1) throw InvalidArgument("wall indices are 1-based");
      v.push_back(x - 1);
      start = end + 1;
    }
    return v;
  };
  return make_wall(indices(text.substr(0, colon)), indices(text.substr(colon + 1)), l_mu, l_nu);
}

inline long long wall_value(const Wall& w, const Entries& mu, const Entries& nu) {
  return signed_sum(wall_side(w, static_cast<int>(mu.size())), mu, nu);
}

/// Sign (+1/-1) of (μ,ν) against every wall, in walls() order.
inline std::vector<int> sign_vector(const Entries& mu, const Entries& nu) {
  check_entries(mu, nu);
  std::vector<int> signs;
  for (const auto& w : walls(static_cast<int>(mu.size()), static_cast<int>(nu.size()))) {
    const long long v = wall_value(w, mu, nu);
    if (v == 0) throw OnWallError("point lies on the wall " + w.to_string());
    signs.push_back(v > 0 ? 1 : -1);
  }
  return signs;
}

/// F(plus) − F(minus) evaluated directly.
inline Dyadic wall_crossing_direct(const Entries& mu_plus, const Entries& nu_plus, const Entries& mu_minus,
                                   const Entries& nu_minus) {
  const FOptions bound{true};
  return F_value(mu_plus, nu_plus, bound) - F_value(mu_minus, nu_minus, bound);
}

/// 2^{n-3} Σ_T (p·o at plus − p·o at minus) over trees with an edge
/// splitting off (I, J).
inline Dyadic wall_crossing_restricted(const Wall& w, const Entries& mu_plus, const Entries& nu_plus,
                                       const Entries& mu_minus, const Entries& nu_minus) {
  const int l_mu = static_cast<int>(mu_plus.size());
  const int l_nu = static_cast<int>(nu_plus.size());
  const LeafSet target = wall_side(w, l_mu);
  BigInt total = 0;
  for (const auto& t : all_trees(l_mu, l_nu)) {
    bool has_edge = false;
    for (auto e : t.internal_edges())
      if (t.split(e) == target) has_edge = true;
    if (!has_edge) continue;
    const auto plus = orient_tree(t, mu_plus, nu_plus);
    const auto minus = orient_tree(t, mu_minus, nu_minus);
    if (plus.p == 1) total += tree_orderings(t, plus);
    if (minus.p == 1) total -= tree_orderings(t, minus);
  }
  return Dyadic(total) * Dyadic::pow2(l_mu + l_nu - 3);
}

/// Wall-crossing F(plus) − F(minus) for two points in adjacent chambers
/// separated by w. Both evaluations are made and must agree.
inline Dyadic wall_crossing(const Wall& w, const Entries& mu_plus, const Entries& nu_plus, const Entries& mu_minus,
                            const Entries& nu_minus) {
  if (mu_plus.size() != mu_minus.size() || nu_plus.size() != nu_minus.size())
    throw InvalidArgument("both points need the same numbers of entries");
  const int l_mu = static_cast<int>(mu_plus.size());
  const int l_nu = static_cast<int>(nu_plus.size());
  const auto all = walls(l_mu, l_nu);
  const auto it = std::find(all.begin(), all.end(), w);
  if (it == all.end()) throw InvalidArgument("not a wall for these lengths: " + w.to_string());
  const auto plus = sign_vector(mu_plus, nu_plus);
  const auto minus = sign_vector(mu_minus, nu_minus);
  const auto k = static_cast<std::size_t>(it - all.begin());
  if (plus[k] == minus[k]) throw InvalidArgument("the two points lie on the same side of " + w.to_string());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (i != k && plus[i] != minus[i])
      throw InvalidArgument("points are not in adjacent chambers: they are also separated by " + all[i].to_string());
  const Dyadic direct = wall_crossing_direct(mu_plus, nu_plus, mu_minus, nu_minus);
  const Dyadic restricted = wall_crossing_restricted(w, mu_plus, nu_plus, mu_minus, nu_minus);
  if (direct != restricted) throw std::logic_error("wall-crossing: direct and restricted sums disagree");
  return direct;
}

}  // namespace hurwitz
