#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "hurwitz/genus0/tree.hpp"
#include "hurwitz/genus0/walls.hpp"
#include "hurwitz/tropical/hurwitz.hpp"

namespace hurwitz {
namespace {

constexpr FOptions kBound{true};

LeafSet mask(std::initializer_list<int> ends) {
  LeafSet m = 0;
  for (int e : ends) m |= LeafSet{1} << e;
  return m;
}

/// The tree whose internal splits (sides containing end 0) are exactly `splits`.
LabeledTree tree_with_splits(int l_mu, int l_nu, std::set<LeafSet> splits) {
  for (const auto& t : all_trees(l_mu, l_nu)) {
    std::set<LeafSet> s;
    for (auto e : t.internal_edges()) s.insert(t.split(e));
    if (s == splits) return t;
  }
  throw std::logic_error("no such tree");
}

std::size_t only_internal_edge(const LabeledTree& t) {
  const auto edges = t.internal_edges();
  if (edges.size() != 1) throw std::logic_error("expected a 4-end tree");
  return edges.front();
}

/// Random point with the given lengths: μ entries in [1, max], ν a random
/// composition of |μ|.
std::pair<Entries, Entries> random_point(std::mt19937& rng, int l_mu, int l_nu, int max) {
  for (;;) {
    std::uniform_int_distribution<int> entry(1, max);
    Entries mu(static_cast<std::size_t>(l_mu));
    int d = 0;
    for (auto& m : mu) d += (m = entry(rng));
    if (d < l_nu) continue;
    std::uniform_int_distribution<int> cut(1, d - 1);
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < l_nu - 1) chosen.insert(cut(rng));
    Entries nu;
    int prev = 0;
    for (int c : chosen) {
      nu.push_back(c - prev);
      prev = c;
    }
    nu.push_back(d - prev);
    return {mu, nu};
  }
}

bool off_walls(const Entries& mu, const Entries& nu) {
  for (const auto& w : walls(static_cast<int>(mu.size()), static_cast<int>(nu.size())))
    if (wall_value(w, mu, nu) == 0) return false;
  return true;
}

Entries entries_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

TEST(AllTrees, DoubleFactorialCounts) {
  EXPECT_EQ(all_trees(1, 2).size(), 1u);
  EXPECT_EQ(all_trees(2, 2).size(), 3u);
  EXPECT_EQ(all_trees(2, 3).size(), 15u);
  EXPECT_EQ(all_trees(3, 3).size(), 105u);
  EXPECT_EQ(all_trees(3, 4).size(), 945u);
  EXPECT_THROW(all_trees(4, 4), InfeasibleQuery);
  EXPECT_EQ(all_trees(4, 4, 8).size(), 10395u);
  for (const auto& t : all_trees(3, 3)) {
    EXPECT_EQ(t.internal_edges().size(), 3u);
    EXPECT_EQ(t.edges.size(), 9u);
  }
}

TEST(EdgeWeight, Examples) {
  const auto mixed = tree_with_splits(2, 2, {mask({0, 3})});
  EXPECT_EQ(edge_weight(mixed, only_internal_edge(mixed), {5, 3}, {6, 2}), 3);
  const auto in_out = tree_with_splits(2, 2, {mask({0, 1})});
  EXPECT_EQ(edge_weight(in_out, only_internal_edge(in_out), {8, 2}, {6, 4}), 10);
  const auto cancel = tree_with_splits(2, 2, {mask({0, 2})});
  EXPECT_EQ(edge_weight(cancel, only_internal_edge(cancel), {3, 3}, {3, 3}), 0);
}

TEST(EdgeWeight, RejectsEndsAndMismatchedEntries) {
  const auto t = tree_with_splits(2, 2, {mask({0, 1})});
  std::size_t end_edge = 0;
  while (t.is_internal(end_edge)) ++end_edge;
  EXPECT_THROW(edge_weight(t, end_edge, {8, 2}, {6, 4}), InvalidArgument);
  EXPECT_THROW(edge_weight(t, only_internal_edge(t), {8, 2}, {10}), InvalidArgument);
}

TEST(OrientTree, Star) {
  const auto trees = all_trees(2, 1);
  ASSERT_EQ(trees.size(), 1u);
  const auto o = orient_tree(trees[0], {4, 2}, {6});
  EXPECT_EQ(o.p, 1);
  EXPECT_TRUE(o.arcs.empty());
  EXPECT_EQ(tree_orderings(trees[0], o), 1);
}

TEST(OrientTree, EdgePointsAwayFromPositiveSide) {
  const auto t = tree_with_splits(2, 2, {mask({0, 2})});
  const auto o = orient_tree(t, {8, 2}, {6, 4});
  ASSERT_EQ(o.p, 1);
  ASSERT_EQ(o.arcs.size(), 1u);
  int first_inner = -1;
  for (auto [u, v] : t.edges) {
    if (u == 0) first_inner = v;
    if (v == 0) first_inner = u;
  }
  EXPECT_EQ(o.arcs[0].first, first_inner - t.ends);
}

TEST(OrientTree, OnWallIsAnError) {
  const auto t = tree_with_splits(2, 2, {mask({0, 2})});
  EXPECT_THROW(orient_tree(t, {3, 3}, {3, 3}), OnWallError);
}

TEST(OrientTree, AlwaysAdmissibleOffWalls) {
  std::mt19937 rng(11);
  int checked = 0;
  for (auto [l_mu, l_nu] : std::vector<std::pair<int, int>>{{2, 2}, {1, 3}, {2, 3}, {3, 2}, {1, 4}, {3, 3}, {2, 4}, {1, 5}}) {
    const auto trees = all_trees(l_mu, l_nu);
    for (int k = 0; k < 40; ++k) {
      const auto [mu, nu] = random_point(rng, l_mu, l_nu, 25);
      if (!off_walls(mu, nu)) continue;
      for (const auto& t : trees) {
        const auto o = orient_tree(t, mu, nu);
        ASSERT_EQ(o.p, 1);
        for (auto [in, out] : o.degrees) {
          ASSERT_GE(in, 1);
          ASSERT_GE(out, 1);
        }
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(TreeMultiplicity, Examples) {
  const auto in_out = tree_with_splits(2, 2, {mask({0, 1})});
  EXPECT_EQ(tree_multiplicity(in_out, orient_tree(in_out, {8, 2}, {6, 4}), {8, 2}, {6, 4}), Dyadic(2));
  const auto mixed = tree_with_splits(2, 2, {mask({0, 3})});
  EXPECT_EQ(tree_multiplicity(mixed, orient_tree(mixed, {5, 3}, {6, 2}), {5, 3}, {6, 2}), Dyadic(1));
  const auto fork = tree_with_splits(1, 3, {mask({0, 1})});
  EXPECT_EQ(tree_multiplicity(fork, orient_tree(fork, {7}, {1, 3, 3}), {7}, {1, 3, 3}), Dyadic(1));
}

TEST(TreeMultiplicity, EvenDistinctEntriesGivePowerOfTwo) {
  const Entries mu{18, 6, 2};
  const Entries nu{12, 10, 4};
  ASSERT_TRUE(off_walls(mu, nu));
  for (const auto& t : all_trees(3, 3)) {
    const auto o = orient_tree(t, mu, nu);
    ASSERT_EQ(o.p, 1);
    EXPECT_EQ(tree_multiplicity(t, o, mu, nu), Dyadic(8));
  }
}

TEST(FValue, Examples) {
  EXPECT_EQ(F_value({4, 2}, {6}, kBound), Dyadic(1));
  EXPECT_EQ(F_value({8, 2}, {6, 4}, kBound), Dyadic(6));
}

TEST(FValue, PreconditionsAndErrors) {
  EXPECT_THROW(F_value({8, 2}, {6, 4}), InvalidArgument);
  EXPECT_NO_THROW(F_value({9, 3}, {7, 4, 1}));
  EXPECT_THROW(F_value({3, 3}, {3, 3}, kBound), OnWallError);
  EXPECT_THROW(F_value({3, 3}, {5}, kBound), InvalidArgument);
}

TEST(FValue, EqualsTropicalOnEvenDistinctLocus) {
  int checked = 0;
  for (int d = 2; d <= 14; d += 2)
    for (const auto& mu : partitions_of(d))
      for (const auto& nu : partitions_of(d)) {
        const int n = mu.length() + nu.length();
        if (n < 3 || n > 5) continue;
        if (mu.automorphism_count() != 1 || nu.automorphism_count() != 1) continue;
        auto even = [](const Partition& p) {
          return std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 0; });
        };
        if (!even(mu) || !even(nu)) continue;
        const auto m = entries_of(mu);
        const auto v = entries_of(nu);
        if (!off_walls(m, v)) continue;
        const Dyadic f = F_value(m, v, kBound);
        for (bool flag : {true, false}) ASSERT_EQ(f, tropical_hurwitz(make_query(mu, nu, 0, flag))) << mu.to_string() << " | " << nu.to_string();
        ++checked;
      }
  EXPECT_GT(checked, 30);
}

TEST(FValue, BoundsTropicalGenusZero) {
  int checked = 0;
  for (int d = 2; d <= 10; ++d)
    for (const auto& mu : partitions_of(d))
      for (const auto& nu : partitions_of(d)) {
        const int n = mu.length() + nu.length();
        if (n < 3 || n > 5) continue;
        const auto m = entries_of(mu);
        const auto v = entries_of(nu);
        if (!off_walls(m, v)) continue;
        const Dyadic f = F_value(m, v, kBound);
        ASSERT_GE(f, tropical_hurwitz(make_query(mu, nu, 0, true))) << mu.to_string() << " | " << nu.to_string();
        ++checked;
      }
  EXPECT_GE(checked, 20);
}

TEST(Walls, Counts) {
  EXPECT_TRUE(walls(1, 2).empty());
  EXPECT_TRUE(walls(1, 3).empty());
  EXPECT_EQ(walls(2, 2).size(), 2u);
  EXPECT_EQ(walls(2, 3).size(), 6u);
  EXPECT_EQ(walls(3, 2).size(), 6u);
}

TEST(Walls, TwoByTwo) {
  const auto w = walls(2, 2);
  EXPECT_EQ(w[0].to_string(), "1:1");
  EXPECT_EQ(w[1].to_string(), "1:2");
  EXPECT_EQ(parse_wall("2:2", 2, 2), w[0]);
  EXPECT_EQ(parse_wall("2:1", 2, 2), w[1]);
  EXPECT_THROW(parse_wall("1,2:1", 2, 2), InvalidArgument);
  EXPECT_THROW(parse_wall("1:", 2, 2), InvalidArgument);
  EXPECT_THROW(parse_wall("3:1", 2, 2), InvalidArgument);
}

TEST(Walls, ExactlyTheSplitsWithIndefiniteSign) {
  for (auto [l_mu, l_nu] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}, {1, 4}}) {
    std::set<Wall> from_trees;
    for (const auto& t : all_trees(l_mu, l_nu))
      for (auto e : t.internal_edges()) {
        const Wall w = wall_from_split(t.split(e), l_mu, l_nu);
        const bool proper = !w.J.empty() && static_cast<int>(w.J.size()) < l_nu && static_cast<int>(w.I.size()) < l_mu;
        if (proper) from_trees.insert(w);
      }
    const auto listed = walls(l_mu, l_nu);
    EXPECT_EQ(std::set<Wall>(listed.begin(), listed.end()), from_trees) << l_mu << "," << l_nu;
  }
}

TEST(Chambers, FIsConstantWithinEachChamber) {
  std::mt19937 rng(5);
  for (auto [l_mu, l_nu] : std::vector<std::pair<int, int>>{{2, 2}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}) {
    std::map<std::vector<int>, std::vector<Dyadic>> values;
    for (int k = 0; k < 600; ++k) {
      const auto [mu, nu] = random_point(rng, l_mu, l_nu, 30);
      if (!off_walls(mu, nu)) continue;
      values[sign_vector(mu, nu)].push_back(F_value(mu, nu, kBound));
    }
    int probed = 0;
    for (const auto& [signs, vs] : values) {
      for (const auto& v : vs) ASSERT_EQ(v, vs.front());
      if (vs.size() >= 3) ++probed;
    }
    EXPECT_GT(probed, 0);
    if (l_mu + l_nu == 4) {
      EXPECT_EQ(probed, static_cast<int>(values.size()));
    }
  }
}

TEST(WallCrossing, FiveEndExampleTreeContributesFour) {
  const Entries mu_plus{20, 9}, nu_plus{3, 16, 10};
  const Entries mu_minus{20, 11}, nu_minus{3, 18, 10};
  const auto t = tree_with_splits(2, 3, {mask({0, 2, 3}), mask({0, 1, 4})});
  const auto plus = orient_tree(t, mu_plus, nu_plus);
  const auto minus = orient_tree(t, mu_minus, nu_minus);
  ASSERT_EQ(plus.p, 1);
  ASSERT_EQ(minus.p, 1);
  const BigInt o_plus = tree_orderings(t, plus);
  const BigInt o_minus = tree_orderings(t, minus);
  EXPECT_EQ(std::max(o_plus, o_minus), 2);
  EXPECT_EQ(std::min(o_plus, o_minus), 1);
  const Dyadic contribution = Dyadic(o_plus - o_minus) * Dyadic::pow2(2);
  EXPECT_EQ(contribution, Dyadic(o_plus > o_minus ? 4 : -4));

  const Wall w = parse_wall("2:3", 2, 3);
  const Dyadic total = wall_crossing(w, mu_plus, nu_plus, mu_minus, nu_minus);
  EXPECT_EQ(total, wall_crossing_restricted(w, mu_plus, nu_plus, mu_minus, nu_minus));
  EXPECT_EQ(total, F_value(mu_plus, nu_plus, kBound) - F_value(mu_minus, nu_minus, kBound));
}

TEST(WallCrossing, EvenDistinctFourEndsGiveZero) {
  const Wall w = parse_wall("1:1", 2, 2);
  EXPECT_EQ(wall_crossing(w, {10, 4}, {8, 6}, {10, 4}, {12, 2}), Dyadic(0));
}

TEST(WallCrossing, Antisymmetric) {
  const Wall w = parse_wall("2:3", 2, 3);
  const Entries a_mu{20, 9}, a_nu{3, 16, 10}, b_mu{20, 11}, b_nu{3, 18, 10};
  EXPECT_EQ(wall_crossing(w, a_mu, a_nu, b_mu, b_nu), -wall_crossing(w, b_mu, b_nu, a_mu, a_nu));
}

TEST(WallCrossing, RestrictedSumMatchesDirectOnEveryWall) {
  std::mt19937 rng(3);
  for (auto [l_mu, l_nu] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    std::map<std::vector<int>, std::pair<Entries, Entries>> chambers;
    for (int k = 0; k < 4000; ++k) {
      const auto [mu, nu] = random_point(rng, l_mu, l_nu, 40);
      if (off_walls(mu, nu)) chambers.emplace(sign_vector(mu, nu), std::pair{mu, nu});
    }
    const auto all = walls(l_mu, l_nu);
    std::set<std::size_t> covered;
    for (const auto& [sa, a] : chambers)
      for (const auto& [sb, b] : chambers) {
        std::vector<std::size_t> diff;
        for (std::size_t i = 0; i < sa.size(); ++i)
          if (sa[i] != sb[i]) diff.push_back(i);
        if (diff.size() != 1) continue;
        const Wall& w = all[diff[0]];
        const Dyadic direct = wall_crossing_direct(a.first, a.second, b.first, b.second);
        ASSERT_EQ(wall_crossing_restricted(w, a.first, a.second, b.first, b.second), direct) << w.to_string();
        ASSERT_EQ(wall_crossing(w, a.first, a.second, b.first, b.second), direct);
        covered.insert(diff[0]);
      }
    EXPECT_EQ(covered.size(), all.size()) << l_mu << "," << l_nu;
  }
}

TEST(WallCrossing, RejectsBadInputs) {
  const Wall w = parse_wall("1:1", 2, 2);
  EXPECT_THROW(wall_crossing(w, {10, 4}, {8, 6}, {10, 4}, {9, 5}), InvalidArgument);
  EXPECT_THROW(wall_crossing(w, {10, 4}, {8, 6}, {6, 6}, {6, 6}), OnWallError);
  EXPECT_THROW(wall_crossing(w, {10, 4}, {8, 6}, {10, 4}, {5, 9}), InvalidArgument);
  EXPECT_THROW(wall_crossing(Wall{{0}, {0, 1}}, {10, 4}, {8, 6}, {10, 4}, {12, 2}), InvalidArgument);
}

}  // namespace
}  // namespace hurwitz
