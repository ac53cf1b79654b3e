#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hurwitz/oracle/tuples.hpp"
#include "hurwitz/tropical/coloring.hpp"
#include "hurwitz/tropical/enumerate.hpp"
#include "hurwitz/tropical/export.hpp"
#include "hurwitz/tropical/hurwitz.hpp"

namespace hurwitz {
namespace {

using C = EdgeColor;

HurwitzQuery query(const char* mu, const char* nu, int g, bool structure = true) {
  return make_query(Partition::parse(mu), Partition::parse(nu), g, structure);
}

/// Vertex-ordered chain: optional in-fork, W wieners, optional out-fork.
MonodromyGraph chain_shape(int d, bool in_fork, bool out_fork, int wieners) {
  const int h = d / 2;
  std::vector<GraphEdge> edges;
  int v = 0;
  if (in_fork) {
    edges.push_back({kLeaf, 0, h, C::normal});
    edges.push_back({kLeaf, 0, h, C::normal});
    edges.push_back({0, 1, d, C::normal});
    v = 1;
  } else {
    edges.push_back({kLeaf, 0, d, C::normal});
  }
  for (int w = 0; w < wieners; ++w, v += 2) {
    edges.push_back({v, v + 1, h, C::normal});
    edges.push_back({v, v + 1, h, C::normal});
    edges.push_back({v + 1, v + 2, d, C::normal});
  }
  if (out_fork) {
    edges.push_back({v, kLeaf, h, C::normal});
    edges.push_back({v, kLeaf, h, C::normal});
    ++v;
  }
  // The last d-edge points one past the final vertex; turn it into an out-end.
  const int vertices = v;
  for (auto& e : edges)
    if (e.to == vertices) e.to = kLeaf;
  return MonodromyGraph(vertices, std::move(edges));
}

Dyadic sum_over_classes(const std::vector<GraphClass>& classes) {
  Dyadic total(0);
  for (const auto& c : classes) total += Dyadic(c.orderings) * multiplicity_tilde(c.canonical);
  return total;
}

TEST(ValidateRealColoring, DashedFork) {
  const MonodromyGraph g(1, {{kLeaf, 0, 2, C::dashed}, {0, kLeaf, 1, C::normal}, {0, kLeaf, 1, C::normal}});
  EXPECT_TRUE(validate_real_coloring(g));
}

TEST(ValidateRealColoring, NormalEvenCutIntoTwoOddIsRejected) {
  const MonodromyGraph g(1, {{kLeaf, 0, 4, C::normal}, {0, kLeaf, 3, C::normal}, {0, kLeaf, 1, C::normal}});
  EXPECT_TRUE(structural_problems(g).empty());
  EXPECT_FALSE(validate_real_coloring(g));
}

TEST(ValidateRealColoring, AllNormalJoinThenCut) {
  const MonodromyGraph g(2, {{kLeaf, 0, 8, C::normal},
                             {kLeaf, 0, 2, C::normal},
                             {0, 1, 10, C::normal},
                             {1, kLeaf, 6, C::normal},
                             {1, kLeaf, 4, C::normal}});
  EXPECT_TRUE(validate_real_coloring(g));
}

TEST(ValidateRealColoring, BoldOutsideWienerOrForkIsRejected) {
  const MonodromyGraph g(1, {{kLeaf, 0, 4, C::normal}, {0, kLeaf, 2, C::bold}, {0, kLeaf, 2, C::normal}});
  EXPECT_FALSE(validate_real_coloring(g));
}

TEST(ValidateRealColoring, OddDashedIsRejected) {
  const MonodromyGraph g(1, {{kLeaf, 0, 3, C::normal}, {0, kLeaf, 2, C::normal}, {0, kLeaf, 1, C::dashed}});
  EXPECT_FALSE(validate_real_coloring(g));
}

TEST(VertexMultiplicity, FrozenValues) {
  EXPECT_EQ(vertex_multiplicity({VertexKind::join, LocalPicture::even_to_bold_pair, 3, false}), 3);
  EXPECT_EQ(vertex_multiplicity({VertexKind::join, LocalPicture::even_to_even_pair, 0, false}), 4);
  EXPECT_EQ(vertex_multiplicity({VertexKind::cut, LocalPicture::dashed_to_odd_pair, 0, true}), 1);
  EXPECT_EQ(vertex_multiplicity({VertexKind::cut, LocalPicture::dashed_to_odd_pair, 0, false}), 2);
  EXPECT_EQ(vertex_multiplicity({VertexKind::cut, LocalPicture::even_to_bold_pair, 0, false}), 1);
  EXPECT_EQ(vertex_multiplicity({VertexKind::join, LocalPicture::dashed_to_odd_pair, 0, false}), 1);
  EXPECT_EQ(vertex_multiplicity({VertexKind::cut, LocalPicture::odd_to_odd_even, 0, false}), 1);
  EXPECT_EQ(vertex_multiplicity({VertexKind::join, LocalPicture::odd_to_odd_even, 0, false}), 2);
  EXPECT_EQ(vertex_multiplicity({VertexKind::cut, LocalPicture::even_to_even_pair, 0, false}), 2);
  EXPECT_EQ(vertex_multiplicity({VertexKind::cut, LocalPicture::even_to_even_pair, 0, true}), 1);
  EXPECT_THROW(vertex_multiplicity({VertexKind::join, LocalPicture::even_to_bold_pair, 0, false}), InvalidArgument);
}

TEST(MultiplicityTilde, FeatureFormula) {
  GraphFeatureCount fork;
  fork.balanced_forks = 1;
  EXPECT_EQ(multiplicity_tilde(fork), Dyadic::pow2(-1));
  GraphFeatureCount bold_wiener;
  bold_wiener.wieners = 1;
  bold_wiener.balanced_forks = 1;
  bold_wiener.bold_wiener_weights = {2};
  EXPECT_EQ(multiplicity_tilde(bold_wiener), Dyadic::pow2(-1));
  GraphFeatureCount even;
  even.even_unbolded = 1;
  EXPECT_EQ(multiplicity_tilde(even), Dyadic(2));
}

TEST(MultiplicityTilde, RejectsInvalidColoring) {
  const MonodromyGraph g(1, {{kLeaf, 0, 4, C::normal}, {0, kLeaf, 3, C::normal}, {0, kLeaf, 1, C::normal}});
  EXPECT_THROW(multiplicity_tilde(g), InvalidArgument);
}

TEST(MultiplicityTilde, AgreesWithVertexByVertexProduct) {
  for (const auto& q : queries_up_to(5, 5, true))
    for (const auto& c : enumerate_graphs(q)) {
      const auto f = feature_count(c.canonical);
      const Dyadic m = multiplicity_tilde(c.canonical);
      ASSERT_EQ(m, multiplicity_from_vertices(c.canonical)) << c.canonical.to_string();
      ASSERT_LE(static_cast<int>(m.exponent()), f.wieners + f.balanced_forks) << c.canonical.to_string();
      ASSERT_LE(f.bold_wiener_weights.size(), static_cast<std::size_t>(f.wieners));
    }
}

TEST(EnumerateGraphs, HeadlineClasses) {
  const auto classes = enumerate_graphs(query("4", "2,2", 1));
  ASSERT_EQ(classes.size(), 6u);
  std::multiset<Dyadic> values;
  for (const auto& c : classes) {
    EXPECT_EQ(c.orderings, 1);
    values.insert(multiplicity_tilde(c.canonical));
  }
  EXPECT_EQ(values, (std::multiset<Dyadic>{1, 1, 1, 1, 2, 2}));
  EXPECT_EQ(sum_over_classes(classes), Dyadic(8));
}

TEST(EnumerateGraphs, SimplestCoverHasTwoForks) {
  const auto classes = enumerate_graphs(query("2", "1,1", 0));
  ASSERT_EQ(classes.size(), 2u);
  std::set<EdgeColor> fork_colors;
  for (const auto& c : classes) {
    EXPECT_EQ(c.orderings, 1);
    EXPECT_EQ(multiplicity_tilde(c.canonical), Dyadic::pow2(-1));
    for (const auto& e : c.canonical.edges())
      if (e.is_out_end()) fork_colors.insert(e.color);
  }
  EXPECT_EQ(fork_colors, (std::set{C::normal, C::bold}));
}

TEST(EnumerateGraphs, GenusZeroEvenExample) {
  const auto classes = enumerate_graphs(query("8,2", "6,4", 0));
  ASSERT_EQ(classes.size(), 3u);
  for (const auto& c : classes) {
    EXPECT_EQ(c.orderings, 1);
    EXPECT_EQ(multiplicity_tilde(c.canonical), Dyadic(2));
    EXPECT_FALSE(is_chain_of_wieners(c.canonical));
  }
}

TEST(EnumerateGraphs, ClassesAreValidAndOrderingCountsBounded) {
  for (const auto& q : queries_up_to(5, 5, true)) {
    const BigInt bound = factorial(q.branch_points());
    std::set<MonodromyGraph> seen;
    for (const auto& c : enumerate_graphs(q)) {
      ASSERT_TRUE(validate_real_coloring(c.canonical)) << c.canonical.to_string();
      ASSERT_EQ(c.canonical.vertex_count(), q.branch_points());
      ASSERT_EQ(c.canonical.in_weights(), q.mu);
      ASSERT_EQ(c.canonical.out_weights(), q.nu);
      ASSERT_GE(c.orderings, 1);
      ASSERT_LE(c.orderings, bound);
      ASSERT_LE(BigInt(c.orderings), linear_extension_count(c.canonical.vertex_poset()));
      ASSERT_TRUE(seen.insert(c.canonical).second) << "duplicate class";
    }
  }
}

TEST(EnumerateGraphs, OrderedGraphsMatchOrderingCounts) {
  for (const auto& q : queries_up_to(5, 4, true)) {
    BigInt total = 0;
    for (const auto& c : enumerate_graphs(q)) total += c.orderings;
    ASSERT_EQ(total, BigInt(enumerate_ordered_graphs(q).size())) << q.canonical_string();
  }
}

TEST(TropicalHurwitz, FrozenValues) {
  EXPECT_EQ(tropical_hurwitz(query("4", "2,2", 1)), Dyadic(8));
  EXPECT_EQ(tropical_hurwitz(query("4", "2,2", 1, false)), Dyadic(6));
  EXPECT_EQ(tropical_hurwitz(query("2", "2", 1)), Dyadic(1));
  EXPECT_EQ(tropical_hurwitz(query("2", "2", 1, false)), Dyadic::pow2(-1));
  EXPECT_EQ(tropical_hurwitz(query("8,2", "6,4", 0)), Dyadic(6));
}

TEST(TropicalHurwitz, AgreesWithOracle) {
  for (bool flag : {true, false})
    for (const auto& q : queries_up_to(4, 4, flag)) ASSERT_EQ(tropical_hurwitz(q), hurwitz_oracle(q)) << q.canonical_string();
}

TEST(IsChainOfWieners, Examples) {
  const auto g1 = enumerate_graphs(query("2", "2", 1));
  ASSERT_EQ(g1.size(), 2u);
  for (const auto& c : g1) EXPECT_TRUE(is_chain_of_wieners(c.canonical));
  int chains = 0;
  bool saw_uneven_cut = false;
  for (const auto& c : enumerate_graphs(query("4", "2,2", 1))) {
    const auto edges = c.canonical.edges();
    const bool uneven = std::any_of(edges.begin(), edges.end(), [](const GraphEdge& e) { return e.weight == 3; });
    if (uneven) {
      saw_uneven_cut = true;
      EXPECT_FALSE(is_chain_of_wieners(c.canonical));
    }
    if (is_chain_of_wieners(c.canonical)) ++chains;
  }
  EXPECT_TRUE(saw_uneven_cut);
  EXPECT_EQ(chains, 4);
}

TEST(IsChainOfWieners, ComplementaryChainFlipsBoldAndNormal) {
  for (const auto& c : enumerate_graphs(query("4", "2,2", 1))) {
    if (!is_chain_of_wieners(c.canonical)) continue;
    const auto partner = complementary_chain(c.canonical);
    EXPECT_NE(partner, c.canonical);
    EXPECT_TRUE(validate_real_coloring(partner));
    EXPECT_EQ(complementary_chain(partner), c.canonical);
  }
}

TEST(StructureDelta, FrozenValues) {
  EXPECT_EQ(structure_delta(query("2", "2", 1)), Dyadic::pow2(-1));
  EXPECT_EQ(structure_delta(query("4", "2,2", 1)), Dyadic(2));
  EXPECT_EQ(structure_delta(query("3,1", "2,2", 1)), Dyadic(0));
  EXPECT_EQ(structure_delta(query("4", "4", 2)), Dyadic(4));
  EXPECT_EQ(structure_delta(query("2,2", "2,2", 1)), Dyadic(4));
  EXPECT_EQ(structure_delta(query("6", "3,3", 1)), Dyadic::pow2(-1));
}

TEST(StructureDelta, MatchesTropicalDifference) {
  for (const auto& q : queries_up_to(6, 4, true)) {
    const auto both = tropical_hurwitz_both(q);
    ASSERT_EQ(both.with_structure - both.without_structure, structure_delta(q)) << q.canonical_string();
  }
}

TEST(UncoloredMultiplicity, SimplestFork) {
  const MonodromyGraph shape(1, {{kLeaf, 0, 2, C::normal}, {0, kLeaf, 1, C::normal}, {0, kLeaf, 1, C::normal}});
  EXPECT_EQ(real_colorings(shape).size(), 2u);
  EXPECT_EQ(uncolored_multiplicity(shape, true), Dyadic(1));
  EXPECT_EQ(uncolored_multiplicity(shape, false), Dyadic::pow2(-1));
}

TEST(UncoloredMultiplicity, DegreeFourChain) {
  const auto shape = chain_shape(4, false, true, 1);
  ASSERT_TRUE(structural_problems(shape).empty());
  EXPECT_EQ(uncolored_multiplicity(shape, true), Dyadic(6));
  EXPECT_EQ(uncolored_multiplicity(shape, false), Dyadic(4));
  EXPECT_EQ(chain_uncolored_closed_form(4, 1, 1, true), Dyadic(6));
  EXPECT_EQ(chain_uncolored_closed_form(4, 1, 1, false), Dyadic(4));
}

TEST(UncoloredMultiplicity, ChainClosedForms) {
  for (int d : {2, 4, 6, 8})
    for (int in = 0; in <= 1; ++in)
      for (int out = 0; out <= 1; ++out)
        for (int w = 0; w <= 3; ++w) {
          if (in + out + 2 * w == 0 || in + out + 2 * w > 6) continue;
          const auto shape = chain_shape(d, in, out, w);
          ASSERT_TRUE(structural_problems(shape).empty());
          for (bool flag : {true, false})
            EXPECT_EQ(uncolored_multiplicity(shape, flag), chain_uncolored_closed_form(d, w, in + out, flag))
                << "d=" << d << " W=" << w << " B=" << in + out << " structure=" << flag;
        }
}

TEST(UncoloredMultiplicity, SumsOverShapesGiveTheHurwitzNumber) {
  for (bool flag : {true, false})
    for (const auto& q : queries_up_to(5, 4, flag)) {
      std::set<MonodromyGraph> shapes;
      for (const auto& g : enumerate_ordered_graphs(q)) shapes.insert(g.uncolored());
      Dyadic total(0);
      for (const auto& s : shapes) total += uncolored_multiplicity(s, flag);
      ASSERT_EQ(total, tropical_hurwitz(q)) << q.canonical_string();
    }
}

TEST(UncoloredMultiplicity, WienerFreeShapeIsEvenForkPowerTimesOneColoring) {
  int checked = 0;
  for (const auto& q : queries_up_to(5, 4, true)) {
    std::set<MonodromyGraph> shapes;
    for (const auto& g : enumerate_ordered_graphs(q)) shapes.insert(g.uncolored());
    for (const auto& s : shapes) {
      const auto colorings = real_colorings(s);
      if (colorings.empty() || is_chain_of_wieners(colorings.front())) continue;
      const auto f = feature_count(colorings.front());
      if (f.wieners > 0) continue;
      ++checked;
      for (const auto& c : colorings)
        ASSERT_EQ(uncolored_multiplicity(s, true), multiplicity_tilde(c) * Dyadic::pow2(f.even_balanced_forks)) << s.to_string();
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(UncoloredMultiplicity, WienerColoringsOfNonChainsDiffer) {
  const MonodromyGraph shape(4, {{kLeaf, 0, 5, C::normal},
                                 {0, 1, 4, C::normal},
                                 {0, 3, 1, C::normal},
                                 {1, 2, 2, C::normal},
                                 {1, 2, 2, C::normal},
                                 {2, 3, 4, C::normal},
                                 {3, kLeaf, 5, C::normal}});
  const auto colorings = real_colorings(shape);
  ASSERT_EQ(colorings.size(), 2u);
  std::multiset<Dyadic> values;
  for (const auto& c : colorings) values.insert(multiplicity_tilde(c));
  EXPECT_EQ(values, (std::multiset<Dyadic>{4, 8}));
  EXPECT_EQ(uncolored_multiplicity(shape, true), Dyadic(12));
  EXPECT_EQ(uncolored_multiplicity(shape, false), Dyadic(12));
}

TEST(Export, JsonSchema) {
  const MonodromyGraph g(1, {{kLeaf, 0, 2, C::dashed}, {0, kLeaf, 1, C::normal}, {0, kLeaf, 1, C::normal}});
  const auto j = graph_to_json(g);
  EXPECT_EQ(j["vertices"], nlohmann::json::parse("[1]"));
  EXPECT_EQ(j["in_ends"], nlohmann::json::parse("[2]"));
  EXPECT_EQ(j["out_ends"], nlohmann::json::parse("[1,1]"));
  EXPECT_EQ(j["genus"], 0);
  ASSERT_EQ(j["edges"].size(), 3u);
  EXPECT_TRUE(j["edges"][0]["from"].is_null());
  EXPECT_EQ(j["edges"][0]["to"], 1);
  EXPECT_EQ(j["edges"][0]["color"], "dashed");
  EXPECT_EQ(j["edges"][0]["weight"], 2);
  const auto jc = graph_class_to_json(GraphClass{g, 1});
  EXPECT_EQ(jc["o"], "1");
  EXPECT_EQ(jc["m_tilde"], "1/2");
}

TEST(Export, DotStyles) {
  const MonodromyGraph g(1, {{kLeaf, 0, 2, C::dashed}, {0, kLeaf, 1, C::bold}, {0, kLeaf, 1, C::bold}});
  const auto dot = graph_to_dot(g, "fork");
  EXPECT_NE(dot.find("digraph fork {"), std::string::npos);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
  EXPECT_NE(dot.find("style=bold"), std::string::npos);
  EXPECT_NE(dot.find("label=\"2\""), std::string::npos);
}

}  // namespace
}  // namespace hurwitz
