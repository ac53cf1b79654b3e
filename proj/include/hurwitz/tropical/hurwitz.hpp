#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "hurwitz/dyadic.hpp"
#include "hurwitz/query.hpp"
#include "hurwitz/tropical/coloring.hpp"
#include "hurwitz/tropical/enumerate.hpp"
#include "hurwitz/tropical/monodromy_graph.hpp"

namespace hurwitz {

/// μ or ν is (d) or (d/2, d/2).
inline bool is_special_profile(const Partition& p) {
  const int d = p.size();
  if (d % 2 != 0) return false;
  return p == Partition({d}) || p == Partition({d / 2, d / 2});
}

/// Path alternating weight-d edges with weight-d/2 wieners or balanced forks.
inline bool is_chain_of_wieners(const MonodromyGraph& g) {
  const int d = g.degree();
  if (d % 2 != 0 || !is_special_profile(g.in_weights()) || !is_special_profile(g.out_weights())) return false;
  const int half = d / 2;
  const auto stars = g.stars();
  for (const auto& star : stars) {
    const bool cut = star.in.size() == 1 && star.out.size() == 2;
    const bool join = star.in.size() == 2 && star.out.size() == 1;
    if (!cut && !join) return false;
    const auto& big = g.edge(cut ? star.in[0] : star.out[0]);
    const auto& smalls = cut ? star.out : star.in;
    const auto& a = g.edge(smalls[0]);
    const auto& b = g.edge(smalls[1]);
    if (big.weight != d || a.weight != half || b.weight != half) return false;
    const bool fork = cut ? (a.is_out_end() && b.is_out_end()) : (a.is_in_end() && b.is_in_end());
    const bool wiener = a.is_bounded() && b.is_bounded() && a.from == b.from && a.to == b.to;
    if (!fork && !wiener) return false;
  }
  return true;
}

/// The chain with bold and normal swapped on every wiener and fork edge.
inline MonodromyGraph complementary_chain(const MonodromyGraph& g) {
  if (!is_chain_of_wieners(g)) throw InvalidArgument("complementary_chain needs a chain of wieners");
  const int half = g.degree() / 2;
  std::vector<EdgeColor> colors;
  for (const auto& e : g.edges()) {
    EdgeColor c = e.color;
    if (e.weight == half) c = (c == EdgeColor::bold) ? EdgeColor::normal : (c == EdgeColor::normal ? EdgeColor::bold : c);
    colors.push_back(c);
  }
  return g.recolored(colors);
}

/// H̃_g(μ,ν) − H_g(μ,ν) in closed form.
inline Dyadic structure_delta(const HurwitzQuery& q) {
  q.validate();
  const int d = q.degree();
  if (!is_special_profile(q.mu) || !is_special_profile(q.nu)) return Dyadic(0);
  if (d % 4 == 2) return Dyadic::pow2(-1);
  const int b = (q.mu.length() == 2 ? 1 : 0) + (q.nu.length() == 2 ? 1 : 0);
  return Dyadic::pow2(b + 2 * (q.genus - 1));
}

struct TropicalBreakdown {
  Dyadic with_structure;
  Dyadic without_structure;
};

/// Both tropical counts from one enumeration. The count without structure
/// applies the chain-of-wieners rules class by class and is checked against
/// H̃ − structure_delta.
inline TropicalBreakdown tropical_hurwitz_both(const HurwitzQuery& q) {
  const auto classes = enumerate_graphs(q);
  const int d = q.degree();
  std::map<MonodromyGraph, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i].canonical, i);

  Dyadic tilde(0);
  Dyadic plain(0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    const Dyadic o(c.orderings);
    const auto f = feature_count(c.canonical);
    const Dyadic m = multiplicity_tilde(f);
    tilde += o * m;
    if (!is_chain_of_wieners(c.canonical)) {
      plain += o * m;
      continue;
    }
    if (d % 4 == 2) {
      const auto edges = c.canonical.edges();
      const bool dashed = std::any_of(edges.begin(), edges.end(), [](const GraphEdge& e) { return e.color == EdgeColor::dashed; });
      if (!dashed) plain += o * m;
      continue;
    }
    const auto partner = index.find(classify(complementary_chain(c.canonical)).canonical);
    if (partner == index.end()) throw std::logic_error("complementary chain missing from enumeration");
    if (partner->second < i) continue;
    const Dyadic m2 = multiplicity_tilde(classes[partner->second].canonical);
    plain += o * (m + m2 - Dyadic::pow2(f.wieners - 1));
  }
  if (plain != tilde - structure_delta(q)) throw std::logic_error("chain bookkeeping disagrees with structure_delta for " + q.canonical_string());
  return {tilde, plain};
}

/// H̃^trop = Σ o(Γ)·m̃(Γ), or H^trop with the chain rules.
inline Dyadic tropical_hurwitz(const HurwitzQuery& q) {
  auto both = tropical_hurwitz_both(q);
  return q.with_structure ? both.with_structure : both.without_structure;
}

namespace detail {

/// Edges that may be bold: members of a wiener or a balanced fork.
inline std::vector<bool> pair_eligible_edges(const MonodromyGraph& g) {
  const auto edges = g.edges();
  std::vector<bool> eligible(edges.size(), false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i == j || edges[i].weight != edges[j].weight) continue;
      const auto& a = edges[i];
      const auto& b = edges[j];
      const bool wiener = a.is_bounded() && b.is_bounded() && a.from == b.from && a.to == b.to;
      const bool in_fork = a.is_in_end() && b.is_in_end() && a.to == b.to;
      const bool out_fork = a.is_out_end() && b.is_out_end() && a.from == b.from;
      if (wiener || in_fork || out_fork) eligible[i] = true;
    }
  }
  return eligible;
}

}  // namespace detail

/// Every distinct valid real coloring of a vertex-ordered shape.
inline std::vector<MonodromyGraph> real_colorings(const MonodromyGraph& shape) {
  const auto edges = shape.edges();
  const auto eligible = detail::pair_eligible_edges(shape);
  std::vector<std::vector<EdgeColor>> options;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<EdgeColor> o{EdgeColor::normal};
    if (edges[i].is_even()) o.push_back(EdgeColor::dashed);
    if (eligible[i]) o.push_back(EdgeColor::bold);
    options.push_back(std::move(o));
  }
  std::set<MonodromyGraph> found;
  std::vector<EdgeColor> colors(edges.size());
  std::vector<std::size_t> choice(edges.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < edges.size(); ++i) colors[i] = options[i][choice[i]];
    MonodromyGraph g = shape.recolored(colors);
    if (coloring_problems(g).empty()) found.insert(std::move(g));
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == options[k].size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return {found.begin(), found.end()};
}

/// Σ m̃ (with structure) or Σ m (without) over all real colorings of a
/// vertex-ordered shape, by brute force over colorings.
inline Dyadic uncolored_multiplicity(const MonodromyGraph& shape, bool with_structure) {
  if (!structural_problems(shape).empty()) throw InvalidArgument("shape violates the monodromy graph invariants");
  const auto colorings = real_colorings(shape.uncolored());
  Dyadic total(0);
  for (const auto& g : colorings) total += multiplicity_tilde(feature_count(g));
  if (with_structure || colorings.empty() || !is_chain_of_wieners(colorings.front())) return total;
  const int d = shape.degree();
  const auto f = feature_count(colorings.front());
  if (d % 4 == 2) {
    for (const auto& g : colorings) {
      const auto edges = g.edges();
      if (std::any_of(edges.begin(), edges.end(), [](const GraphEdge& e) { return e.color == EdgeColor::dashed; }))
        total -= multiplicity_tilde(feature_count(g));
    }
    return total;
  }
  return total - Dyadic(BigInt(colorings.size() / 2)) * Dyadic::pow2(f.wieners - 1);
}

/// Closed forms of the uncolored chain sums, W wieners and B balanced forks.
inline Dyadic chain_uncolored_closed_form(int d, int wieners, int forks, bool with_structure) {
  if (d % 2 != 0) throw InvalidArgument("chains of wieners have even degree");
  BigInt power = 1;
  if (d % 4 == 0) {
    for (int i = 0; i < wieners; ++i) power *= d / 2 + 4;
    const Dyadic tilde = Dyadic(power) * Dyadic::pow2(forks - 1);
    return with_structure ? tilde : tilde - Dyadic::pow2(forks + 2 * (wieners - 1));
  }
  for (int i = 0; i < wieners; ++i) power *= d;
  const Dyadic plain = Dyadic(power) * Dyadic::pow2(-wieners - 1);
  return with_structure ? plain + Dyadic::pow2(-1) : plain;
}

}  // namespace hurwitz
