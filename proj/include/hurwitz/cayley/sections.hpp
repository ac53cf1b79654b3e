#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hurwitz/cayley/paths.hpp"
#include "hurwitz/oracle/graph.hpp"
#include "hurwitz/oracle/tuples.hpp"
#include "hurwitz/tropical/monodromy_graph.hpp"

namespace hurwitz {

enum class SectionType : std::uint8_t { odd_normal, even_normal, even_dashed, bold_pair };

inline const char* section_type_name(SectionType t) {
  switch (t) {
    case SectionType::odd_normal: return "odd normal";
    case SectionType::even_normal: return "even normal";
    case SectionType::even_dashed: return "even dashed";
    case SectionType::bold_pair: return "bold pair";
  }
  return "?";
}

struct SectionComponent {
  std::vector<int> points;
  SectionType type = SectionType::odd_normal;
};

/// Edge types at cross-section i, read from the components of
/// m(σᵢ∘γ) ∪ m(γ): balanced path → odd normal, one σ′-edge fewer → even
/// normal, one more → even dashed, alternating cycle → bold pair.
inline std::vector<SectionComponent> cross_section_types(const MonodromyTuple& t, int i) {
  if (i < 0 || i > t.length()) throw InvalidArgument("cross-section index out of range");
  const auto& sigma_i = t.partials[static_cast<std::size_t>(i)];
  const Matching s = matching_of(compose(sigma_i, t.gamma));
  const Matching g = matching_of(t.gamma);
  std::vector<SectionComponent> out;
  for (const auto& c : matching_components(s, g)) {
    SectionComponent sc{c.vertices, SectionType::odd_normal};
    if (c.cycle)
      sc.type = SectionType::bold_pair;
    else if (c.s_edges + 1 == c.t_edges)
      sc.type = SectionType::even_normal;
    else if (c.s_edges == c.t_edges + 1)
      sc.type = SectionType::even_dashed;
    else if (c.s_edges != c.t_edges)
      throw std::logic_error("alternating path with unbalanced edge counts");
    out.push_back(std::move(sc));
  }
  return out;
}

using SectionSignature = std::vector<std::pair<int, EdgeColor>>;

/// (weight, color) of every edge crossing section i, sorted.
inline SectionSignature section_signature(const std::vector<SectionComponent>& components) {
  SectionSignature sig;
  for (const auto& c : components) {
    const int w = static_cast<int>(c.points.size());
    switch (c.type) {
      case SectionType::odd_normal:
      case SectionType::even_normal: sig.emplace_back(w, EdgeColor::normal); break;
      case SectionType::even_dashed: sig.emplace_back(w, EdgeColor::dashed); break;
      case SectionType::bold_pair:
        sig.emplace_back(w / 2, EdgeColor::bold);
        sig.emplace_back(w / 2, EdgeColor::bold);
        break;
    }
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

/// Edges of a vertex-ordered graph alive between vertices i-1 and i.
inline SectionSignature graph_cross_section(const MonodromyGraph& g, int i) {
  SectionSignature sig;
  for (const auto& e : g.edges()) {
    const bool started = e.is_in_end() || e.from < i;
    const bool ended = !e.is_out_end() && e.to < i;
    if (started && !ended) sig.emplace_back(e.weight, e.color);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

/// Steps i (1-based) of the tuple whose cut/join kind breaks the
/// translation rule: step i of σ₀→…→σᵣ is a cut iff step i of the walk
/// m(σ₀∘γ)→…→m(σᵣ∘γ) removes a pair, except at vertices adjacent to a bold
/// edge, where the two kinds are exchanged.
inline std::vector<int> translation_kind_mismatches(const MonodromyTuple& t) {
  const auto g = monodromy_graph_of_tuple(t);
  const auto stars = g.stars();
  std::vector<int> bad;
  for (int i = 1; i <= t.length(); ++i) {
    const auto& before = t.partials[static_cast<std::size_t>(i - 1)];
    const auto& after = t.partials[static_cast<std::size_t>(i)];
    const bool cut = cycle_type(after).length() > cycle_type(before).length();
    const bool removes_pair =
        matching_of(compose(after, t.gamma)).pair_count() < matching_of(compose(before, t.gamma)).pair_count();
    const auto& star = stars[static_cast<std::size_t>(i - 1)];
    bool bold = false;
    for (auto e : star.in) bold = bold || g.edge(e).color == EdgeColor::bold;
    for (auto e : star.out) bold = bold || g.edge(e).color == EdgeColor::bold;
    if (cut != (removes_pair != bold)) bad.push_back(i);
  }
  return bad;
}

}  // namespace hurwitz
