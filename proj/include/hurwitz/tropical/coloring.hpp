#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hurwitz/dyadic.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/tropical/monodromy_graph.hpp"

namespace hurwitz {

enum class VertexKind : std::uint8_t { cut, join };

/// The four admissible local color pictures, named from the side with one
/// edge ("big") to the side with two edges ("small"). Each occurs as a cut
/// (big edge incoming) or, mirrored, as a join (big edge outgoing).
enum class LocalPicture : std::uint8_t {
  even_to_bold_pair,   ///< even normal ↔ two bold edges of equal weight
  dashed_to_odd_pair,  ///< even dashed ↔ two odd normal edges
  odd_to_odd_even,     ///< odd normal ↔ odd normal + even normal
  even_to_even_pair,   ///< even normal ↔ two even normal edges
};

struct VertexType {
  VertexKind kind = VertexKind::cut;
  LocalPicture picture = LocalPicture::even_to_even_pair;
  /// Weight of each small edge; only meaningful for the bold-pair picture.
  int small_weight = 0;
  /// The two small edges of a cut form a wiener or a balanced out-fork.
  bool indistinguishable = false;
};

/// Number of transpositions realizing the vertex, given the involution on
/// the incoming cycles (real cut-and-join multiplicities).
inline int vertex_multiplicity(const VertexType& t) {
  if (t.kind == VertexKind::cut) {
    switch (t.picture) {
      case LocalPicture::even_to_bold_pair: return 1;
      case LocalPicture::dashed_to_odd_pair: return t.indistinguishable ? 1 : 2;
      case LocalPicture::odd_to_odd_even: return 1;
      case LocalPicture::even_to_even_pair: return t.indistinguishable ? 1 : 2;
    }
  } else if (t.kind == VertexKind::join) {
    switch (t.picture) {
      case LocalPicture::even_to_bold_pair:
        if (t.small_weight <= 0) throw InvalidArgument("bold join needs the bold edge weight");
        return t.small_weight;
      case LocalPicture::dashed_to_odd_pair: return 1;
      case LocalPicture::odd_to_odd_even: return 2;
      case LocalPicture::even_to_even_pair: return 4;
    }
  }
  throw InvalidArgument("unknown local vertex type");
}

/// Reads the local picture at vertex v; nullopt when the colors, parities
/// and orientation fit none of the admissible pictures.
inline std::optional<VertexType> classify_vertex(const MonodromyGraph& g, const VertexStar& star) {
  VertexType t;
  const GraphEdge* big = nullptr;
  const GraphEdge* a = nullptr;
  const GraphEdge* b = nullptr;
  if (star.in.size() == 1 && star.out.size() == 2) {
    t.kind = VertexKind::cut;
    big = &g.edge(star.in[0]);
    a = &g.edge(star.out[0]);
    b = &g.edge(star.out[1]);
    t.indistinguishable = a->weight == b->weight &&
                          ((a->is_out_end() && b->is_out_end()) || (a->is_bounded() && b->is_bounded() && a->to == b->to));
  } else if (star.in.size() == 2 && star.out.size() == 1) {
    t.kind = VertexKind::join;
    big = &g.edge(star.out[0]);
    a = &g.edge(star.in[0]);
    b = &g.edge(star.in[1]);
  } else {
    return std::nullopt;
  }
  if (big->weight != a->weight + b->weight) return std::nullopt;
  const auto normal = EdgeColor::normal;
  if (big->is_even() && big->color == normal && a->color == EdgeColor::bold && b->color == EdgeColor::bold) {
    if (a->weight != b->weight) return std::nullopt;
    t.picture = LocalPicture::even_to_bold_pair;
    t.small_weight = a->weight;
    return t;
  }
  if (a->color != normal || b->color != normal) return std::nullopt;
  if (big->is_even() && big->color == EdgeColor::dashed) {
    if (a->is_even() || b->is_even()) return std::nullopt;
    t.picture = LocalPicture::dashed_to_odd_pair;
    return t;
  }
  if (big->color != normal) return std::nullopt;
  if (!big->is_even()) {
    t.picture = LocalPicture::odd_to_odd_even;  // parity forces one odd, one even
    return t;
  }
  if (!a->is_even() || !b->is_even()) return std::nullopt;
  t.picture = LocalPicture::even_to_even_pair;
  return t;
}

/// Reasons the coloring is not real (empty when it is). The graph is
/// assumed to satisfy the non-color invariants.
inline std::vector<std::string> coloring_problems(const MonodromyGraph& g) {
  std::vector<std::string> problems;
  const auto stars = g.stars();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& star = stars[static_cast<std::size_t>(v)];
    const std::string where = "vertex " + std::to_string(v + 1);
    const auto type = classify_vertex(g, star);
    if (!type) {
      problems.push_back(where + " has no admissible color picture");
      continue;
    }
    if (type->picture != LocalPicture::even_to_bold_pair) continue;
    // The bold pair must form a wiener or a balanced fork.
    const auto& smalls = type->kind == VertexKind::cut ? star.out : star.in;
    const auto& a = g.edge(smalls[0]);
    const auto& b = g.edge(smalls[1]);
    const bool fork = type->kind == VertexKind::cut ? (a.is_out_end() && b.is_out_end()) : (a.is_in_end() && b.is_in_end());
    const bool wiener = a.is_bounded() && b.is_bounded() && a.from == b.from && a.to == b.to;
    if (!fork && !wiener) problems.push_back(where + " has bold edges outside a wiener or fork");
  }
  return problems;
}

inline bool validate_real_coloring(const MonodromyGraph& g) {
  return structural_problems(g).empty() && coloring_problems(g).empty();
}

struct GraphFeatureCount {
  int wieners = 0;           ///< W
  int balanced_forks = 0;    ///< B, in-forks and out-forks together
  int even_unbolded = 0;     ///< E: dashed or normal even bounded edges
  std::vector<int> bold_wiener_weights;
  int even_balanced_forks = 0;  ///< B′
  int left_balanced_forks = 0;
};

inline GraphFeatureCount feature_count(const MonodromyGraph& g) {
  GraphFeatureCount f;
  std::map<std::tuple<int, int, int>, std::vector<EdgeColor>> parallel;
  for (const auto& e : g.edges()) {
    if (!e.is_bounded()) continue;
    parallel[{e.from, e.to, e.weight}].push_back(e.color);
    if (e.is_even() && e.color != EdgeColor::bold) ++f.even_unbolded;
  }
  for (const auto& [key, colors] : parallel) {
    if (colors.size() != 2) continue;
    ++f.wieners;
    if (colors[0] == EdgeColor::bold && colors[1] == EdgeColor::bold) f.bold_wiener_weights.push_back(std::get<2>(key));
  }
  const auto stars = g.stars();
  for (const auto& star : stars) {
    auto check = [&](const std::vector<std::size_t>& side, bool incoming) {
      if (side.size() != 2) return;
      const auto& a = g.edge(side[0]);
      const auto& b = g.edge(side[1]);
      const bool ends = incoming ? (a.is_in_end() && b.is_in_end()) : (a.is_out_end() && b.is_out_end());
      if (!ends || a.weight != b.weight) return;
      ++f.balanced_forks;
      if (a.is_even()) ++f.even_balanced_forks;
      if (incoming) ++f.left_balanced_forks;
    };
    check(star.in, true);
    check(star.out, false);
  }
  return f;
}

/// m̃ = 2^{E-W-B} · Π (weights of bold wieners).
inline Dyadic multiplicity_tilde(const GraphFeatureCount& f) {
  BigInt product = 1;
  for (int w : f.bold_wiener_weights) product *= w;
  return Dyadic(product) * Dyadic::pow2(f.even_unbolded - f.wieners - f.balanced_forks);
}

inline Dyadic multiplicity_tilde(const MonodromyGraph& g) {
  if (!validate_real_coloring(g)) throw InvalidArgument("graph does not carry a real coloring: " + g.to_string());
  return multiplicity_tilde(feature_count(g));
}

/// m̃ assembled vertex by vertex: involution choices on the in-ends divided
/// by the in-end weights and left forks, times the cut-and-join
/// multiplicity of every vertex. Agrees with multiplicity_tilde on every
/// real monodromy graph.
inline Dyadic multiplicity_from_vertices(const MonodromyGraph& g) {
  if (!validate_real_coloring(g)) throw InvalidArgument("graph does not carry a real coloring: " + g.to_string());
  BigInt numerator = 1;
  BigInt weights = 1;
  for (const auto& e : g.edges()) {
    if (!e.is_in_end()) continue;
    weights *= e.weight;
    if (e.color == EdgeColor::bold) continue;  // counted once per pair below
    numerator *= e.is_even() ? e.weight / 2 : e.weight;
  }
  const auto stars = g.stars();
  int left_forks = 0;
  for (const auto& star : stars) {
    const auto type = classify_vertex(g, star);
    numerator *= vertex_multiplicity(*type);
    if (type->kind == VertexKind::join) {
      const auto& a = g.edge(star.in[0]);
      const auto& b = g.edge(star.in[1]);
      if (a.is_in_end() && b.is_in_end() && a.weight == b.weight) ++left_forks;
      if (a.is_in_end() && a.color == EdgeColor::bold) numerator *= a.weight;
    }
  }
  return Dyadic(numerator).divided_by(weights) * Dyadic::pow2(-left_forks);
}

}  // namespace hurwitz
