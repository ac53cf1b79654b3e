#pragma once

#include <string>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/symgrp/partition.hpp"

namespace hurwitz {

/// Ramification data (μ, ν, g) plus the choice between counting covers with
/// their real structures (H̃) or without (H).
struct HurwitzQuery {
  Partition mu;
  Partition nu;
  int genus = 0;
  bool with_structure = true;

  int degree() const { return mu.size(); }
  /// Number of simple branch points r = 2g - 2 + ℓ(μ) + ℓ(ν).
  int branch_points() const { return 2 * genus - 2 + mu.length() + nu.length(); }

  void validate() const {
    if (mu.empty() || nu.empty()) throw InvalidArgument("μ and ν must be non-empty");
    if (mu.size() != nu.size()) throw InvalidArgument("|μ| must equal |ν|");
    if (genus < 0) throw InvalidArgument("genus must be non-negative");
    if (branch_points() <= 0) throw InvalidArgument("query needs at least one simple branch point (r > 0)");
  }

  /// Stable text form used for cache keys and diagnostics.
  std::string canonical_string() const {
    return "g=" + std::to_string(genus) + ";mu=" + mu.to_string() + ";nu=" + nu.to_string() +
           (with_structure ? ";structure" : ";no-structure");
  }
};

inline HurwitzQuery make_query(Partition mu, Partition nu, int genus, bool with_structure) {
  HurwitzQuery q{std::move(mu), std::move(nu), genus, with_structure};
  q.validate();
  return q;
}

/// Every valid query with degree ≤ max_degree and 0 < r ≤ max_points.
inline std::vector<HurwitzQuery> queries_up_to(int max_degree, int max_points, bool with_structure) {
  std::vector<HurwitzQuery> out;
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& mu : partitions_of(d))
      for (const auto& nu : partitions_of(d))
        for (int g = 0;; ++g) {
          HurwitzQuery q{mu, nu, g, with_structure};
          if (q.branch_points() > max_points) break;
          if (q.branch_points() > 0) out.push_back(q);
        }
  return out;
}

}  // namespace hurwitz
