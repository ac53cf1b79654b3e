#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "hurwitz/dyadic.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/query.hpp"
#include "hurwitz/symgrp/enumerate.hpp"
#include "hurwitz/symgrp/partition.hpp"
#include "hurwitz/symgrp/permutation.hpp"

namespace hurwitz {

struct OracleConfig {
  int max_degree = 6;
  int max_transpositions = 6;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

/// (γ, σ, τ₁..τᵣ) with the partial products σ₀ = σ, σᵢ = τᵢ∘σᵢ₋₁.
struct MonodromyTuple {
  Permutation gamma;
  Permutation sigma;
  std::vector<Permutation> taus;
  std::vector<Permutation> partials;

  int degree() const { return sigma.degree(); }
  int length() const { return static_cast<int>(taus.size()); }

  friend bool operator==(const MonodromyTuple& a, const MonodromyTuple& b) {
    return a.gamma == b.gamma && a.sigma == b.sigma && a.taus == b.taus;
  }
};

inline std::vector<Permutation> partial_products(const Permutation& sigma, const std::vector<Permutation>& taus) {
  std::vector<Permutation> out{sigma};
  for (const auto& t : taus) out.push_back(compose(t, out.back()));
  return out;
}

inline MonodromyTuple make_tuple(Permutation gamma, Permutation sigma, std::vector<Permutation> taus) {
  auto partials = partial_products(sigma, taus);
  return MonodromyTuple{std::move(gamma), std::move(sigma), std::move(taus), std::move(partials)};
}

/// γ∘ρ∘γ = ρ⁻¹, i.e. (γ∘ρ)² = id.
inline bool inverts(const Permutation& gamma, const Permutation& rho) {
  for (int x = 0; x < rho.degree(); ++x)
    if (gamma(rho(gamma(rho(x)))) != x) return false;
  return true;
}

/// Every involution (identity included) inverting all the given permutations.
inline std::vector<Permutation> compatible_involutions(const std::vector<Permutation>& partials) {
  if (partials.empty()) throw InvalidArgument("compatible_involutions needs at least one permutation");
  const int d = partials.front().degree();
  for (const auto& p : partials)
    if (p.degree() != d) throw InvalidArgument("degree mismatch");
  std::vector<Permutation> out;
  for (auto& g : all_involutions(d))
    if (std::all_of(partials.begin(), partials.end(), [&](const Permutation& p) { return inverts(g, p); })) out.push_back(std::move(g));
  return out;
}

/// Number of permutations of the given cycle type, d!/z_μ.
inline BigInt conjugacy_class_size(const Partition& type) {
  BigInt z = 1;
  std::map<int, int> mult;
  for (int p : type.parts()) {
    z *= p;
    z *= ++mult[p];
  }
  return factorial(type.size()) / z;
}

inline BigInt tuple_search_space(const HurwitzQuery& q) {
  const int d = q.degree();
  BigInt size = conjugacy_class_size(q.mu);
  for (int i = 0; i < q.branch_points(); ++i) size *= d * (d - 1) / 2;
  return size;
}

namespace detail {

inline void check_feasible(const HurwitzQuery& q, const OracleConfig& config) {
  q.validate();
  if (q.degree() > config.max_degree || q.branch_points() > config.max_transpositions)
    throw InfeasibleQuery("tuple enumeration exceeds the configured cap (d <= " + std::to_string(config.max_degree) +
                              ", r <= " + std::to_string(config.max_transpositions) + ")",
                          tuple_search_space(q));
}

/// Depth-first search over τ₁..τᵣ for a fixed σ, keeping the set of
/// involutions that invert every partial product so far.
class TupleSearch {
 public:
  using Leaf = std::function<void(const std::vector<Permutation>& taus, const std::vector<Permutation>& partials,
                                  const std::vector<Permutation>& gammas)>;

  TupleSearch(const HurwitzQuery& q, const std::vector<Permutation>& involutions)
      : q_(q), d_(q.degree()), r_(q.branch_points()), involutions_(involutions), transpositions_(all_transpositions(d_)) {}

  void run(const Permutation& sigma, const Leaf& leaf) {
    std::vector<Permutation> gammas;
    for (const auto& g : involutions_)
      if (inverts(g, sigma)) gammas.push_back(g);
    if (gammas.empty()) return;
    taus_.clear();
    partials_.assign(1, sigma);
    extend(gammas, leaf);
  }

 private:
  void extend(const std::vector<Permutation>& gammas, const Leaf& leaf) {
    const int placed = static_cast<int>(taus_.size());
    if (placed == r_) {
      if (cycle_type(partials_.back()) != q_.nu) return;
      std::vector<Permutation> generators = taus_;
      generators.push_back(partials_.front());
      if (!is_transitive(generators, d_)) return;
      leaf(taus_, partials_, gammas);
      return;
    }
    const int remaining = r_ - placed - 1;
    for (const auto& t : transpositions_) {
      Permutation next = compose(t, partials_.back());
      if (std::abs(next.cycle_count() - q_.nu.length()) > remaining) continue;
      std::vector<Permutation> kept;
      for (const auto& g : gammas)
        if (inverts(g, next)) kept.push_back(g);
      if (kept.empty()) continue;
      taus_.push_back(t);
      partials_.push_back(std::move(next));
      extend(kept, leaf);
      taus_.pop_back();
      partials_.pop_back();
    }
  }

  const HurwitzQuery& q_;
  int d_;
  int r_;
  const std::vector<Permutation>& involutions_;
  std::vector<Permutation> transpositions_;
  std::vector<Permutation> taus_;
  std::vector<Permutation> partials_;
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace detail

/// Visits every tuple of the lemma on tuples, σ-major in lexicographic
/// order. Without structure, one representative (smallest γ) per (σ, τ).
inline void enumerate_tuples(const HurwitzQuery& q, const std::function<void(const MonodromyTuple&)>& visit,
                             const OracleConfig& config = {}) {
  detail::check_feasible(q, config);
  const auto involutions = all_involutions(q.degree());
  detail::TupleSearch search(q, involutions);
  for (const auto& sigma : permutations_of_type(q.mu)) {
    search.run(sigma, [&](const auto& taus, const auto& partials, const auto& gammas) {
      const std::size_t emitted = q.with_structure ? gammas.size() : 1;
      for (std::size_t k = 0; k < emitted; ++k) visit(MonodromyTuple{gammas[k], partials.front(), taus, partials});
    });
  }
}

inline std::vector<MonodromyTuple> collect_tuples(const HurwitzQuery& q, const OracleConfig& config = {}) {
  std::vector<MonodromyTuple> out;
  enumerate_tuples(q, [&](const MonodromyTuple& t) { out.push_back(t); }, config);
  return out;
}

/// Number of tuples; σ choices are split across worker threads.
inline BigInt count_tuples(const HurwitzQuery& q, const OracleConfig& config = {}) {
  detail::check_feasible(q, config);
  const auto involutions = all_involutions(q.degree());
  const auto sigmas = permutations_of_type(q.mu);
  const unsigned workers = std::min<unsigned>(detail::resolve_threads(config.threads), static_cast<unsigned>(sigmas.size()));
  std::vector<std::uint64_t> counts(sigmas.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    detail::TupleSearch search(q, involutions);
    for (std::size_t i = next++; i < sigmas.size(); i = next++) {
      std::uint64_t c = 0;
      search.run(sigmas[i], [&](const auto&, const auto&, const auto& gammas) { c += q.with_structure ? gammas.size() : 1; });
      counts[i] = c;
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  BigInt total = 0;
  for (auto c : counts) total += c;
  return total;
}

/// H̃_g(μ,ν) or H_g(μ,ν) as (number of tuples)/d!.
inline Dyadic hurwitz_oracle(const HurwitzQuery& q, const OracleConfig& config = {}) {
  return Dyadic(count_tuples(q, config)).divided_by(factorial(q.degree()));
}

/// "gamma=<cycles> sigma=<cycles> taus=<cycles>;<cycles>;..."
inline std::string to_string(const MonodromyTuple& t) {
  std::string s = "gamma=" + to_cycle_string(t.gamma) + " sigma=" + to_cycle_string(t.sigma) + " taus=";
  for (std::size_t i = 0; i < t.taus.size(); ++i) {
    if (i > 0) s += ';';
    s += to_cycle_string(t.taus[i]);
  }
  return s;
}

inline MonodromyTuple parse_tuple(std::string_view text, int degree) {
  // Cycles may contain spaces, so fields are cut at the next key instead.
  const auto g0 = text.find("gamma=");
  const auto s0 = text.find(" sigma=");
  const auto t0 = text.find(" taus=");
  if (g0 == std::string_view::npos || s0 == std::string_view::npos || t0 == std::string_view::npos || !(g0 < s0 && s0 < t0))
    throw InvalidArgument("tuple text must read gamma=... sigma=... taus=...");
  Permutation gamma = parse_cycles(text.substr(g0 + 6, s0 - g0 - 6), degree);
  Permutation sigma = parse_cycles(text.substr(s0 + 7, t0 - s0 - 7), degree);
  std::vector<Permutation> taus;
  std::string_view rest = text.substr(t0 + 6);
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    taus.push_back(parse_cycles(rest.substr(0, semi), degree));
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  return make_tuple(std::move(gamma), std::move(sigma), std::move(taus));
}

/// Reasons t violates the tuple conditions (empty when it is valid).
inline std::vector<std::string> tuple_problems(const MonodromyTuple& t) {
  std::vector<std::string> problems;
  const int d = t.degree();
  if (!t.gamma.is_involution()) problems.emplace_back("gamma is not an involution");
  for (const auto& tau : t.taus)
    if (!tau.is_transposition()) problems.emplace_back("tau " + to_cycle_string(tau) + " is not a transposition");
  for (const auto& p : partial_products(t.sigma, t.taus))
    if (!inverts(t.gamma, p)) problems.emplace_back("gamma does not invert " + to_cycle_string(p));
  std::vector<Permutation> generators = t.taus;
  generators.push_back(t.sigma);
  if (!is_transitive(generators, d)) problems.emplace_back("monodromy group is not transitive");
  return problems;
}

}  // namespace hurwitz
