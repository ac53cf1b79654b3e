#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "hurwitz/symgrp/partition.hpp"
#include "hurwitz/symgrp/permutation.hpp"

namespace hurwitz {

/// All d! permutations in lexicographic order of image arrays.
inline std::vector<Permutation> all_permutations(int d) {
  std::vector<int> images(static_cast<std::size_t>(d));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

inline std::vector<Permutation> permutations_of_type(const Partition& type) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(type.size()))
    if (cycle_type(p) == type) out.push_back(std::move(p));
  return out;
}

namespace detail {
inline void extend_involutions(std::vector<int>& images, int next, std::vector<Permutation>& out) {
  const int d = static_cast<int>(images.size());
  while (next < d && images[static_cast<std::size_t>(next)] != -1) ++next;
  if (next == d) {
    out.emplace_back(images);
    return;
  }
  images[static_cast<std::size_t>(next)] = next;
  extend_involutions(images, next + 1, out);
  for (int other = next + 1; other < d; ++other) {
    if (images[static_cast<std::size_t>(other)] != -1) continue;
    images[static_cast<std::size_t>(next)] = other;
    images[static_cast<std::size_t>(other)] = next;
    extend_involutions(images, next + 1, out);
    images[static_cast<std::size_t>(other)] = -1;
  }
  images[static_cast<std::size_t>(next)] = -1;
}
}  // namespace detail

/// All involutions of S_d, identity included, sorted.
inline std::vector<Permutation> all_involutions(int d) {
  std::vector<int> images(static_cast<std::size_t>(d), -1);
  std::vector<Permutation> out;
  detail::extend_involutions(images, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// The C(d,2) transpositions, ordered by (a, b).
inline std::vector<Permutation> all_transpositions(int d) {
  std::vector<Permutation> out;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) out.push_back(Permutation::transposition(d, a, b));
  return out;
}

}  // namespace hurwitz
