#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hurwitz/dyadic.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

/// Strict "must come before" relations a < b on the elements {0,...,n-1}.
struct Poset {
  int size = 0;
  std::vector<std::pair<int, int>> relations;

  /// Bitmask of direct predecessors of each element.
  std::vector<std::uint32_t> predecessor_masks() const {
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(size), 0);
    for (auto [a, b] : relations) masks[static_cast<std::size_t>(b)] |= (1u << a);
    return masks;
  }
};

/// Number of linear extensions, by dynamic programming over downsets.
inline BigInt linear_extension_count(const Poset& poset) {
  if (poset.size > 24) throw InvalidArgument("poset too large for downset DP");
  const auto pred = poset.predecessor_masks();
  const std::uint32_t full = (poset.size == 32) ? ~0u : ((1u << poset.size) - 1);
  std::vector<BigInt> ways(static_cast<std::size_t>(full) + 1, 0);
  ways[0] = 1;
  for (std::uint32_t set = 0; set < full; ++set) {
    if (ways[set] == 0) continue;
    for (int x = 0; x < poset.size; ++x) {
      const std::uint32_t bit = 1u << x;
      if ((set & bit) == 0 && (pred[static_cast<std::size_t>(x)] & ~set) == 0) ways[set | bit] += ways[set];
    }
  }
  return ways[full];
}

/// Calls visit(order) for every linear extension; order[k] is the element
/// placed at position k.
inline void for_each_linear_extension(const Poset& poset, const std::function<void(const std::vector<int>&)>& visit) {
  const auto pred = poset.predecessor_masks();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(poset.size));
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t placed) {
    if (static_cast<int>(order.size()) == poset.size) {
      visit(order);
      return;
    }
    for (int x = 0; x < poset.size; ++x) {
      const std::uint32_t bit = 1u << x;
      if ((placed & bit) != 0 || (pred[static_cast<std::size_t>(x)] & ~placed) != 0) continue;
      order.push_back(x);
      extend(placed | bit);
      order.pop_back();
    }
  };
  extend(0);
}

}  // namespace hurwitz
