#pragma once

#include <stdexcept>
#include <string>

#include "hurwitz/dyadic.hpp"

namespace hurwitz {

/// Malformed input: bad permutation text, mismatched degrees, invalid query.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force search would exceed the configured feasibility cap.
class InfeasibleQuery : public std::runtime_error {
 public:
  InfeasibleQuery(const std::string& what, BigInt estimated_size)
      : std::runtime_error(what + " (estimated search space " + estimated_size.str() + ")"),
        estimated_size_(std::move(estimated_size)) {}
  const BigInt& estimated_size() const { return estimated_size_; }

 private:
  BigInt estimated_size_;
};

/// Genus-zero evaluation requested on a wall, where the function is undefined.
class OnWallError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hurwitz
