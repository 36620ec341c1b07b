#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vinc/error.hpp"

namespace vinc {

/// A permutation of {1..n} in one-line notation. n = 0 (the empty
/// permutation) is a legal value. Immutable after construction.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  /// Accepts the digit form "425163" (values 1..9) or the comma form
  /// "4,2,5,1,6,3" (any n). The empty string parses to the empty
  /// permutation. Throws ParseError with position and reason.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// 0-based position, 1-based value.
  int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return values_; }

  /// 0-based position of a value in 1..n.
  int index_of(int value) const;

  /// Digit form for n <= 9, comma-separated otherwise, "" for n = 0.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// Block concatenation with the left block below the right block in value.
Permutation direct_sum(const Permutation& a, const Permutation& b);

/// Block concatenation with the left block above the right block in value.
Permutation skew_sum(const Permutation& a, const Permutation& b);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

/// Classical pattern containment: some subsequence of p is
/// order-isomorphic to q.
bool contains(const Permutation& p, const Permutation& q);
bool avoids(const Permutation& p, const Permutation& q);

/// Splits a non-empty 132-avoider p as (alpha + 1) skew beta: the prefix
/// up to and including the maximum is alpha + 1, the suffix after it is
/// beta. Both parts avoid 132 and the split is unique.
/// Throws PreconditionError if p is empty or contains 132.
std::pair<Permutation, Permutation> decompose_left(const Permutation& p);

/// Splits a non-empty 132-avoider p as alpha skew (beta + 1): the final
/// entry is the maximum of the bottom-right block, which holds exactly
/// the values {1..p_n}. Both parts avoid 132 and the split is unique.
/// Throws PreconditionError if p is empty or contains 132.
std::pair<Permutation, Permutation> decompose_right(const Permutation& p);

}  // namespace vinc
