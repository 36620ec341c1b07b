#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "vinc/permutation.hpp"

namespace vinc {

/// A vincular pattern: an underlying word, a set of glued letter pairs
/// that must sit in adjacent host positions, and optional boundary hooks
/// pinning an occurrence to the first or last host position.
///
/// Text notation: letters are digits; a dash between two letters allows a
/// gap, its absence requires adjacency; "[" pins the start and "]" the
/// end. So "2-31" is the word 231 with its last two letters glued,
/// "2-3-1" is the classical 231, and "1-2]" must end at the final host
/// position.
class VincularPattern {
 public:
  /// Bit i-1 of adjacency_mask glues letters i and i+1 (1-based i < k).
  VincularPattern(Permutation word, std::uint32_t adjacency_mask,
                  bool begin_hook = false, bool end_hook = false);

  static VincularPattern classical(Permutation word);
  static VincularPattern parse(std::string_view text);

  const Permutation& word() const { return word_; }
  int length() const { return word_.size(); }

  /// Letters i and i+1 (1-based, 1 <= i < k) must be adjacent in the host.
  bool adjacent_at(int i) const { return (adjacency_ >> (i - 1)) & 1u; }
  std::uint32_t adjacency_mask() const { return adjacency_; }
  bool begin_hook() const { return begin_hook_; }
  bool end_hook() const { return end_hook_; }

  bool is_classical() const;
  bool is_consecutive() const;
  /// Length 3, exactly one glued pair, no hooks.
  bool is_proper() const;

  std::string str() const;

  auto operator<=>(const VincularPattern&) const = default;

 private:
  Permutation word_;
  std::uint32_t adjacency_;
  bool begin_hook_;
  bool end_hook_;
};

/// Number of index sequences i_1 < ... < i_k whose host letters are
/// order-isomorphic to the word, with glued pairs adjacent and hooks at
/// the host boundary. Returns 0 when the pattern is longer than the host.
std::int64_t count_occurrences(const VincularPattern& pattern,
                               const Permutation& host);

/// Word reversed, glued pairs mirrored, hooks swapped.
VincularPattern reverse_pattern(const VincularPattern& p);

/// Word complemented; glue and hooks unchanged.
VincularPattern complement_pattern(const VincularPattern& p);

}  // namespace vinc
