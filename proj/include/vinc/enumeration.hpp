#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vinc/permutation.hpp"

namespace vinc {

/// One of the six avoidance classes S_n(sigma) for a classical length-3
/// pattern sigma.
class AvoidanceClass {
 public:
  explicit AvoidanceClass(Permutation sigma);
  static AvoidanceClass parse(std::string_view text);

  const Permutation& sigma() const { return sigma_; }
  std::string str() const { return sigma_.str(); }

  auto operator<=>(const AvoidanceClass&) const = default;

 private:
  Permutation sigma_;
};

/// The six classes in lexicographic sigma order.
std::vector<AvoidanceClass> all_avoidance_classes();

/// Enumeration ceilings. The VINC_MAX_N environment variable, when set,
/// overrides both.
struct EnumerationLimits {
  int full_sn = 8;
  int avoiders = 12;
};
EnumerationLimits enumeration_limits();

/// All of S_n in lexicographic order. Throws when n exceeds the ceiling.
std::vector<Permutation> all_permutations(int n);

/// The sigma-avoiders of length n in lexicographic order, generated by
/// prefix-pruned backtracking. Throws when n exceeds the ceiling.
std::vector<Permutation> avoiders(const AvoidanceClass& cls, int n);

/// S_n(132) built structurally from the block form (alpha + 1) skew beta
/// over all smaller avoider pairs, then sorted. Agrees with the generic
/// generator.
std::vector<Permutation> avoiders_132_structural(int n);

std::int64_t catalan_number(int n);

}  // namespace vinc
