#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vinc/bijections.hpp"
#include "vinc/enumeration.hpp"
#include "vinc/statistics.hpp"

namespace vinc {

/// Value-tuple histogram of a multistatistic over a set of permutations.
/// Keys are sorted lexicographically; equality is exact.
class Distribution {
 public:
  using Key = std::vector<std::int64_t>;

  void add(Key key, std::int64_t count = 1);
  const std::map<Key, std::int64_t>& entries() const { return entries_; }
  std::int64_t total() const { return total_; }

  bool operator==(const Distribution&) const = default;

 private:
  std::map<Key, std::int64_t> entries_;
  std::int64_t total_ = 0;
};

Distribution distribution_over(const MultiStatistic& ms,
                               std::span<const Permutation> perms);
Distribution distribution(const MultiStatistic& ms, const AvoidanceClass& cls,
                          int n);

/// True iff a and b induce identical tables on S_n(sigma) for every
/// 0 <= n <= n_max. Throws std::invalid_argument on arity mismatch.
bool equidistributed(const MultiStatistic& a, const MultiStatistic& b,
                     const AvoidanceClass& cls, int n_max);

/// The first (n, key, count_a, count_b) where the tables differ, if any.
struct DistributionDifference {
  int n;
  Distribution::Key key;
  std::int64_t count_a;
  std::int64_t count_b;
};
std::optional<DistributionDifference> first_difference(
    const MultiStatistic& a, const MultiStatistic& b, const AvoidanceClass& cls,
    int n_max);

enum class TheoremId {
  theorem1,  // phi: involution, Prop-1 hook counts, the 4-tuple exchange
  theorem2,  // psi: bijection, case correspondence, (2-13,des) = (2-31,des)
  theorem3,  // mu: bijection, (21-3,des,1-2]) = (2-13,des,1-2])
  prop1,     // hook counts swap under phi
  prop2,     // psi case correspondence alone
  prop4,     // inverse carries (23-1,3-12,des) to (3-12,23-1,des)
  lemma1,    // (2-13) of p+1 = (2-31) of p + des p, all permutations
  eq1,       // (2-13) + (2-1]) = (2-31) + des, all permutations
  fact1,     // (21-3) of p+1 = (21-3) of p + des p, all permutations
  fact_des,  // des of sums law over all pairs
};

TheoremId parse_theorem_id(std::string_view name);
std::string theorem_name(TheoremId id);
std::vector<TheoremId> all_theorem_ids();

/// 10 for sweeps over S_n(132), 8 for sweeps over all of S_n.
int default_max_n(TheoremId id);

struct VerifyRow {
  int n = 0;
  std::int64_t domain_size = 0;
  bool pass = true;
  std::string detail;  // first counterexample, or totals on informational rows
};
struct VerifyReport {
  std::string name;
  int max_n = 0;
  bool pass = true;
  std::vector<VerifyRow> rows;
};

/// Runs the named exhaustive check for every n up to max_n and reports
/// one row per n with the first counterexample when a row fails.
VerifyReport verify_theorem(TheoremId id, int max_n);

/// Cumulative occurrences of classical 231 and 213 over S_n(132) are
/// equal for every n; rows carry both totals.
VerifyReport verify_bona_totals(int max_n);

/// The 12 length-3 single-glue hook-free patterns, sorted by text.
std::vector<VincularPattern> proper_length3_patterns();

struct Finding {
  VincularPattern pattern_a;  // str(pattern_a) < str(pattern_b)
  VincularPattern pattern_b;
  AvoidanceClass avoidance;
  int max_n = 0;
};

struct FindingGroup {
  Finding representative;  // lexicographically smallest member
  std::vector<Finding> members;
};

struct SearchReport {
  int max_n = 0;
  bool modulo_symmetry = false;
  std::vector<Finding> findings;     // sorted by (class, pattern_a, pattern_b)
  std::vector<FindingGroup> groups;  // populated when modulo_symmetry
};

/// Tests every unordered pair of the 12 proper patterns on each of the
/// six classes; a pair is reported iff the two single-count distributions
/// agree for every n <= max_n. With modulo_symmetry, findings related by
/// reverse/complement transport or by a shared pattern within one class
/// are merged into groups.
SearchReport search_equidistributed(int max_n, bool modulo_symmetry);

}  // namespace vinc
