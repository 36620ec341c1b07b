#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vinc/pattern.hpp"

namespace vinc {

/// Number of positions i < n with p_i > p_{i+1}.
int des(const Permutation& p);

/// Number of entries greater than everything to their right.
int rlmax(const Permutation& p);

/// Number of entries smaller than everything to their right.
int rlmin(const Permutation& p);

/// A named permutation statistic: one of the classical counters or the
/// occurrence count of a vincular pattern. Evaluation is total.
class Statistic {
 public:
  enum class Kind { des, rlmax, rlmin, last_value_minus_one, pattern };

  explicit Statistic(Kind kind);
  explicit Statistic(VincularPattern pattern);

  /// "des" | "rlmax" | "rlmin"; anything else is parsed as pattern text.
  static Statistic parse(std::string_view text);

  Kind kind() const { return kind_; }
  const VincularPattern& pattern() const { return *pattern_; }

  std::int64_t operator()(const Permutation& p) const;
  std::string name() const;

  bool operator==(const Statistic&) const = default;

 private:
  Kind kind_;
  std::optional<VincularPattern> pattern_;
};

/// An ordered tuple of statistics, evaluated componentwise.
class MultiStatistic {
 public:
  MultiStatistic() = default;
  MultiStatistic(std::initializer_list<Statistic> parts) : parts_(parts) {}
  explicit MultiStatistic(std::vector<Statistic> parts)
      : parts_(std::move(parts)) {}

  /// Comma-separated statistic spec, e.g. "2-31,des".
  static MultiStatistic parse(std::string_view text);

  int arity() const { return static_cast<int>(parts_.size()); }
  const std::vector<Statistic>& parts() const { return parts_; }

  std::vector<std::int64_t> operator()(const Permutation& p) const;
  std::string name() const;

 private:
  std::vector<Statistic> parts_;
};

}  // namespace vinc
