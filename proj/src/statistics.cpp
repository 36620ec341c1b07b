#include "vinc/statistics.hpp"

#include <limits>
#include <stdexcept>

namespace vinc {

int des(const Permutation& p) {
  int count = 0;
  for (int i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) ++count;
  return count;
}

int rlmax(const Permutation& p) {
  int count = 0;
  int best = 0;
  for (int i = p.size() - 1; i >= 0; --i) {
    if (p[i] > best) {
      best = p[i];
      ++count;
    }
  }
  return count;
}

int rlmin(const Permutation& p) {
  int count = 0;
  int best = std::numeric_limits<int>::max();
  for (int i = p.size() - 1; i >= 0; --i) {
    if (p[i] < best) {
      best = p[i];
      ++count;
    }
  }
  return count;
}

Statistic::Statistic(Kind kind) : kind_(kind) {
  if (kind == Kind::pattern)
    throw std::invalid_argument("pattern statistics need a pattern");
}

Statistic::Statistic(VincularPattern pattern)
    : kind_(Kind::pattern), pattern_(std::move(pattern)) {}

Statistic Statistic::parse(std::string_view text) {
  if (text == "des") return Statistic(Kind::des);
  if (text == "rlmax") return Statistic(Kind::rlmax);
  if (text == "rlmin") return Statistic(Kind::rlmin);
  return Statistic(VincularPattern::parse(text));
}

std::int64_t Statistic::operator()(const Permutation& p) const {
  switch (kind_) {
    case Kind::des:
      return des(p);
    case Kind::rlmax:
      return rlmax(p);
    case Kind::rlmin:
      return rlmin(p);
    case Kind::last_value_minus_one:
      return p.empty() ? 0 : p[p.size() - 1] - 1;
    case Kind::pattern:
      return count_occurrences(*pattern_, p);
  }
  return 0;  // unreachable
}

std::string Statistic::name() const {
  switch (kind_) {
    case Kind::des:
      return "des";
    case Kind::rlmax:
      return "rlmax";
    case Kind::rlmin:
      return "rlmin";
    case Kind::last_value_minus_one:
      return "last_value_minus_one";
    case Kind::pattern:
      return pattern_->str();
  }
  return {};
}

MultiStatistic MultiStatistic::parse(std::string_view text) {
  std::vector<Statistic> parts;
  if (text.empty()) return MultiStatistic(std::move(parts));
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(
        pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    if (token.empty()) throw ParseError("empty statistic name", pos + 1);
    parts.push_back(Statistic::parse(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return MultiStatistic(std::move(parts));
}

std::vector<std::int64_t> MultiStatistic::operator()(const Permutation& p) const {
  std::vector<std::int64_t> out;
  out.reserve(parts_.size());
  for (const auto& s : parts_) out.push_back(s(p));
  return out;
}

std::string MultiStatistic::name() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += parts_[i].name();
  }
  return out;
}

}  // namespace vinc
