#include "vinc/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace vinc {

namespace {

// True if some occurrence of sigma in (prefix, candidate) uses the
// candidate as its final letter. The prefix itself is sigma-free, so this
// is the whole containment test for the extended word.
bool occurrence_ending_at(const std::vector<int>& prefix, int candidate,
                          const Permutation& sigma, int slot, int from,
                          std::vector<int>& picked) {
  const int k = sigma.size();
  if (slot == k - 1) {
    for (int j = 0; j < slot; ++j)
      if ((sigma[j] < sigma[slot]) != (picked[j] < candidate)) return false;
    return true;
  }
  const int limit = static_cast<int>(prefix.size()) - (k - 1 - slot);
  for (int i = from; i <= limit; ++i) {
    const int v = prefix[static_cast<std::size_t>(i)];
    bool fits = true;
    for (int j = 0; j < slot; ++j) {
      if ((sigma[j] < sigma[slot]) != (picked[j] < v)) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    picked[static_cast<std::size_t>(slot)] = v;
    if (occurrence_ending_at(prefix, candidate, sigma, slot + 1, i + 1, picked))
      return true;
  }
  return false;
}

void extend_avoider(std::vector<int>& prefix, std::vector<bool>& used, int n,
                    const Permutation& sigma, std::vector<Permutation>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(Permutation(prefix));
    return;
  }
  std::vector<int> picked(static_cast<std::size_t>(sigma.size()));
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v - 1)]) continue;
    if (static_cast<int>(prefix.size()) >= sigma.size() - 1 &&
        occurrence_ending_at(prefix, v, sigma, 0, 0, picked))
      continue;
    used[static_cast<std::size_t>(v - 1)] = true;
    prefix.push_back(v);
    extend_avoider(prefix, used, n, sigma, out);
    prefix.pop_back();
    used[static_cast<std::size_t>(v - 1)] = false;
  }
}

void check_limit(int n, int limit, const char* what) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > limit)
    throw std::out_of_range("n=" + std::to_string(n) + " exceeds the " +
                            what + " enumeration ceiling " +
                            std::to_string(limit) +
                            " (set VINC_MAX_N to raise it)");
}

}  // namespace

AvoidanceClass::AvoidanceClass(Permutation sigma) : sigma_(std::move(sigma)) {
  if (sigma_.size() != 3)
    throw std::invalid_argument("avoidance class wants a length-3 pattern, got " +
                                sigma_.str());
}

AvoidanceClass AvoidanceClass::parse(std::string_view text) {
  return AvoidanceClass(Permutation::parse(text));
}

std::vector<AvoidanceClass> all_avoidance_classes() {
  std::vector<AvoidanceClass> out;
  std::vector<int> word{1, 2, 3};
  do {
    out.push_back(AvoidanceClass(Permutation(word)));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

EnumerationLimits enumeration_limits() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("VINC_MAX_N")) {
    const std::string text(env);
    if (text.empty() ||
        text.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("VINC_MAX_N must be a non-negative integer");
    const long value = std::strtol(text.c_str(), nullptr, 10);
    if (value > 20)
      throw std::invalid_argument("VINC_MAX_N larger than 20 is not supported");
    limits.full_sn = static_cast<int>(value);
    limits.avoiders = static_cast<int>(value);
  }
  return limits;
}

std::vector<Permutation> all_permutations(int n) {
  check_limit(n, enumeration_limits().full_sn, "full S_n");
  std::vector<Permutation> out;
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  do {
    out.push_back(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<Permutation> avoiders(const AvoidanceClass& cls, int n) {
  check_limit(n, enumeration_limits().avoiders, "avoider");
  std::vector<Permutation> out;
  std::vector<int> prefix;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  prefix.reserve(static_cast<std::size_t>(n));
  extend_avoider(prefix, used, n, cls.sigma(), out);
  return out;
}

std::vector<Permutation> avoiders_132_structural(int n) {
  check_limit(n, enumeration_limits().avoiders, "avoider");
  const Permutation point = Permutation::identity(1);
  std::vector<std::vector<Permutation>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[0].push_back(Permutation());
  for (int size = 1; size <= n; ++size) {
    auto& bucket = by_size[static_cast<std::size_t>(size)];
    for (int a = 0; a < size; ++a) {
      const int b = size - 1 - a;
      for (const auto& alpha : by_size[static_cast<std::size_t>(a)])
        for (const auto& beta : by_size[static_cast<std::size_t>(b)])
          bucket.push_back(skew_sum(direct_sum(alpha, point), beta));
    }
  }
  auto result = std::move(by_size[static_cast<std::size_t>(n)]);
  std::sort(result.begin(), result.end());
  return result;
}

std::int64_t catalan_number(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > 30) throw std::invalid_argument("catalan_number supports n <= 30");
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i < m; ++i)
      c[static_cast<std::size_t>(m)] +=
          c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
  return c[static_cast<std::size_t>(n)];
}

}  // namespace vinc
