#include "vinc/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinc {

namespace {

void check_is_permutation(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : values) {
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("repeated value " + std::to_string(v));
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

const Permutation& pattern_132() {
  static const Permutation p({1, 3, 2});
  return p;
}

// Searches for an occurrence of q using values picked so far; candidates
// for slot `slot` start at host position `from`.
bool find_occurrence(const Permutation& p, const Permutation& q, int slot,
                     int from, std::vector<int>& picked) {
  const int n = p.size();
  const int k = q.size();
  if (slot == k) return true;
  for (int i = from; i <= n - (k - slot); ++i) {
    const int v = p[i];
    bool fits = true;
    for (int j = 0; j < slot; ++j) {
      if ((q[j] < q[slot]) != (picked[j] < v)) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    picked[static_cast<std::size_t>(slot)] = v;
    if (find_occurrence(p, q, slot + 1, i + 1, picked)) return true;
  }
  return false;
}

void require_decomposable(const Permutation& p, const char* op) {
  if (p.empty())
    throw PreconditionError(std::string(op) +
                            ": the empty permutation has no decomposition");
  if (contains(p, pattern_132()))
    throw PreconditionError(std::string(op) + ": input " + p.str() +
                            " contains 132");
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  check_is_permutation(values_);
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t start = pos;
      std::size_t comma = text.find(',', pos);
      std::string_view token = text.substr(
          start, comma == std::string_view::npos ? text.size() - start
                                                 : comma - start);
      if (token.empty())
        throw ParseError("empty value between commas", start + 1);
      int value = 0;
      for (std::size_t i = 0; i < token.size(); ++i) {
        const char c = token[i];
        if (c < '0' || c > '9')
          throw ParseError(std::string("unexpected character '") + c + "'",
                           start + i + 1);
        value = value * 10 + (c - '0');
        if (value > 1'000'000)
          throw ParseError("value too large", start + 1);
      }
      if (value == 0) throw ParseError("values are 1-based", start + 1);
      values.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
      if (pos == text.size())
        throw ParseError("trailing comma", text.size());
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '1' || c > '9')
        throw ParseError(std::string("unexpected character '") + c +
                             "' (digit form uses 1..9)",
                         i + 1);
      values.push_back(c - '0');
    }
  }
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int v = values[i];
    if (v > n)
      throw ParseError("value " + std::to_string(v) +
                           " exceeds the length " + std::to_string(n),
                       i + 1);
    if (seen[static_cast<std::size_t>(v - 1)])
      throw ParseError("repeated value " + std::to_string(v), i + 1);
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation result;
  result.values_ = std::move(values);
  return result;
}

int Permutation::index_of(int value) const {
  for (int i = 0; i < size(); ++i)
    if (values_[static_cast<std::size_t>(i)] == value) return i;
  throw std::invalid_argument("value " + std::to_string(value) +
                              " not present");
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int v : values_) out += static_cast<char>('0' + v);
  } else {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(values_[i]);
    }
  }
  return out;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(a.size() + b.size()));
  for (int x : a.values()) v.push_back(x);
  for (int x : b.values()) v.push_back(x + a.size());
  return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(a.size() + b.size()));
  for (int x : a.values()) v.push_back(x + b.size());
  for (int x : b.values()) v.push_back(x);
  return Permutation(std::move(v));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int x : p.values()) v.push_back(n - x + 1);
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> v(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    v[static_cast<std::size_t>(p[i] - 1)] = i + 1;
  return Permutation(std::move(v));
}

bool contains(const Permutation& p, const Permutation& q) {
  if (q.empty()) return true;
  if (q.size() > p.size()) return false;
  std::vector<int> picked(static_cast<std::size_t>(q.size()));
  return find_occurrence(p, q, 0, 0, picked);
}

bool avoids(const Permutation& p, const Permutation& q) {
  return !contains(p, q);
}

std::pair<Permutation, Permutation> decompose_left(const Permutation& p) {
  require_decomposable(p, "decompose_left");
  const int n = p.size();
  const int m = p.index_of(n);  // the maximum closes the prefix block
  const int beta_len = n - m - 1;
  std::vector<int> alpha, beta;
  alpha.reserve(static_cast<std::size_t>(m));
  beta.reserve(static_cast<std::size_t>(beta_len));
  for (int i = 0; i < m; ++i) alpha.push_back(p[i] - beta_len);
  for (int i = m + 1; i < n; ++i) beta.push_back(p[i]);
  return {Permutation(std::move(alpha)), Permutation(std::move(beta))};
}

std::pair<Permutation, Permutation> decompose_right(const Permutation& p) {
  require_decomposable(p, "decompose_right");
  const int n = p.size();
  const int k = p[n - 1];  // last entry is the maximum of its block
  const int alpha_len = n - k;
  std::vector<int> alpha, beta;
  alpha.reserve(static_cast<std::size_t>(alpha_len));
  beta.reserve(static_cast<std::size_t>(k - 1));
  for (int i = 0; i < alpha_len; ++i) alpha.push_back(p[i] - k);
  for (int i = alpha_len; i < n - 1; ++i) beta.push_back(p[i]);
  return {Permutation(std::move(alpha)), Permutation(std::move(beta))};
}

}  // namespace vinc
