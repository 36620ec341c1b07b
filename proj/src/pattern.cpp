#include "vinc/pattern.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace vinc {

namespace {

std::int64_t count_from(const VincularPattern& pat, const Permutation& host,
                        int slot, int prev_index, std::vector<int>& picked) {
  const int k = pat.length();
  const int n = host.size();
  if (slot == k) return 1;
  int lo, hi;
  if (slot == 0) {
    lo = 0;
    hi = pat.begin_hook() ? 0 : n - k;
  } else if (pat.adjacent_at(slot)) {  // glue between letters slot and slot+1
    lo = hi = prev_index + 1;
  } else {
    lo = prev_index + 1;
    hi = n - (k - slot);
  }
  if (slot == k - 1 && pat.end_hook()) {
    lo = std::max(lo, n - 1);
    hi = std::min(hi, n - 1);
  }
  const auto& w = pat.word();
  std::int64_t total = 0;
  for (int i = lo; i <= hi; ++i) {
    const int v = host[i];
    bool fits = true;
    for (int j = 0; j < slot; ++j) {
      if ((w[j] < w[slot]) != (picked[j] < v)) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    picked[static_cast<std::size_t>(slot)] = v;
    total += count_from(pat, host, slot + 1, i, picked);
  }
  return total;
}

}  // namespace

VincularPattern::VincularPattern(Permutation word, std::uint32_t adjacency_mask,
                                 bool begin_hook, bool end_hook)
    : word_(std::move(word)),
      adjacency_(adjacency_mask),
      begin_hook_(begin_hook),
      end_hook_(end_hook) {
  const int k = word_.size();
  if (k < 1) throw std::invalid_argument("pattern word must be non-empty");
  if (k > 32) throw std::invalid_argument("pattern word too long");
  const std::uint32_t legal =
      k == 1 ? 0u : (std::uint32_t{1} << (k - 1)) - 1u;
  if (adjacency_ & ~legal)
    throw std::invalid_argument("adjacency position outside 1..k-1");
}

VincularPattern VincularPattern::classical(Permutation word) {
  return VincularPattern(std::move(word), 0u);
}

VincularPattern VincularPattern::parse(std::string_view text) {
  std::vector<int> letters;
  std::uint32_t adjacency = 0;
  bool begin_hook = false;
  bool end_hook = false;
  bool dash_pending = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '[') {
      if (i != 0) throw ParseError("'[' is only allowed at the start", i + 1);
      begin_hook = true;
    } else if (c == ']') {
      if (i + 1 != text.size())
        throw ParseError("']' is only allowed at the end", i + 1);
      if (letters.empty()) throw ParseError("empty pattern", i + 1);
      if (dash_pending) throw ParseError("dangling '-'", i);
      end_hook = true;
    } else if (c == '-') {
      if (letters.empty()) throw ParseError("'-' before any letter", i + 1);
      if (dash_pending) throw ParseError("doubled '-'", i + 1);
      dash_pending = true;
    } else if (c >= '1' && c <= '9') {
      if (!letters.empty() && !dash_pending)
        adjacency |= std::uint32_t{1} << (letters.size() - 1);
      letters.push_back(c - '0');
      dash_pending = false;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i + 1);
    }
  }
  if (letters.empty()) throw ParseError("empty pattern", 1);
  if (dash_pending) throw ParseError("dangling '-'", text.size());
  const int k = static_cast<int>(letters.size());
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const int v = letters[i];
    // report the error at the letter's position in the text
    std::size_t at = text.find(static_cast<char>('0' + v));
    if (v > k)
      throw ParseError("letter " + std::to_string(v) +
                           " exceeds the pattern length " + std::to_string(k),
                       at + 1);
    if (seen[static_cast<std::size_t>(v - 1)])
      throw ParseError("repeated letter " + std::to_string(v),
                       text.find(static_cast<char>('0' + v), at + 1) + 1);
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return VincularPattern(Permutation(std::move(letters)), adjacency,
                         begin_hook, end_hook);
}

bool VincularPattern::is_classical() const {
  return adjacency_ == 0 && !begin_hook_ && !end_hook_;
}

bool VincularPattern::is_consecutive() const {
  const int k = length();
  const std::uint32_t full = k == 1 ? 0u : (std::uint32_t{1} << (k - 1)) - 1u;
  return adjacency_ == full;
}

bool VincularPattern::is_proper() const {
  return length() == 3 && !begin_hook_ && !end_hook_ &&
         (adjacency_ == 1u || adjacency_ == 2u);
}

std::string VincularPattern::str() const {
  std::string out;
  if (begin_hook_) out += '[';
  for (int i = 0; i < length(); ++i) {
    if (i > 0 && !adjacent_at(i)) out += '-';
    out += static_cast<char>('0' + word_[i]);
  }
  if (end_hook_) out += ']';
  return out;
}

std::int64_t count_occurrences(const VincularPattern& pattern,
                               const Permutation& host) {
  if (pattern.length() > host.size()) return 0;
  std::vector<int> picked(static_cast<std::size_t>(pattern.length()));
  return count_from(pattern, host, 0, -1, picked);
}

VincularPattern reverse_pattern(const VincularPattern& p) {
  const int k = p.length();
  std::uint32_t adjacency = 0;
  for (int i = 1; i < k; ++i)
    if (p.adjacent_at(k - i)) adjacency |= std::uint32_t{1} << (i - 1);
  return VincularPattern(reverse(p.word()), adjacency, p.end_hook(),
                         p.begin_hook());
}

VincularPattern complement_pattern(const VincularPattern& p) {
  return VincularPattern(complement(p.word()), p.adjacency_mask(),
                         p.begin_hook(), p.end_hook());
}

}  // namespace vinc
