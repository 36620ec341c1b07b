#pragma once

// Reference counter for vincular occurrences, kept independent of the
// engine: enumerate every index combination, then filter by hooks,
// adjacency, and order-isomorphism.

#include <cstdint>
#include <vector>

#include "vinc/pattern.hpp"

namespace vinc_test {

inline std::int64_t oracle_count(const vinc::VincularPattern& pat,
                                 const vinc::Permutation& host) {
  const int k = pat.length();
  const int n = host.size();
  if (k > n) return 0;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::int64_t total = 0;
  while (true) {
    bool ok = true;
    if (pat.begin_hook() && idx[0] != 0) ok = false;
    if (ok && pat.end_hook() && idx[static_cast<std::size_t>(k - 1)] != n - 1)
      ok = false;
    for (int j = 1; ok && j < k; ++j)
      if (pat.adjacent_at(j) &&
          idx[static_cast<std::size_t>(j)] !=
              idx[static_cast<std::size_t>(j - 1)] + 1)
        ok = false;
    for (int a = 0; ok && a < k; ++a)
      for (int b = a + 1; ok && b < k; ++b)
        if ((pat.word()[a] < pat.word()[b]) !=
            (host[idx[static_cast<std::size_t>(a)]] <
             host[idx[static_cast<std::size_t>(b)]]))
          ok = false;
    if (ok) ++total;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return total;
}

}  // namespace vinc_test
