#include "vinc/bijections.hpp"

#include <vector>

#include "vinc/enumeration.hpp"
#include "vinc/pattern.hpp"
#include "vinc/statistics.hpp"

namespace vinc {

namespace {

const Permutation& point() {
  static const Permutation p = Permutation::identity(1);
  return p;
}

const Permutation& pattern_132() {
  static const Permutation p({1, 3, 2});
  return p;
}

void require_avoider(const Permutation& p, const char* op) {
  if (contains(p, pattern_132()))
    throw PreconditionError(std::string(op) + ": input " + p.str() +
                            " contains 132");
}

Permutation phi_rec(const Permutation& p) {
  if (p.empty()) return p;
  auto [alpha, beta] = decompose_right(p);
  return skew_sum(phi_rec(beta), direct_sum(phi_rec(alpha), point()));
}

Permutation psi_rec(const Permutation& p) {
  const int n = p.size();
  if (n <= 1) return p;
  const int max_pos = p.index_of(n);
  if (max_pos == 0) {
    // p = 1 skew alpha
    Permutation tail(
        std::vector<int>(p.values().begin() + 1, p.values().end()));
    return skew_sum(point(), psi_rec(tail));
  }
  auto [alpha, beta] = decompose_left(p);
  if (max_pos == n - 1) {
    // p = alpha + 1: rebuild from the left split of psi(alpha)
    auto [gamma, delta] = decompose_left(psi_rec(alpha));
    return skew_sum(direct_sum(direct_sum(gamma, point()), point()), delta);
  }
  // maximum strictly inside: rebuild from the right split of psi(beta)
  auto [gamma, delta] = decompose_right(psi_rec(beta));
  return skew_sum(
      direct_sum(skew_sum(psi_rec(alpha), direct_sum(delta, point())), point()),
      gamma);
}

Permutation mu_rec(const Permutation& p) {
  if (p.empty()) return p;
  auto [alpha, beta] = decompose_right(p);
  const Permutation psi_beta = beta.empty() ? beta : psi_rec(beta);
  return skew_sum(mu_rec(alpha), direct_sum(mu_rec(psi_beta), point()));
}

}  // namespace

Permutation phi(const Permutation& p) {
  require_avoider(p, "phi");
  return phi_rec(p);
}

Permutation psi(const Permutation& p) {
  if (p.empty())
    throw PreconditionError("psi: the empty permutation is outside the domain");
  require_avoider(p, "psi");
  return psi_rec(p);
}

Permutation mu(const Permutation& p) {
  require_avoider(p, "mu");
  return mu_rec(p);
}

bool verify_inverse_prop(int n) {
  const VincularPattern p23_1 = VincularPattern::parse("23-1");
  const VincularPattern p3_12 = VincularPattern::parse("3-12");
  const AvoidanceClass cls(pattern_132());
  for (const auto& p : avoiders(cls, n)) {
    const Permutation q = inverse(p);
    if (count_occurrences(p23_1, q) != count_occurrences(p3_12, p)) return false;
    if (count_occurrences(p3_12, q) != count_occurrences(p23_1, p)) return false;
    if (des(q) != des(p)) return false;
  }
  return true;
}

}  // namespace vinc
