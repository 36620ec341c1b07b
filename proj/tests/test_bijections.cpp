#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "vinc/bijections.hpp"
#include "vinc/enumeration.hpp"
#include "vinc/pattern.hpp"
#include "vinc/statistics.hpp"

using namespace vinc;

namespace {
Permutation P(const char* text) { return Permutation::parse(text); }
const AvoidanceClass& cls132() {
  static const AvoidanceClass cls = AvoidanceClass::parse("132");
  return cls;
}
}  // namespace

TEST_CASE("phi on small avoiders") {
  CHECK(phi(P("")) == P(""));
  CHECK(phi(P("1")) == P("1"));
  CHECK(phi(P("21")) == P("12"));
  CHECK(phi(P("12")) == P("21"));
  CHECK(phi(P("123")) == P("321"));
  CHECK(phi(P("213")) == P("231"));
  CHECK(phi(P("312")) == P("312"));
  CHECK_THROWS_AS(phi(P("132")), PreconditionError);
  CHECK_THROWS_AS(phi(P("41325")), PreconditionError);
}

TEST_CASE("phi is a 132-preserving involution") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : avoiders(cls132(), n)) {
      const Permutation q = phi(p);
      CHECK(avoids(q, P("132")));
      CHECK(phi(q) == p);
    }
  }
}

TEST_CASE("psi on small avoiders") {
  CHECK(psi(P("1")) == P("1"));
  CHECK(psi(P("12")) == P("12"));
  CHECK(psi(P("21")) == P("21"));
  CHECK(psi(P("231")) == P("213"));
  CHECK(psi(P("213")) == P("231"));
  CHECK(psi(P("123")) == P("123"));
  CHECK(psi(P("312")) == P("312"));
  CHECK(psi(P("321")) == P("321"));
  CHECK_THROWS_AS(psi(P("")), PreconditionError);
  CHECK_THROWS_AS(psi(P("132")), PreconditionError);
}

TEST_CASE("psi permutes each avoidance level") {
  for (int n = 1; n <= 7; ++n) {
    const auto domain = avoiders(cls132(), n);
    std::vector<Permutation> images;
    for (const auto& p : domain) images.push_back(psi(p));
    std::sort(images.begin(), images.end());
    CHECK(images == domain);
  }
}

TEST_CASE("psi carries 2-31 to 2-13 and keeps des") {
  const auto p2_31 = VincularPattern::parse("2-31");
  const auto p2_13 = VincularPattern::parse("2-13");
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : avoiders(cls132(), n)) {
      const Permutation q = psi(p);
      CHECK(count_occurrences(p2_13, q) == count_occurrences(p2_31, p));
      CHECK(des(q) == des(p));
    }
  }
}

TEST_CASE("mu on small avoiders") {
  CHECK(mu(P("")) == P(""));
  CHECK(mu(P("1")) == P("1"));
  CHECK(mu(P("21")) == P("21"));
  CHECK(mu(P("213")) == P("213"));
  CHECK_THROWS_AS(mu(P("132")), PreconditionError);
}

TEST_CASE("mu permutes each level and keeps the last value") {
  const auto p21_3 = VincularPattern::parse("21-3");
  const auto p2_13 = VincularPattern::parse("2-13");
  for (int n = 0; n <= 7; ++n) {
    const auto domain = avoiders(cls132(), n);
    std::vector<Permutation> images;
    for (const auto& p : domain) {
      const Permutation q = mu(p);
      images.push_back(q);
      if (n > 0) CHECK(q[n - 1] == p[n - 1]);
      CHECK(count_occurrences(p21_3, q) == count_occurrences(p2_13, p));
      CHECK(des(q) == des(p));
    }
    std::sort(images.begin(), images.end());
    CHECK(images == domain);
  }
}

TEST_CASE("the inverse splits blockwise on avoiders") {
  const Permutation point = Permutation::identity(1);
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : avoiders(cls132(), n)) {
      auto [alpha, beta] = decompose_right(p);
      CHECK(inverse(p) ==
            skew_sum(direct_sum(inverse(beta), point), inverse(alpha)));
    }
  }
}

TEST_CASE("inverse exchanges 23-1 with 3-12 on avoiders") {
  CHECK(verify_inverse_prop(1));
  CHECK(verify_inverse_prop(3));
  CHECK(verify_inverse_prop(8));
}
