#include "vinc/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vinc {

namespace {

struct NamedPatterns {
  VincularPattern p2_13 = VincularPattern::parse("2-13");
  VincularPattern p2_31 = VincularPattern::parse("2-31");
  VincularPattern p21_3 = VincularPattern::parse("21-3");
  VincularPattern p23_1 = VincularPattern::parse("23-1");
  VincularPattern p3_12 = VincularPattern::parse("3-12");
  VincularPattern asc_end = VincularPattern::parse("1-2]");
  VincularPattern desc_end = VincularPattern::parse("2-1]");
  VincularPattern c231 = VincularPattern::parse("2-3-1");
  VincularPattern c213 = VincularPattern::parse("2-1-3");
};

const NamedPatterns& pats() {
  static const NamedPatterns p;
  return p;
}

const AvoidanceClass& class_132() {
  static const AvoidanceClass cls(Permutation({1, 3, 2}));
  return cls;
}

std::string tuple_str(const std::vector<std::int64_t>& key) {
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(key[i]);
  }
  out += ')';
  return out;
}

// 1: maximum first, 2: maximum strictly inside, 3: maximum last.
int block_case(const Permutation& p) {
  const int pos = p.index_of(p.size());
  if (pos == 0) return 1;
  if (pos == p.size() - 1) return 3;
  return 2;
}

// The case of the preimage read off the image, via the positions of the
// two largest values. 0 when no condition matches.
int image_case(const Permutation& q) {
  const int n = q.size();
  const int pos_n = q.index_of(n) + 1;
  if (pos_n == 1) return 1;
  const int gap = pos_n - (q.index_of(n - 1) + 1);
  if (gap > 1) return 2;
  return gap == 1 ? 3 : 0;
}

VerifyRow sweep_avoiders(
    int n, const std::function<std::optional<std::string>(const Permutation&)>&
               check) {
  VerifyRow row;
  row.n = n;
  for (const auto& p : avoiders(class_132(), n)) {
    ++row.domain_size;
    if (auto fail = check(p)) {
      row.pass = false;
      row.detail = *fail;
      break;
    }
  }
  return row;
}

VerifyRow sweep_all(
    int n, const std::function<std::optional<std::string>(const Permutation&)>&
               check) {
  VerifyRow row;
  row.n = n;
  for (const auto& p : all_permutations(n)) {
    ++row.domain_size;
    if (auto fail = check(p)) {
      row.pass = false;
      row.detail = *fail;
      break;
    }
  }
  return row;
}

// Image multiset equals the avoider set itself: bijectivity on the class.
std::optional<std::string> check_image_set(std::vector<Permutation> images,
                                           const std::vector<Permutation>& domain) {
  std::sort(images.begin(), images.end());
  if (images != domain) return "image of the class is not the class itself";
  return std::nullopt;
}

VerifyRow check_theorem1(int n) {
  const auto& P = pats();
  return sweep_avoiders(n, [&](const Permutation& p) -> std::optional<std::string> {
    const Permutation q = phi(p);
    if (contains(q, Permutation({1, 3, 2})))
      return "phi(" + p.str() + ")=" + q.str() + " contains 132";
    if (phi(q) != p)
      return "phi(phi(" + p.str() + "))=" + phi(q).str() + " breaks the involution";
    const std::vector<std::int64_t> lhs{count_occurrences(P.p2_13, q),
                                        count_occurrences(P.p2_31, q), rlmin(q),
                                        rlmax(q)};
    const std::vector<std::int64_t> rhs{count_occurrences(P.p2_31, p),
                                        count_occurrences(P.p2_13, p), rlmax(p),
                                        rlmin(p)};
    if (lhs != rhs)
      return "p=" + p.str() + " phi(p)=" + q.str() + " got " + tuple_str(lhs) +
             " expected " + tuple_str(rhs);
    if (count_occurrences(P.asc_end, p) != count_occurrences(P.desc_end, q) ||
        count_occurrences(P.desc_end, p) != count_occurrences(P.asc_end, q))
      return "p=" + p.str() + " phi(p)=" + q.str() + " hook counts do not swap";
    return std::nullopt;
  });
}

VerifyRow check_theorem2(int n) {
  const auto& P = pats();
  VerifyRow row;
  row.n = n;
  if (n == 0) {
    row.domain_size = 1;  // psi fixes the empty class trivially
    return row;
  }
  const auto domain = avoiders(class_132(), n);
  std::vector<Permutation> images;
  images.reserve(domain.size());
  for (const auto& p : domain) {
    ++row.domain_size;
    const Permutation q = psi(p);
    images.push_back(q);
    if (contains(q, Permutation({1, 3, 2}))) {
      row.pass = false;
      row.detail = "psi(" + p.str() + ")=" + q.str() + " contains 132";
      return row;
    }
    if (count_occurrences(P.p2_13, q) != count_occurrences(P.p2_31, p) ||
        des(q) != des(p)) {
      row.pass = false;
      row.detail = "p=" + p.str() + " psi(p)=" + q.str() +
                   " breaks (2-13,des) = (2-31,des)";
      return row;
    }
    if (n >= 2 && block_case(p) != image_case(q)) {
      row.pass = false;
      row.detail = "p=" + p.str() + " psi(p)=" + q.str() +
                   " case mismatch: " + std::to_string(block_case(p)) +
                   " vs " + std::to_string(image_case(q));
      return row;
    }
  }
  if (auto fail = check_image_set(std::move(images), domain)) {
    row.pass = false;
    row.detail = *fail;
  }
  return row;
}

VerifyRow check_theorem3(int n) {
  const auto& P = pats();
  VerifyRow row;
  row.n = n;
  const auto domain = avoiders(class_132(), n);
  std::vector<Permutation> images;
  images.reserve(domain.size());
  for (const auto& p : domain) {
    ++row.domain_size;
    const Permutation q = mu(p);
    images.push_back(q);
    const std::vector<std::int64_t> lhs{count_occurrences(P.p21_3, q), des(q),
                                        count_occurrences(P.asc_end, q)};
    const std::vector<std::int64_t> rhs{count_occurrences(P.p2_13, p), des(p),
                                        count_occurrences(P.asc_end, p)};
    if (lhs != rhs) {
      row.pass = false;
      row.detail = "p=" + p.str() + " mu(p)=" + q.str() + " got " +
                   tuple_str(lhs) + " expected " + tuple_str(rhs);
      return row;
    }
  }
  if (auto fail = check_image_set(std::move(images), domain)) {
    row.pass = false;
    row.detail = *fail;
  }
  return row;
}

VerifyRow check_prop1(int n) {
  const auto& P = pats();
  return sweep_avoiders(n, [&](const Permutation& p) -> std::optional<std::string> {
    const Permutation q = phi(p);
    if (count_occurrences(P.asc_end, p) != count_occurrences(P.desc_end, q) ||
        count_occurrences(P.desc_end, p) != count_occurrences(P.asc_end, q))
      return "p=" + p.str() + " phi(p)=" + q.str() + " hook counts do not swap";
    return std::nullopt;
  });
}

VerifyRow check_prop2(int n) {
  VerifyRow row;
  row.n = n;
  if (n < 2) {
    row.domain_size = catalan_number(n);  // no case applies below n=2
    return row;
  }
  return sweep_avoiders(n, [&](const Permutation& p) -> std::optional<std::string> {
    const Permutation q = psi(p);
    if (block_case(p) != image_case(q))
      return "p=" + p.str() + " psi(p)=" + q.str() +
             " case mismatch: " + std::to_string(block_case(p)) + " vs " +
             std::to_string(image_case(q));
    return std::nullopt;
  });
}

VerifyRow check_prop4(int n) {
  const auto& P = pats();
  return sweep_avoiders(n, [&](const Permutation& p) -> std::optional<std::string> {
    const Permutation q = inverse(p);
    const std::vector<std::int64_t> lhs{count_occurrences(P.p23_1, q),
                                        count_occurrences(P.p3_12, q), des(q)};
    const std::vector<std::int64_t> rhs{count_occurrences(P.p3_12, p),
                                        count_occurrences(P.p23_1, p), des(p)};
    if (lhs != rhs)
      return "p=" + p.str() + " inverse=" + q.str() + " got " + tuple_str(lhs) +
             " expected " + tuple_str(rhs);
    return std::nullopt;
  });
}

VerifyRow check_lemma1(int n) {
  const auto& P = pats();
  const Permutation point = Permutation::identity(1);
  return sweep_all(n, [&](const Permutation& p) -> std::optional<std::string> {
    const Permutation extended = direct_sum(p, point);
    const std::int64_t lhs = count_occurrences(P.p2_13, extended);
    const std::int64_t rhs = count_occurrences(P.p2_31, p) + des(p);
    if (lhs != rhs)
      return "p=" + p.str() + " (2-13) of p+1 is " + std::to_string(lhs) +
             ", (2-31)+des is " + std::to_string(rhs);
    return std::nullopt;
  });
}

VerifyRow check_eq1(int n) {
  const auto& P = pats();
  return sweep_all(n, [&](const Permutation& p) -> std::optional<std::string> {
    const std::int64_t lhs =
        count_occurrences(P.p2_13, p) + count_occurrences(P.desc_end, p);
    const std::int64_t rhs = count_occurrences(P.p2_31, p) + des(p);
    if (lhs != rhs)
      return "p=" + p.str() + " (2-13)+(2-1]) is " + std::to_string(lhs) +
             ", (2-31)+des is " + std::to_string(rhs);
    return std::nullopt;
  });
}

VerifyRow check_fact1(int n) {
  const auto& P = pats();
  const Permutation point = Permutation::identity(1);
  return sweep_all(n, [&](const Permutation& p) -> std::optional<std::string> {
    const Permutation extended = direct_sum(p, point);
    const std::int64_t lhs = count_occurrences(P.p21_3, extended);
    const std::int64_t rhs = count_occurrences(P.p21_3, p) + des(p);
    if (lhs != rhs)
      return "p=" + p.str() + " (21-3) of p+1 is " + std::to_string(lhs) +
             ", (21-3)+des is " + std::to_string(rhs);
    return std::nullopt;
  });
}

VerifyRow check_fact_des(int total) {
  VerifyRow row;
  row.n = total;
  for (int a = 0; a <= total; ++a) {
    const auto lefts = all_permutations(a);
    const auto rights = all_permutations(total - a);
    for (const auto& alpha : lefts) {
      for (const auto& beta : rights) {
        ++row.domain_size;
        const int direct = des(direct_sum(alpha, beta));
        if (direct != des(alpha) + des(beta)) {
          row.pass = false;
          row.detail = "alpha=" + alpha.str() + " beta=" + beta.str() +
                       " direct sum descents off";
          return row;
        }
        // the boundary descent exists iff both blocks are non-empty
        const int boundary = (!alpha.empty() && !beta.empty()) ? 1 : 0;
        const int skew = des(skew_sum(alpha, beta));
        if (skew != des(alpha) + des(beta) + boundary) {
          row.pass = false;
          row.detail = "alpha=" + alpha.str() + " beta=" + beta.str() +
                       " skew sum descents off";
          return row;
        }
      }
    }
  }
  return row;
}

}  // namespace

void Distribution::add(Key key, std::int64_t count) {
  entries_[std::move(key)] += count;
  total_ += count;
}

Distribution distribution_over(const MultiStatistic& ms,
                               std::span<const Permutation> perms) {
  Distribution d;
  for (const auto& p : perms) d.add(ms(p));
  return d;
}

Distribution distribution(const MultiStatistic& ms, const AvoidanceClass& cls,
                          int n) {
  const auto perms = avoiders(cls, n);
  return distribution_over(ms, perms);
}

bool equidistributed(const MultiStatistic& a, const MultiStatistic& b,
                     const AvoidanceClass& cls, int n_max) {
  return !first_difference(a, b, cls, n_max).has_value();
}

std::optional<DistributionDifference> first_difference(
    const MultiStatistic& a, const MultiStatistic& b, const AvoidanceClass& cls,
    int n_max) {
  if (a.arity() != b.arity())
    throw std::invalid_argument("multistatistic arities differ: " +
                                std::to_string(a.arity()) + " vs " +
                                std::to_string(b.arity()));
  for (int n = 0; n <= n_max; ++n) {
    const Distribution da = distribution(a, cls, n);
    const Distribution db = distribution(b, cls, n);
    if (da == db) continue;
    std::set<Distribution::Key> keys;
    for (const auto& [k, v] : da.entries()) keys.insert(k);
    for (const auto& [k, v] : db.entries()) keys.insert(k);
    for (const auto& k : keys) {
      const auto ia = da.entries().find(k);
      const auto ib = db.entries().find(k);
      const std::int64_t ca = ia == da.entries().end() ? 0 : ia->second;
      const std::int64_t cb = ib == db.entries().end() ? 0 : ib->second;
      if (ca != cb) return DistributionDifference{n, k, ca, cb};
    }
  }
  return std::nullopt;
}

TheoremId parse_theorem_id(std::string_view name) {
  for (TheoremId id : all_theorem_ids())
    if (theorem_name(id) == name) return id;
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::theorem1: return "theorem1";
    case TheoremId::theorem2: return "theorem2";
    case TheoremId::theorem3: return "theorem3";
    case TheoremId::prop1: return "prop1";
    case TheoremId::prop2: return "prop2";
    case TheoremId::prop4: return "prop4";
    case TheoremId::lemma1: return "lemma1";
    case TheoremId::eq1: return "eq1";
    case TheoremId::fact1: return "fact1";
    case TheoremId::fact_des: return "fact_des";
  }
  return {};
}

std::vector<TheoremId> all_theorem_ids() {
  return {TheoremId::theorem1, TheoremId::theorem2, TheoremId::theorem3,
          TheoremId::prop1,    TheoremId::prop2,    TheoremId::prop4,
          TheoremId::lemma1,   TheoremId::eq1,      TheoremId::fact1,
          TheoremId::fact_des};
}

int default_max_n(TheoremId id) {
  switch (id) {
    case TheoremId::lemma1:
    case TheoremId::eq1:
    case TheoremId::fact1:
    case TheoremId::fact_des:
      return 8;
    default:
      return 10;
  }
}

VerifyReport verify_theorem(TheoremId id, int max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be non-negative");
  VerifyReport report;
  report.name = theorem_name(id);
  report.max_n = max_n;
  for (int n = 0; n <= max_n; ++n) {
    VerifyRow row;
    switch (id) {
      case TheoremId::theorem1: row = check_theorem1(n); break;
      case TheoremId::theorem2: row = check_theorem2(n); break;
      case TheoremId::theorem3: row = check_theorem3(n); break;
      case TheoremId::prop1: row = check_prop1(n); break;
      case TheoremId::prop2: row = check_prop2(n); break;
      case TheoremId::prop4: row = check_prop4(n); break;
      case TheoremId::lemma1: row = check_lemma1(n); break;
      case TheoremId::eq1: row = check_eq1(n); break;
      case TheoremId::fact1: row = check_fact1(n); break;
      case TheoremId::fact_des: row = check_fact_des(n); break;
    }
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

VerifyReport verify_bona_totals(int max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be non-negative");
  const auto& P = pats();
  VerifyReport report;
  report.name = "bona";
  report.max_n = max_n;
  for (int n = 0; n <= max_n; ++n) {
    VerifyRow row;
    row.n = n;
    std::int64_t total_231 = 0;
    std::int64_t total_213 = 0;
    for (const auto& p : avoiders(class_132(), n)) {
      ++row.domain_size;
      total_231 += count_occurrences(P.c231, p);
      total_213 += count_occurrences(P.c213, p);
    }
    row.pass = total_231 == total_213;
    row.detail = "total(2-3-1)=" + std::to_string(total_231) +
                 " total(2-1-3)=" + std::to_string(total_213);
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<VincularPattern> proper_length3_patterns() {
  std::vector<VincularPattern> out;
  std::vector<int> word{1, 2, 3};
  do {
    out.push_back(VincularPattern(Permutation(word), 1u));
    out.push_back(VincularPattern(Permutation(word), 2u));
  } while (std::next_permutation(word.begin(), word.end()));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.str() < b.str();
  });
  return out;
}

namespace {

std::string finding_key(const AvoidanceClass& cls, const VincularPattern& a,
                        const VincularPattern& b) {
  return cls.str() + "|" + a.str() + "|" + b.str();
}

// Equidistribution of a and b on S_n(sigma) is forced, for every n, when
// both patterns are glued refinements of sigma itself (neither can occur
// on the class), or when a reverse/complement symmetry fixes sigma and
// swaps a with b. Such pairs witness nothing and are not reported.
bool forced_pair(const VincularPattern& a, const VincularPattern& b,
                 const Permutation& sigma) {
  if (a.word() == sigma && b.word() == sigma) return true;
  const Permutation r = reverse(sigma);
  const Permutation c = complement(sigma);
  if (r == sigma && reverse_pattern(a) == b) return true;
  if (c == sigma && complement_pattern(a) == b) return true;
  if (reverse(c) == sigma && reverse_pattern(complement_pattern(a)) == b)
    return true;
  return false;
}

Finding transported(const Finding& f, bool use_reverse, bool use_complement) {
  VincularPattern a = f.pattern_a;
  VincularPattern b = f.pattern_b;
  Permutation sigma = f.avoidance.sigma();
  if (use_reverse) {
    a = reverse_pattern(a);
    b = reverse_pattern(b);
    sigma = reverse(sigma);
  }
  if (use_complement) {
    a = complement_pattern(a);
    b = complement_pattern(b);
    sigma = complement(sigma);
  }
  if (b.str() < a.str()) std::swap(a, b);
  return Finding{std::move(a), std::move(b), AvoidanceClass(std::move(sigma)),
                 f.max_n};
}

int find_root(std::vector<int>& parent, int i) {
  while (parent[static_cast<std::size_t>(i)] != i) {
    parent[static_cast<std::size_t>(i)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
    i = parent[static_cast<std::size_t>(i)];
  }
  return i;
}

void unite(std::vector<int>& parent, int a, int b) {
  parent[static_cast<std::size_t>(find_root(parent, a))] =
      find_root(parent, b);
}

}  // namespace

SearchReport search_equidistributed(int max_n, bool modulo_symmetry) {
  if (max_n < 0) throw std::invalid_argument("max_n must be non-negative");
  const auto patterns = proper_length3_patterns();
  const auto classes = all_avoidance_classes();
  const std::size_t np = patterns.size();

  SearchReport report;
  report.max_n = max_n;
  report.modulo_symmetry = modulo_symmetry;

  // tables[class][pattern][n]: count histogram of the pattern statistic
  for (const auto& cls : classes) {
    std::vector<std::vector<std::map<std::int64_t, std::int64_t>>> tables(
        np, std::vector<std::map<std::int64_t, std::int64_t>>(
                static_cast<std::size_t>(max_n) + 1));
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& perm : avoiders(cls, n)) {
        for (std::size_t pi = 0; pi < np; ++pi) {
          ++tables[pi][static_cast<std::size_t>(n)]
                   [count_occurrences(patterns[pi], perm)];
        }
      }
    }
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t j = i + 1; j < np; ++j) {
        if (forced_pair(patterns[i], patterns[j], cls.sigma())) continue;
        if (tables[i] == tables[j])
          report.findings.push_back(
              Finding{patterns[i], patterns[j], cls, max_n});
      }
    }
  }

  if (!modulo_symmetry) return report;

  std::map<std::string, int> index_of;
  for (std::size_t i = 0; i < report.findings.size(); ++i) {
    const auto& f = report.findings[i];
    index_of[finding_key(f.avoidance, f.pattern_a, f.pattern_b)] =
        static_cast<int>(i);
  }
  std::vector<int> parent(report.findings.size());
  std::iota(parent.begin(), parent.end(), 0);

  for (std::size_t i = 0; i < report.findings.size(); ++i) {
    const auto& f = report.findings[i];
    // reverse/complement transport keeps a finding a finding
    for (const auto& [r, c] : {std::pair{true, false}, std::pair{false, true},
                               std::pair{true, true}}) {
      const Finding img = transported(f, r, c);
      const auto it =
          index_of.find(finding_key(img.avoidance, img.pattern_a, img.pattern_b));
      if (it != index_of.end()) unite(parent, static_cast<int>(i), it->second);
    }
  }
  // a shared pattern within one class chains pairs into one family
  std::map<std::string, int> seen_pattern;
  for (std::size_t i = 0; i < report.findings.size(); ++i) {
    const auto& f = report.findings[i];
    for (const auto& pat : {f.pattern_a, f.pattern_b}) {
      const std::string key = f.avoidance.str() + "|" + pat.str();
      const auto [it, inserted] = seen_pattern.emplace(key, static_cast<int>(i));
      if (!inserted) unite(parent, static_cast<int>(i), it->second);
    }
  }

  std::map<int, std::vector<int>> members_by_root;
  for (std::size_t i = 0; i < report.findings.size(); ++i)
    members_by_root[find_root(parent, static_cast<int>(i))].push_back(
        static_cast<int>(i));
  for (auto& [root, members] : members_by_root) {
    FindingGroup group{report.findings[static_cast<std::size_t>(members[0])], {}};
    for (int m : members)
      group.members.push_back(report.findings[static_cast<std::size_t>(m)]);
    report.groups.push_back(std::move(group));
  }
  std::sort(report.groups.begin(), report.groups.end(),
            [](const FindingGroup& a, const FindingGroup& b) {
              return finding_key(a.representative.avoidance,
                                 a.representative.pattern_a,
                                 a.representative.pattern_b) <
                     finding_key(b.representative.avoidance,
                                 b.representative.pattern_a,
                                 b.representative.pattern_b);
            });
  return report;
}

}  // namespace vinc
