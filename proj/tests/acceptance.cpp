// Acceptance suite: runs the full battery of exhaustive checks at their
// contractual bounds and prints one PASS/FAIL line per criterion.
//
// Usage: acceptance [path-to-vinc-cli]
// The search-reproduction criterion drives the CLI end to end when the
// path is given; otherwise it runs through the library.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracle.hpp"
#include "vinc/analysis.hpp"

using namespace vinc;
using nlohmann::json;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what,
            const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << what;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << "\n";
  if (!pass) ++failures;
}

Permutation P(const char* text) { return Permutation::parse(text); }
VincularPattern V(const char* text) { return VincularPattern::parse(text); }

bool verify_passes(TheoremId id, int max_n, std::string& detail) {
  const VerifyReport rep = verify_theorem(id, max_n);
  if (rep.pass) return true;
  for (const auto& row : rep.rows)
    if (!row.pass) {
      detail = theorem_name(id) + " n=" + std::to_string(row.n) + " " +
               row.detail;
      return false;
    }
  return false;
}

std::string run_command(const std::string& cmd, int& exit_code) {
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return output;
  }
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    output.append(buffer, got);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

std::string key_of(const std::string& cls, const std::string& a,
                   const std::string& b) {
  return cls + "|" + a + "|" + b;
}

std::string key_of(const Finding& f) {
  return key_of(f.avoidance.str(), f.pattern_a.str(), f.pattern_b.str());
}

// the four base findings transported by {id, reverse, complement, both}
std::set<std::string> expected_search_keys() {
  const std::vector<std::pair<const char*, const char*>> base{
      {"2-13", "2-31"}, {"2-13", "21-3"}, {"2-31", "21-3"}, {"23-1", "3-12"}};
  const Permutation sigma = P("132");
  std::set<std::string> keys;
  for (const auto& [a_text, b_text] : base) {
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        VincularPattern a = V(a_text);
        VincularPattern b = V(b_text);
        Permutation s = sigma;
        if (r) {
          a = reverse_pattern(a);
          b = reverse_pattern(b);
          s = reverse(s);
        }
        if (c) {
          a = complement_pattern(a);
          b = complement_pattern(b);
          s = complement(s);
        }
        std::string sa = a.str(), sb = b.str();
        if (sb < sa) std::swap(sa, sb);
        keys.insert(key_of(s.str(), sa, sb));
      }
    }
  }
  return keys;
}

void criterion_1() {
  bool pass = count_occurrences(V("2-13"), P("425163")) == 4 &&
              count_occurrences(V("[2-13"), P("425163")) == 2 &&
              count_occurrences(V("2-3-1"), P("13452")) == 3 &&
              des(P("45312")) == 2;
  report(1, pass, "worked examples reproduce exactly");
}

void criterion_2() {
  std::string detail;
  const bool pass = verify_passes(TheoremId::theorem1, 10, detail);
  report(2, pass, "phi involution and 4-tuple exchange on all n <= 10", detail);
}

void criterion_3() {
  std::string detail;
  const bool pass = verify_passes(TheoremId::theorem2, 10, detail);
  report(3, pass, "psi bijection, cases, and (2-13,des)=(2-31,des) on all n <= 10",
         detail);
}

void criterion_4() {
  std::string detail;
  const bool pass = verify_passes(TheoremId::theorem3, 10, detail);
  report(4, pass,
         "mu bijection and (21-3,des,1-2])=(2-13,des,1-2]) on all n <= 10",
         detail);
}

void criterion_5() {
  std::string detail;
  const bool pass = verify_passes(TheoremId::prop4, 10, detail);
  report(5, pass, "inverse exchanges (23-1,3-12,des) on all n <= 10", detail);
}

void criterion_6() {
  std::string detail;
  bool pass = verify_passes(TheoremId::eq1, 8, detail) &&
              verify_passes(TheoremId::lemma1, 8, detail) &&
              verify_passes(TheoremId::fact1, 8, detail) &&
              verify_passes(TheoremId::fact_des, 8, detail);
  report(6, pass, "count identities and descent sum law on all of S_n, n <= 8",
         detail);
}

void criterion_7() {
  std::vector<VincularPattern> patterns = proper_length3_patterns();
  for (const char* text : {"1-2]", "2-1]", "[1-2", "[2-1"})
    patterns.push_back(V(text));
  bool pass = true;
  std::string detail;
  for (int n = 0; n <= 7 && pass; ++n) {
    for (const auto& host : all_permutations(n)) {
      for (const auto& pat : patterns) {
        if (count_occurrences(pat, host) != vinc_test::oracle_count(pat, host)) {
          pass = false;
          detail = "pattern " + pat.str() + " host " + host.str();
          break;
        }
      }
      if (!pass) break;
    }
  }
  report(7, pass, "occurrence counter matches the naive oracle on S_n, n <= 7",
         detail);
}

void criterion_8() {
  const auto a = MultiStatistic::parse("2-31,2-13,des");
  const auto b = MultiStatistic::parse("2-13,2-31,des");
  const auto diff =
      first_difference(a, b, AvoidanceClass::parse("132"), 7);
  if (!diff) {
    report(8, false, "joint swapped triples must differ on S_n(132), n <= 7",
           "no counterexample found");
    return;
  }
  std::string key = "(";
  for (std::size_t i = 0; i < diff->key.size(); ++i)
    key += (i ? "," : "") + std::to_string(diff->key[i]);
  key += ")";
  report(8, true, "joint swapped triples differ on S_n(132)",
         "counterexample at n=" + std::to_string(diff->n) + " value " + key +
             ": " + std::to_string(diff->count_a) + " vs " +
             std::to_string(diff->count_b));
}

void criterion_9(const char* cli) {
  const auto started = std::chrono::steady_clock::now();
  std::set<std::string> found;
  std::vector<std::string> on_132;
  std::size_t group_count = 0;
  std::vector<std::size_t> group_sizes;
  bool ran = true;
  std::string how;
  if (cli) {
    how = "via the CLI";
    int exit_code = 0;
    const std::string output = run_command(
        std::string(cli) + " search --max-n 9 --modulo-symmetry --format json",
        exit_code);
    if (exit_code != 0) {
      report(9, false, "search reproduction", "CLI exited with " +
                                                  std::to_string(exit_code));
      return;
    }
    const json doc = json::parse(output, nullptr, false);
    if (doc.is_discarded()) {
      report(9, false, "search reproduction", "CLI emitted invalid JSON");
      return;
    }
    for (const auto& f : doc["findings"]) {
      const std::string key = key_of(f["class"], f["pattern_a"], f["pattern_b"]);
      found.insert(key);
      if (f["class"] == "132")
        on_132.push_back(std::string(f["pattern_a"]) + "~" +
                         std::string(f["pattern_b"]));
    }
    group_count = doc["symmetry_classes"].size();
    for (const auto& g : doc["symmetry_classes"])
      group_sizes.push_back(g["members"].size());
  } else {
    how = "via the library (no CLI path given)";
    const SearchReport rep = search_equidistributed(9, true);
    for (const auto& f : rep.findings) {
      found.insert(key_of(f));
      if (f.avoidance.str() == "132")
        on_132.push_back(f.pattern_a.str() + "~" + f.pattern_b.str());
    }
    group_count = rep.groups.size();
    for (const auto& g : rep.groups) group_sizes.push_back(g.members.size());
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  std::sort(on_132.begin(), on_132.end());
  std::sort(group_sizes.begin(), group_sizes.end());
  const std::vector<std::string> expected_132{"2-13~2-31", "2-13~21-3",
                                              "2-31~21-3", "23-1~3-12"};
  bool pass = ran && on_132 == expected_132 && found == expected_search_keys() &&
              group_count == 2 &&
              group_sizes == std::vector<std::size_t>{4, 12} && elapsed < 60000;
  report(9, pass,
         "search --max-n 9 --modulo-symmetry finds the clique {2-31,2-13,21-3} "
         "and the pair {23-1,3-12} on 132 and nothing outside their orbits",
         how + ", " + std::to_string(found.size()) + " findings, " +
             std::to_string(elapsed) + " ms");
}

void criterion_10() {
  const VerifyReport rep = verify_bona_totals(10);
  std::string detail;
  for (const auto& row : rep.rows)
    if (row.n == 10) detail = row.detail;
  report(10, rep.pass,
         "cumulative 231 and 213 occurrences agree on S_n(132), n <= 10",
         detail);
}

void criterion_11() {
  const std::vector<std::int64_t> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  bool pass = true;
  std::string detail;
  for (const auto& cls : all_avoidance_classes()) {
    for (int n = 0; n <= 8 && pass; ++n) {
      const auto listed = avoiders(cls, n);
      if (static_cast<std::int64_t>(listed.size()) !=
          expected[static_cast<std::size_t>(n)]) {
        pass = false;
        detail = "class " + cls.str() + " n=" + std::to_string(n) + " got " +
                 std::to_string(listed.size());
        break;
      }
      std::vector<Permutation> filtered;
      for (const auto& p : all_permutations(n))
        if (avoids(p, cls.sigma())) filtered.push_back(p);
      if (listed != filtered) {
        pass = false;
        detail = "class " + cls.str() + " n=" + std::to_string(n) +
                 " differs from filtered S_n";
        break;
      }
    }
  }
  report(11, pass, "all six classes count 1,1,2,5,14,42,132,429,1430 and match "
                   "filtered S_n",
         detail);
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9(cli);
  criterion_10();
  criterion_11();
  if (failures == 0) {
    std::cout << "acceptance: all 11 criteria PASS\n";
  } else {
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
  }
  return failures == 0 ? 0 : 1;
}
