// vinc — vincular pattern statistics on permutations, with equidistribution
// verification and search at desk scale.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vinc/analysis.hpp"

namespace {

using nlohmann::json;
using namespace vinc;

enum class Format { text, js, tsv };

const std::map<std::string, Format> kFormatNames{
    {"text", Format::text}, {"json", Format::js}, {"tsv", Format::tsv}};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot open " + out_path);
  file << content;
}

std::string key_str(const Distribution::Key& key) {
  if (key.size() == 1) return std::to_string(key[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(key[i]);
  }
  return out + ")";
}

// ---- verify rendering ----

json verify_to_json(const VerifyReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back(json{{"n", row.n},
                        {"size", row.domain_size},
                        {"pass", row.pass},
                        {"detail", row.detail}});
  }
  return json{{"name", report.name},
              {"max_n", report.max_n},
              {"pass", report.pass},
              {"rows", rows}};
}

std::string verify_text(const VerifyReport& report) {
  std::string out = report.name + " max-n=" + std::to_string(report.max_n) + "\n";
  for (const auto& row : report.rows) {
    out += "  n=" + std::to_string(row.n) +
           " size=" + std::to_string(row.domain_size) +
           (row.pass ? " ok" : " FAIL");
    if (!row.detail.empty()) out += " " + row.detail;
    out += "\n";
  }
  out += report.name + ": " + (report.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string verify_tsv_rows(const VerifyReport& report) {
  std::string out;
  for (const auto& row : report.rows) {
    out += report.name + "\t" + std::to_string(row.n) + "\t" +
           std::to_string(row.domain_size) + "\t" + (row.pass ? "1" : "0") +
           "\t" + row.detail + "\n";
  }
  return out;
}

std::string render_verify(const std::vector<VerifyReport>& reports,
                          bool combined, Format format) {
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  switch (format) {
    case Format::js: {
      if (!combined) return verify_to_json(reports.front()).dump(2) + "\n";
      json checks = json::array();
      for (const auto& r : reports) checks.push_back(verify_to_json(r));
      return json{{"name", "all"}, {"pass", pass}, {"checks", checks}}.dump(2) +
             "\n";
    }
    case Format::tsv: {
      std::string out = "check\tn\tsize\tpass\tdetail\n";
      for (const auto& r : reports) out += verify_tsv_rows(r);
      return out;
    }
    case Format::text: {
      std::string out;
      for (const auto& r : reports) out += verify_text(r);
      if (combined) out += std::string("all: ") + (pass ? "PASS" : "FAIL") + "\n";
      return out;
    }
  }
  return {};
}

// ---- distribution rendering ----

std::string render_distribution(const Distribution& dist,
                                const MultiStatistic& stats,
                                const AvoidanceClass& cls, int n,
                                Format format) {
  switch (format) {
    case Format::js: {
      json entries = json::array();
      for (const auto& [key, count] : dist.entries())
        entries.push_back(json{{"key", key}, {"count", count}});
      json names = json::array();
      for (const auto& part : stats.parts()) names.push_back(part.name());
      return json{{"class", cls.str()},
                  {"n", n},
                  {"stats", names},
                  {"total", dist.total()},
                  {"entries", entries}}
                 .dump(2) +
             "\n";
    }
    case Format::tsv: {
      std::string out;
      for (const auto& part : stats.parts()) out += part.name() + "\t";
      out += "count\n";
      for (const auto& [key, count] : dist.entries()) {
        for (const auto& v : key) out += std::to_string(v) + "\t";
        out += std::to_string(count) + "\n";
      }
      return out;
    }
    case Format::text: {
      std::string out = "{";
      bool first = true;
      for (const auto& [key, count] : dist.entries()) {
        if (!first) out += ", ";
        first = false;
        out += key_str(key) + ":" + std::to_string(count);
      }
      return out + "}\n";
    }
  }
  return {};
}

// ---- search rendering ----

std::string finding_text(const Finding& f) {
  return f.avoidance.str() + ": " + f.pattern_a.str() + " ~ " +
         f.pattern_b.str();
}

json finding_to_json(const Finding& f) {
  return json{{"pattern_a", f.pattern_a.str()},
              {"pattern_b", f.pattern_b.str()},
              {"class", f.avoidance.str()},
              {"max_n", f.max_n},
              {"status", "equidistributed"}};
}

std::string search_warning(int max_n) {
  return "warning: max-n=" + std::to_string(max_n) +
         " is below the pattern length 3; every remaining pair is trivially "
         "equidistributed";
}

std::string render_search(const SearchReport& report, Format format) {
  switch (format) {
    case Format::js: {
      json findings = json::array();
      for (const auto& f : report.findings) findings.push_back(finding_to_json(f));
      json doc{{"max_n", report.max_n},
               {"modulo_symmetry", report.modulo_symmetry},
               {"findings", findings}};
      if (report.modulo_symmetry) {
        json groups = json::array();
        for (const auto& g : report.groups) {
          json members = json::array();
          for (const auto& m : g.members) members.push_back(finding_to_json(m));
          groups.push_back(json{{"representative", finding_to_json(g.representative)},
                                {"members", members}});
        }
        doc["symmetry_classes"] = groups;
      }
      if (report.max_n < 3) doc["warning"] = search_warning(report.max_n);
      return doc.dump(2) + "\n";
    }
    case Format::tsv: {
      std::string out = "pattern_a\tpattern_b\tclass\tmax_n\tstatus\n";
      for (const auto& f : report.findings)
        out += f.pattern_a.str() + "\t" + f.pattern_b.str() + "\t" +
               f.avoidance.str() + "\t" + std::to_string(f.max_n) +
               "\tequidistributed\n";
      return out;
    }
    case Format::text: {
      std::string out;
      if (report.max_n < 3) out += search_warning(report.max_n) + "\n";
      out += "search max-n=" + std::to_string(report.max_n) +
             ": 12 patterns, 66 pairs, 6 classes\n";
      out += "findings: " + std::to_string(report.findings.size()) + "\n";
      for (const auto& f : report.findings) out += "  " + finding_text(f) + "\n";
      if (report.modulo_symmetry) {
        out += "symmetry classes: " + std::to_string(report.groups.size()) + "\n";
        for (const auto& g : report.groups) {
          out += "  [" + finding_text(g.representative) + "] " +
                 std::to_string(g.members.size()) + " members\n";
          for (const auto& m : g.members) out += "    " + finding_text(m) + "\n";
        }
      }
      return out;
    }
  }
  return {};
}

// ---- seed-docs ----

std::string worked_examples_markdown() {
  const Permutation host = Permutation::parse("425163");
  const Permutation desc_host = Permutation::parse("45312");
  struct RowSpec {
    std::string label;
    std::int64_t value;
  };
  std::vector<RowSpec> rows;
  for (const char* text : {"2-13", "[2-13", "1-2]", "2-1]"})
    rows.push_back({std::string("(") + text + ") 425163",
                    count_occurrences(VincularPattern::parse(text), host)});
  rows.push_back({"(2-3-1) 13452",
                  count_occurrences(VincularPattern::parse("2-3-1"),
                                    Permutation::parse("13452"))});
  rows.push_back({"des 45312", des(desc_host)});
  rows.push_back({"rlmax 45312", rlmax(desc_host)});
  rows.push_back({"rlmin 45312", rlmin(desc_host)});
  std::string out = "| expression | value |\n| --- | --- |\n";
  for (const auto& row : rows)
    out += "| " + row.label + " | " + std::to_string(row.value) + " |\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vincular pattern statistics on permutations"};
  app.require_subcommand(1);
  int exit_code = 0;

  // count <pattern> <permutation>
  auto count_opts = std::make_shared<std::pair<std::string, std::string>>();
  auto* cmd_count = app.add_subcommand("count",
                                       "occurrences of a vincular pattern");
  cmd_count->add_option("pattern", count_opts->first, "pattern text, e.g. 2-31")
      ->required();
  cmd_count->add_option("permutation", count_opts->second,
                        "host permutation, e.g. 425163");
  cmd_count->callback([count_opts]() {
    const auto pattern = VincularPattern::parse(count_opts->first);
    const auto host = Permutation::parse(count_opts->second);
    std::cout << count_occurrences(pattern, host) << "\n";
  });

  // apply <map> <permutation>
  struct ApplyOpts {
    std::string map;
    std::string perm;
  };
  auto apply_opts = std::make_shared<ApplyOpts>();
  auto* cmd_apply = app.add_subcommand("apply", "apply a bijection or symmetry");
  cmd_apply
      ->add_option("map", apply_opts->map,
                   "one of phi, psi, mu, inverse, reverse, complement")
      ->required()
      ->check(CLI::IsMember(
          {"phi", "psi", "mu", "inverse", "reverse", "complement"}));
  cmd_apply->add_option("permutation", apply_opts->perm, "input permutation");
  cmd_apply->callback([apply_opts]() {
    const auto p = Permutation::parse(apply_opts->perm);
    Permutation image;
    if (apply_opts->map == "phi") image = phi(p);
    else if (apply_opts->map == "psi") image = psi(p);
    else if (apply_opts->map == "mu") image = mu(p);
    else if (apply_opts->map == "inverse") image = inverse(p);
    else if (apply_opts->map == "reverse") image = reverse(p);
    else image = complement(p);
    std::cout << image.str() << "\n";
  });

  // verify <name> [--max-n] [--format] [--out]
  struct VerifyOpts {
    std::string name;
    int max_n = -1;
    Format format = Format::text;
    std::string out;
  };
  auto verify_opts = std::make_shared<VerifyOpts>();
  auto* cmd_verify = app.add_subcommand(
      "verify", "exhaustively check a named theorem, identity, or 'all'");
  cmd_verify->add_option("name", verify_opts->name,
                         "theorem1|theorem2|theorem3|prop1|prop2|prop4|"
                         "lemma1|eq1|fact1|fact_des|bona|all")
      ->required();
  cmd_verify->add_option("--max-n", verify_opts->max_n,
                         "largest n to sweep (default per check)");
  cmd_verify->add_option("--format", verify_opts->format, "text|json|tsv")
      ->transform(CLI::CheckedTransformer(kFormatNames));
  cmd_verify->add_option("--out", verify_opts->out, "write the report here");
  cmd_verify->callback([verify_opts, &exit_code]() {
    std::vector<VerifyReport> reports;
    const bool combined = verify_opts->name == "all";
    if (combined) {
      for (TheoremId id : all_theorem_ids()) {
        const int max_n =
            verify_opts->max_n >= 0 ? verify_opts->max_n : default_max_n(id);
        reports.push_back(verify_theorem(id, max_n));
      }
      reports.push_back(verify_bona_totals(
          verify_opts->max_n >= 0 ? verify_opts->max_n : 10));
    } else if (verify_opts->name == "bona") {
      reports.push_back(verify_bona_totals(
          verify_opts->max_n >= 0 ? verify_opts->max_n : 10));
    } else {
      const TheoremId id = parse_theorem_id(verify_opts->name);
      const int max_n =
          verify_opts->max_n >= 0 ? verify_opts->max_n : default_max_n(id);
      reports.push_back(verify_theorem(id, max_n));
    }
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;
    emit(verify_opts->out, render_verify(reports, combined, verify_opts->format));
    if (!pass) exit_code = 1;
  });

  // distribution --avoid --n --stats [--format] [--out]
  struct DistOpts {
    std::string avoid;
    int n = 0;
    std::string stats;
    Format format = Format::text;
    std::string out;
  };
  auto dist_opts = std::make_shared<DistOpts>();
  auto* cmd_dist = app.add_subcommand(
      "distribution", "value table of a multistatistic over an avoidance class");
  cmd_dist->add_option("--avoid", dist_opts->avoid, "avoided pattern, e.g. 132")
      ->required();
  cmd_dist->add_option("--n", dist_opts->n, "permutation length")->required();
  cmd_dist->add_option("--stats", dist_opts->stats,
                       "comma-separated statistics, e.g. 2-31,des")
      ->required();
  cmd_dist->add_option("--format", dist_opts->format, "text|json|tsv")
      ->transform(CLI::CheckedTransformer(kFormatNames));
  cmd_dist->add_option("--out", dist_opts->out, "write the table here");
  cmd_dist->callback([dist_opts]() {
    const auto cls = AvoidanceClass::parse(dist_opts->avoid);
    const auto stats = MultiStatistic::parse(dist_opts->stats);
    const auto table = distribution(stats, cls, dist_opts->n);
    emit(dist_opts->out,
         render_distribution(table, stats, cls, dist_opts->n, dist_opts->format));
  });

  // enumerate [--avoid] --n [--count-only] [--out]
  struct EnumOpts {
    std::string avoid;
    int n = 0;
    bool count_only = false;
    std::string out;
  };
  auto enum_opts = std::make_shared<EnumOpts>();
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "list S_n or an avoidance class in lexicographic order");
  cmd_enum->add_option("--avoid", enum_opts->avoid,
                       "avoided pattern; omit for the full S_n");
  cmd_enum->add_option("--n", enum_opts->n, "permutation length")->required();
  cmd_enum->add_flag("--count-only", enum_opts->count_only,
                     "print only the cardinality");
  cmd_enum->add_option("--out", enum_opts->out, "write the listing here");
  cmd_enum->callback([enum_opts]() {
    const auto perms =
        enum_opts->avoid.empty()
            ? all_permutations(enum_opts->n)
            : avoiders(AvoidanceClass::parse(enum_opts->avoid), enum_opts->n);
    std::string out;
    if (enum_opts->count_only) {
      out = std::to_string(perms.size()) + "\n";
    } else {
      for (const auto& p : perms) out += p.str() + "\n";
    }
    emit(enum_opts->out, out);
  });

  // search [--max-n] [--modulo-symmetry] [--format] [--out]
  struct SearchOpts {
    int max_n = 9;
    bool modulo_symmetry = false;
    Format format = Format::text;
    std::string out;
  };
  auto search_opts = std::make_shared<SearchOpts>();
  auto* cmd_search = app.add_subcommand(
      "search", "find equidistributed proper pattern pairs on all six classes");
  cmd_search->add_option("--max-n", search_opts->max_n,
                         "largest n compared (default 9)");
  cmd_search->add_flag("--modulo-symmetry", search_opts->modulo_symmetry,
                       "group findings under reverse/complement transport");
  cmd_search->add_option("--format", search_opts->format, "text|json|tsv")
      ->transform(CLI::CheckedTransformer(kFormatNames));
  cmd_search->add_option("--out", search_opts->out, "write the report here");
  cmd_search->callback([search_opts]() {
    const auto report =
        search_equidistributed(search_opts->max_n, search_opts->modulo_symmetry);
    emit(search_opts->out, render_search(report, search_opts->format));
  });

  // seed-docs (hidden): regenerate the worked-example table for the README
  auto* cmd_seed = app.add_subcommand("seed-docs", "");
  cmd_seed->group("");
  cmd_seed->callback([]() { std::cout << worked_examples_markdown(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const vinc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
