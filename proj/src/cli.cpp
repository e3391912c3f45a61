#include "hemi/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hemi/carrier_io.hpp"
#include "hemi/fuzzy_io.hpp"
#include "hemi/fuzzy_structure.hpp"
#include "hemi/harness.hpp"
#include "hemi/model_finder.hpp"

namespace hemi {

namespace {

struct Options {
  std::string builtin_name;
  std::string file;
  std::string kind = "h";
  std::string side = "left";
  std::string subset;
  std::vector<std::string> fuzzy_files;
  std::vector<std::string> rules;
  std::string grades;
  std::string fine_grades;
  std::uint64_t bound = 60;
  std::string format = "text";
  std::string form = "single";
  bool definitional = false;

  // verify
  std::vector<std::string> suites;
  std::vector<std::string> builtins;
  std::string builtin_set;
  std::uint64_t seed = 20070101;
  std::size_t samples = 1000;
  unsigned jobs = 1;
  std::string report;
  bool compare_products = false;
  bool no_counterexamples = false;

  // find
  std::size_t order = 3;
  bool exact = false;
  std::string filter;
  std::size_t limit = 0;
  std::string out_dir;
};

class Usage : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

FiniteHemiring load_carrier(const Options& o) {
  if (!o.builtin_name.empty() && !o.file.empty()) throw Usage("use either --builtin or --file");
  if (!o.file.empty()) return parse_carrier_file(o.file);
  if (!o.builtin_name.empty()) return builtin(o.builtin_name);
  throw Usage("a carrier is required (--builtin NAME or --file PATH)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Fuzzy inputs are files or inline N0 rules; a set over N0 needs no carrier.
struct FuzzyInputs {
  std::vector<FuzzySet> finite;
  std::vector<N0FuzzySet> n0;
};

FuzzyInputs load_fuzzy(const Options& o) {
  FuzzyInputs in;
  std::optional<FiniteHemiring> carrier;
  for (const auto& path : o.fuzzy_files) {
    if (is_n0_fuzzy_file(path)) {
      in.n0.push_back(parse_fuzzy_n0_text(read_file(path)));
    } else {
      if (!carrier) carrier = load_carrier(o);
      in.finite.push_back(parse_fuzzy_text(read_file(path), *carrier));
    }
  }
  for (std::size_t i = 0; i < o.rules.size(); ++i) {
    in.n0.push_back(N0FuzzySet::parse_rule("rule" + std::to_string(i + 1), o.rules[i]));
  }
  if (!in.finite.empty() && !in.n0.empty()) throw Usage("cannot mix finite and N0 fuzzy sets");
  if (in.finite.empty() && in.n0.empty()) throw Usage("a fuzzy set is required (--fuzzy or --rule)");
  return in;
}

// Prints a verdict and returns the exit status it maps to.
int report_verdict(std::ostream& out, const Verdict& v) {
  out << v.to_string() << "\n";
  if (v.is_bounded()) {
    out << "note: quantifiers checked up to " << v.bound() << " only\n";
  }
  return v.passed() ? exit_ok : exit_fails;
}

std::vector<Grade> grades_or(const std::string& text, std::vector<Grade> fallback) {
  return text.empty() ? fallback : parse_grade_list(text);
}

HProductForm parse_hform(const std::string& text) {
  if (text == "single") return HProductForm::single;
  if (text == "sums") return HProductForm::sums;
  throw Usage("unknown product form '" + text + "'");
}

int cmd_check(const Options& o, std::ostream& out) {
  try {
    auto c = load_carrier(o);
    out << check_axioms(c.add_table(), c.mul_table()).to_string() << "\n";
    return exit_ok;
  } catch (const AxiomError& e) {
    out << e.report().to_string() << "\n";
    return exit_fails;
  }
}

int cmd_ideals(const Options& o, std::ostream& out) {
  const auto c = load_carrier(o);
  for (const auto& a : enumerate_ideals(c, parse_ideal_kind(o.kind), parse_side(o.side))) {
    out << a.to_string() << "\n";
  }
  return exit_ok;
}

int cmd_hclosure(const Options& o, std::ostream& out) {
  const auto c = load_carrier(o);
  if (o.subset.empty()) throw Usage("--subset is required");
  out << h_closure(CrispSubset::parse(c, o.subset)).to_string() << "\n";
  return exit_ok;
}

int cmd_hemiregular(const Options& o, std::ostream& out) {
  const auto r = is_h_hemiregular(load_carrier(o));
  const int code = report_verdict(out, r.verdict);
  if (r.witness) {
    for (std::size_t a = 0; a < r.witness->triples.size(); ++a) {
      const auto& t = r.witness->triples[a];
      out << "a=" << a << " x1=" << t[0] << " x2=" << t[1] << " z=" << t[2] << "\n";
    }
  }
  return code;
}

int cmd_fuzzy_check(const Options& o, std::ostream& out) {
  const auto in = load_fuzzy(o);
  const auto kind = parse_ideal_kind(o.kind);
  const auto side = parse_side(o.side);
  int code = exit_ok;
  auto run = [&](const std::string& name, const Verdict& v) {
    out << name << ": ";
    code = std::max(code, report_verdict(out, v));
  };
  for (const auto& mu : in.finite) {
    run(mu.name(), kind == IdealKind::plain ? is_fuzzy_ideal(mu, side)
                   : kind == IdealKind::k   ? is_fuzzy_k_ideal(mu, side)
                                            : is_fuzzy_h_ideal(mu, side));
  }
  const BoundedN0Carrier n0(o.bound);
  for (const auto& mu : in.n0) {
    run(mu.name(), kind == IdealKind::plain ? is_fuzzy_ideal(n0, mu, side)
                   : kind == IdealKind::k   ? is_fuzzy_k_ideal(n0, mu, side)
                                            : is_fuzzy_h_ideal(n0, mu, side));
  }
  return code;
}

int cmd_hproduct(const Options& o, std::ostream& out) {
  const auto in = load_fuzzy(o);
  if (in.finite.size() + in.n0.size() != 2) throw Usage("hproduct needs exactly two fuzzy sets");
  if (in.finite.size() == 2) {
    const auto prod = h_product(in.finite[0], in.finite[1], parse_hform(o.form));
    out << write_fuzzy(prod.with_name(in.finite[0].name() + "_h_" + in.finite[1].name()));
    return exit_ok;
  }
  if (o.form != "single") throw Usage("only the single-product form is available over N0");
  const auto prod = h_product(BoundedN0Carrier(o.bound), in.n0[0], in.n0[1]);
  for (Element n = 0; n <= o.bound; ++n) out << n << " " << prod(n).to_string() << "\n";
  out << "note: decompositions searched up to " << o.bound << " only\n";
  return exit_ok;
}

int cmd_prime(const Options& o, std::ostream& out) {
  const auto side = parse_side(o.side);
  if (!o.subset.empty()) {
    const auto c = load_carrier(o);
    return report_verdict(out, is_prime_h_ideal(CrispSubset::parse(c, o.subset), side));
  }
  const auto in = load_fuzzy(o);
  if (in.finite.size() + in.n0.size() != 1) throw Usage("prime takes one fuzzy set");
  if (!in.n0.empty()) {
    const auto report = is_prime_fuzzy_h_ideal(BoundedN0Carrier(o.bound), in.n0[0], side);
    out << report.render();
    if (report.verdict.is_bounded()) out << "note: quantifiers checked up to " << o.bound << " only\n";
    return report.verdict.passed() ? exit_ok : exit_fails;
  }
  const auto& zeta = in.finite[0];
  const auto report = is_prime_fuzzy_h_ideal(zeta, side);
  out << report.render();
  int code = report.verdict.passed() ? exit_ok : exit_fails;
  if (o.definitional) {
    const auto grades = grades_or(o.grades, SuiteParams{}.fine_grades);
    const auto v = is_prime_definitional(zeta, grades, side);
    out << "definition: " << v.to_string() << "\n";
    if (v.passed() != report.verdict.passed()) code = exit_fails;
  }
  return code;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const auto in = load_fuzzy(o);
  if (in.finite.size() != 1 || !in.n0.empty()) throw Usage("normalize takes one finite fuzzy set");
  const auto& mu = in.finite[0];
  out << write_fuzzy(normalize_plus(mu, parse_side(o.side)).with_name(mu.name() + "_plus"));
  return exit_ok;
}

int cmd_maximal(const Options& o, std::ostream& out) {
  const auto side = parse_side(o.side);
  if (o.fuzzy_files.empty() && o.rules.empty()) {
    for (const auto& m : maximal_h_ideals(load_carrier(o), side)) out << m.to_string() << "\n";
    return exit_ok;
  }
  const auto in = load_fuzzy(o);
  if (in.finite.size() != 1 || !in.n0.empty()) throw Usage("maximal takes one finite fuzzy set");
  return report_verdict(out, is_maximal_fuzzy_h_ideal(in.finite[0], side));
}

int cmd_verify(const Options& o, std::ostream& out) {
  RunConfig config;
  for (const auto& s : o.suites)
    if (s != "all") config.suites.push_back(s);
  if (!o.builtin_set.empty() && o.builtin_set != "default") {
    throw Usage("unknown builtin set '" + o.builtin_set + "'");
  }
  if (!o.builtins.empty()) config.builtins = o.builtins;
  config.params.coarse_grades = grades_or(o.grades, config.params.coarse_grades);
  config.params.fine_grades = grades_or(o.fine_grades, config.params.fine_grades);
  config.params.bound = o.bound;
  config.params.seed = o.seed;
  config.params.samples = o.samples;
  config.params.hproduct_form = parse_hform(o.form);
  config.include_counterexamples = !o.no_counterexamples;
  config.compare_product_forms = o.compare_products;
  config.jobs = o.jobs;
  const auto aggregate = run_all(config);

  if (o.format == "machine") {
    for (const auto& r : aggregate.reports) out << r.machine_line() << "\n";
  } else if (o.format == "json") {
    for (const auto& r : aggregate.reports) out << r.json() << "\n";
  } else {
    out << aggregate.text();
  }
  if (!o.report.empty()) {
    std::ofstream file(o.report);
    if (!file) throw Error("cannot write " + o.report);
    for (const auto& r : aggregate.reports) file << r.json() << "\n";
  }
  return aggregate.exit_code();
}

int cmd_find(const Options& o, std::ostream& out) {
  SearchQuery query;
  query.order = o.order;
  query.exact = o.exact;
  query.filters = parse_search_filters(o.filter);
  query.limit = o.limit;
  query.jobs = o.jobs;
  const auto hits = find(query);
  for (const auto& hit : hits) {
    if (o.format == "machine") {
      out << hit.carrier.name() << "\t" << hit.carrier.order();
      for (const auto& w : hit.witnesses) out << "\t" << w;
      out << "\n";
    } else {
      out << hit.carrier.name() << " (order " << hit.carrier.order() << ")\n";
      for (const auto& w : hit.witnesses) out << "  " << w << "\n";
    }
  }
  if (o.format != "machine") out << "hits: " << hits.size() << "\n";
  if (!o.out_dir.empty()) out << "index: " << write_hits(hits, o.out_dir) << "\n";
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite hemiring and fuzzy h-ideal toolkit"};
  app.require_subcommand(1);
  Options o;

  auto carrier_flags = [&](CLI::App* cmd) {
    cmd->add_option("--builtin", o.builtin_name, "builtin carrier, e.g. example21 or zmod(4)");
    cmd->add_option("--file", o.file, "carrier file");
  };
  auto kind_side = [&](CLI::App* cmd) {
    cmd->add_option("--kind", o.kind, "plain|k|h")->check(CLI::IsMember({"plain", "k", "h"}));
    cmd->add_option("--side", o.side, "left|right")->check(CLI::IsMember({"left", "right"}));
  };
  auto fuzzy_flags = [&](CLI::App* cmd) {
    cmd->add_option("--fuzzy", o.fuzzy_files, "fuzzy set file (repeatable)");
    cmd->add_option("--rule", o.rules, "fuzzy set over N0, e.g. 'even -> 1, odd -> 0.2'");
    cmd->add_option("--bound", o.bound, "quantifier bound for N0");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    auto* cmd = app.add_subcommand(name, help);
    commands.emplace_back(cmd, fn);
    return cmd;
  };

  carrier_flags(add("check", "verify the hemiring axioms", cmd_check));
  {
    auto* cmd = add("ideals", "list ideals of a kind and side", cmd_ideals);
    carrier_flags(cmd);
    kind_side(cmd);
  }
  {
    auto* cmd = add("hclosure", "h-closure of a subset", cmd_hclosure);
    carrier_flags(cmd);
    cmd->add_option("--subset", o.subset, "comma-separated elements");
  }
  carrier_flags(add("hemiregular", "decide h-hemiregularity", cmd_hemiregular));
  {
    auto* cmd = add("fuzzy-check", "fuzzy ideal predicates", cmd_fuzzy_check);
    carrier_flags(cmd);
    kind_side(cmd);
    fuzzy_flags(cmd);
  }
  {
    auto* cmd = add("hproduct", "h-product of two fuzzy sets", cmd_hproduct);
    carrier_flags(cmd);
    fuzzy_flags(cmd);
    cmd->add_option("--form", o.form, "single|sums");
  }
  {
    auto* cmd = add("prime", "primality of an h-ideal or fuzzy h-ideal", cmd_prime);
    carrier_flags(cmd);
    kind_side(cmd);
    fuzzy_flags(cmd);
    cmd->add_option("--subset", o.subset, "crisp h-ideal to test");
    cmd->add_flag("--definitional", o.definitional, "also check against the definition");
    cmd->add_option("--grades", o.grades, "grade set for --definitional");
  }
  {
    auto* cmd = add("normalize", "shift a fuzzy h-ideal to a normal one", cmd_normalize);
    carrier_flags(cmd);
    kind_side(cmd);
    fuzzy_flags(cmd);
  }
  {
    auto* cmd = add("maximal", "maximal h-ideals, or test a fuzzy set", cmd_maximal);
    carrier_flags(cmd);
    kind_side(cmd);
    fuzzy_flags(cmd);
  }
  {
    auto* cmd = add("verify", "run verification suites", cmd_verify);
    cmd->add_option("--suite", o.suites, "suite id or all (repeatable)");
    cmd->add_option("--builtin", o.builtins, "builtin carrier (repeatable)");
    cmd->add_option("--builtin-set", o.builtin_set, "default");
    cmd->add_option("--grades", o.grades, "coarse grade set");
    cmd->add_option("--fine-grades", o.fine_grades, "fine grade set");
    cmd->add_option("--bound", o.bound, "N0 bound");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--samples", o.samples, "random samples per suite");
    cmd->add_option("--jobs", o.jobs, "worker threads");
    cmd->add_option("--form", o.form, "h-product form: single|sums");
    cmd->add_option("--format", o.format, "text|machine|json")
        ->check(CLI::IsMember({"text", "machine", "json"}));
    cmd->add_option("--report", o.report, "write JSON lines to this file");
    cmd->add_flag("--compare-products", o.compare_products, "annotate sum-form differences");
    cmd->add_flag("--no-counterexamples", o.no_counterexamples, "skip the N0 examples");
  }
  {
    auto* cmd = add("find", "search small hemirings", cmd_find);
    cmd->add_option("--order", o.order, "largest order (at most 5)");
    cmd->add_flag("--exact", o.exact, "only the given order");
    cmd->add_option("--filter", o.filter, "comma-separated filters");
    cmd->add_option("--limit", o.limit, "maximum hits, 0 for all");
    cmd->add_option("--out", o.out_dir, "write hits and index.tsv here");
    cmd->add_option("--jobs", o.jobs, "worker threads");
    cmd->add_option("--format", o.format, "text|machine")->check(CLI::IsMember({"text", "machine"}));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  for (const auto& [cmd, fn] : commands) {
    if (!cmd->parsed()) continue;
    try {
      return fn(o, out);
    } catch (const Usage& e) {
      err << "usage error: " << e.what() << "\n";
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << "\n";
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
    }
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace hemi
