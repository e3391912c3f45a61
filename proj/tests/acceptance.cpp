// Acceptance checks: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail LIST]
//
// Exits 0 when the set of failing criteria equals LIST (empty by default).
#include <chrono>
#include <cstdio>
#include <functional>
#include <fstream>
#include <map>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hemi/fuzzy_structure.hpp"
#include "hemi/harness.hpp"
#include "hemi/model_finder.hpp"
#include "oracles.hpp"

using namespace hemi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 means no limit
  std::function<Outcome()> run;
};

std::string set_text(const CrispSubset& s) { return "{" + s.to_string() + "}"; }

std::vector<FiniteHemiring> builtins_up_to(std::size_t order) {
  std::vector<FiniteHemiring> out;
  for (const auto& name : default_builtin_names()) {
    auto c = builtin(name);
    if (c.order() <= order) out.push_back(c);
  }
  return out;
}

std::vector<CrispSubset> all_subsets(const FiniteHemiring& c) {
  std::vector<CrispSubset> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << c.order()); ++m) {
    out.push_back(CrispSubset::from_mask(c, m));
  }
  return out;
}

Outcome axioms_and_mutations() {
  const auto s = builtins::example21();
  if (!check_axioms(s.add_table(), s.mul_table()).passed) return {false, "example21 rejected"};
  std::size_t mutations = 0, broken = 0, caught = 0, still_valid = 0, disagree = 0;
  std::string example;
  for (int which = 0; which < 2; ++which)
    for (Element r = 1; r < 4; ++r)
      for (Element c = 1; c < 4; ++c)
        for (Element v = 0; v < 4; ++v) {
          auto add = s.add_table();
          auto mul = s.mul_table();
          auto& t = which == 0 ? add : mul;
          if (t[r][c] == v) continue;
          t[r][c] = v;
          ++mutations;
          oracle::Flat fa, fm;
          for (const auto& row : add) fa.insert(fa.end(), row.begin(), row.end());
          for (const auto& row : mul) fm.insert(fm.end(), row.begin(), row.end());
          const bool valid = oracle::axioms(4, fa, fm);
          const auto report = check_axioms(add, mul);
          if (report.passed != valid) ++disagree;
          if (valid) {
            ++still_valid;
            if (example.empty()) {
              example = std::string(which == 0 ? "add" : "mul") + "[" + std::to_string(r) + "][" +
                        std::to_string(c) + "]=" + std::to_string(v);
            }
          } else {
            ++broken;
            if (!report.passed && !report.violations.front().witness.empty()) ++caught;
          }
        }
  // Cells in row or column 0 are rejected structurally (zero misplaced).
  std::ostringstream d;
  d << mutations << " non-zero-cell mutations: " << broken << " break an axiom, " << caught
    << " of them reported with a witness; " << still_valid
    << " yield another hemiring (e.g. " << example << "), confirmed by the oracle; "
    << disagree << " checker/oracle disagreements";
  return {still_valid == 0 && caught == broken && disagree == 0, d.str()};
}

Outcome crisp_theory() {
  const auto s = builtins::example21();
  std::vector<CrispSubset> expected;
  for (const auto& a : all_subsets(s)) {
    std::vector<bool> bits(4);
    for (Element x = 0; x < 4; ++x) bits[x] = a.contains(x);
    if (oracle::h_ideal(s, bits, true)) expected.push_back(a);
  }
  const auto found = enumerate_ideals(s, IdealKind::h, Side::left);
  const bool ideals_ok = found == expected && found.size() == 2 &&
                         found[0].to_string() == "0,1,2" && found[1].is_whole();
  const bool closure_ok = h_closure(CrispSubset(s, std::vector<Element>{0})).to_string() == "0,1,2";
  std::size_t subsets = 0, not_extensive = 0, not_extensive_with_zero = 0, not_idempotent = 0,
              not_monotone = 0;
  std::string ext_example, idem_example;
  for (const auto& c : builtins_up_to(4)) {
    const auto subs = all_subsets(c);
    std::vector<CrispSubset> cls;
    for (const auto& a : subs) {
      ++subsets;
      const auto cl = h_closure(a);
      if (!a.subset_of(cl)) {
        ++not_extensive;
        if (a.contains(0)) ++not_extensive_with_zero;
        if (ext_example.empty()) ext_example = c.name() + " " + set_text(a) + " -> " + set_text(cl);
      }
      if (!(h_closure(cl) == cl)) {
        ++not_idempotent;
        if (idem_example.empty()) {
          idem_example = c.name() + " " + set_text(a) + " -> " + set_text(cl) + " -> " +
                         set_text(h_closure(cl));
        }
      }
      cls.push_back(cl);
    }
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = 0; j < subs.size(); ++j)
        if (subs[i].subset_of(subs[j]) && !cls[i].subset_of(cls[j])) ++not_monotone;
  }
  std::ostringstream d;
  d << "h-ideals " << (ideals_ok ? "ok" : "WRONG") << ", closure{0} " << (closure_ok ? "ok" : "WRONG")
    << "; " << subsets << " subsets: not extensive " << not_extensive << " (with 0: "
    << not_extensive_with_zero << ", e.g. " << ext_example << "), not idempotent "
    << not_idempotent << " (e.g. " << idem_example << "), not monotone " << not_monotone;
  return {ideals_ok && closure_ok && not_extensive == 0 && not_idempotent == 0 && not_monotone == 0,
          d.str()};
}

Outcome closure_lemmas() {
  std::size_t pairs = 0, mismatches = 0, mismatches_with_zero = 0, bound_pairs = 0, bound_fail = 0;
  std::string example;
  for (const auto* name : {"example21", "zmod(4)", "zmod(6)", "chain(3)"}) {
    const auto c = builtin(name);
    const auto subs = all_subsets(c);
    std::vector<CrispSubset> cls;
    for (const auto& a : subs) cls.push_back(h_closure(a));
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = 0; j < subs.size(); ++j) {
        ++pairs;
        if (h_closure(ideal_product(subs[i], subs[j])) == h_closure(ideal_product(cls[i], cls[j]))) {
          continue;
        }
        ++mismatches;
        if (subs[i].contains(0) && subs[j].contains(0)) ++mismatches_with_zero;
        if (example.empty()) example = std::string(name) + " A=" + set_text(subs[i]) + " B=" + set_text(subs[j]);
      }
    for (const auto& a : enumerate_ideals(c, IdealKind::h, Side::right))
      for (const auto& b : enumerate_ideals(c, IdealKind::h, Side::left)) {
        ++bound_pairs;
        if (!h_closure(ideal_product(a, b)).subset_of(a.intersect(b))) ++bound_fail;
      }
  }
  std::ostringstream d;
  d << "closure(AB) = closure(closure(A) closure(B)): " << mismatches << " of " << pairs
    << " subset pairs fail (e.g. " << example << "), " << mismatches_with_zero
    << " with 0 in both; closure(AB) within A cap B: " << bound_fail << " of " << bound_pairs
    << " h-ideal pairs fail";
  return {mismatches == 0 && bound_fail == 0, d.str()};
}

Outcome hemiregular_equivalence() {
  bool ok = true;
  std::ostringstream d;
  for (const auto* name : {"chain(3)", "zmod(6)", "zmod(4)", "example21"}) {
    const auto c = builtin(name);
    const bool regular = is_h_hemiregular(c).verdict.is_holds();
    const bool expect_regular = std::string(name) == "chain(3)" || std::string(name) == "zmod(6)";
    const auto crisp = run_suite("hemiregular-ideals", c);
    const auto fuzzy = run_suite("hemiregular-fuzzy", c);
    bool line = regular == expect_regular && regular == oracle::h_hemiregular(c) &&
                crisp.status() == "Holds" && fuzzy.status() == "Holds";
    if (!regular) line = line && !crisp.witnesses.empty() && !fuzzy.witnesses.empty();
    ok = ok && line;
    d << name << (regular ? " regular" : " not regular") << (line ? "" : " MISMATCH");
    if (!regular && !crisp.witnesses.empty()) d << " [" << crisp.witnesses.front().description << "]";
    d << "; ";
  }
  d << "fuzzy pairs over {0,1/2,1}";
  return {ok, d.str()};
}

Outcome prime_cross_validation() {
  const std::vector<Grade> fine{Grade::zero(), Grade::from(1, 3), Grade::from(2, 3), Grade::one()};
  std::size_t compared = 0, disagreements = 0, prime = 0;
  for (const auto* name : {"zmod(4)", "zmod(6)", "example21"}) {
    const auto c = builtin(name);
    for (Side side : {Side::left, Side::right}) {
      DefinitionalPrimeOracle oracle(c, fine, side);
      for (const auto& zeta : oracle.family()) {
        if (zeta.is_constant()) continue;
        ++compared;
        const bool by_definition = oracle(zeta).passed();
        if (by_definition) ++prime;
        if (by_definition != is_prime_fuzzy_h_ideal(zeta, side).verdict.passed()) ++disagreements;
      }
    }
  }
  std::ostringstream d;
  d << compared << " non-constant fuzzy h-ideals (both sides), " << prime << " prime, "
    << disagreements << " disagreements";
  return {disagreements == 0 && compared > 0, d.str()};
}

Outcome n0_examples() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& r : run_counterexamples()) {
    ok = ok && r.status() == "HoldsUpToBound(60)";
    d << r.id << " " << r.status() << "; ";
  }
  const BoundedN0Carrier n0(60);
  const auto zeta = N0FuzzySet::parse_rule("zeta", "even -> 0.5, odd -> 0.2");
  const auto mu = N0FuzzySet::parse_rule("mu", "even -> 0.7, odd -> 0");
  const auto nu = N0FuzzySet::parse_rule("nu", "mult3 -> 0.3, any -> 0");
  const auto prod = h_product(n0, mu, nu);
  ok = ok && mu(2) == Grade::from(7, 10) && zeta(2) == Grade::from(1, 2) &&
       nu(3) == Grade::from(3, 10) && zeta(3) == Grade::from(1, 5) &&
       prod(6) == Grade::from(3, 10) && contained_in(prod, zeta).is_bounded();
  const auto three = N0FuzzySet::parse_rule("mu", "mult4 -> 1, even -> 0.5, any -> 0");
  const auto r = is_prime_fuzzy_h_ideal(n0, three, Side::left);
  ok = ok && is_normal(n0, three) && r.verdict.is_fails() && r.image_size == 3;
  d << "mu(2)=" << mu(2).to_string() << " zeta(2)=" << zeta(2).to_string() << " nu(3)="
    << nu(3).to_string() << " zeta(3)=" << zeta(3).to_string() << " h-product(6)="
    << prod(6).to_string() << "; bounded verdicts hold for quantifiers up to 60";
  return {ok, d.str()};
}

Outcome normal_and_maximal() {
  bool ok = true;
  std::ostringstream d;
  std::size_t runs = 0;
  for (const auto& name : default_builtin_names()) {
    const auto c = builtin(name);
    for (const auto* id : {"normalization", "monotone-rescaling", "maximal-two-valued",
                           "maximal-structure", "maximal-completely-normal"}) {
      const auto r = run_suite(id, c);
      ++runs;
      if (r.failed() || r.skipped) {
        ok = false;
        d << id << " on " << name << ": " << r.status() << "; ";
      }
    }
  }
  d << runs << " suite runs, 1000 samples each for the random suites; non-constant maximal "
    << "elements of N(S) are vacuous (the constant 1 is the top)";
  return {ok, d.str()};
}

Outcome model_finder() {
  std::ostringstream d;
  bool ok = true;
  std::ifstream in(std::string(HEMI_GOLDEN_DIR) + "/hemiring_counts.txt");
  std::map<std::size_t, std::size_t> golden;
  for (std::string word; in >> word;) {
    std::size_t order = 0, count = 0;
    if (word == "order" && in >> order >> count) golden[order] = count;
  }
  for (std::size_t order = 2; order <= 3; ++order) {
    const auto pruned = enumerate_hemirings(order).size();
    const auto naive = oracle::naive_classes(order).size();
    ok = ok && pruned == naive && golden.count(order) && golden[order] == naive;
    d << "order " << order << ": pruned " << pruned << ", naive " << naive << "; ";
  }
  SearchQuery q;
  q.order = 4;
  q.filters = {SearchFilter::has_k_ideal_not_h_ideal};
  q.limit = 1;
  const auto hits = find(q);
  ok = ok && !hits.empty();
  if (!hits.empty()) d << hits.front().carrier.name() << " " << hits.front().witnesses.front();
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::string expect;
  app.add_option("--expect-fail", expect, "comma-separated criteria expected to fail");
  CLI11_PARSE(app, argc, argv);
  std::set<int> expected;
  for (std::stringstream ss(expect); ss.good();) {
    std::string item;
    std::getline(ss, item, ',');
    if (!item.empty()) expected.insert(std::stoi(item));
  }

  const std::vector<Criterion> criteria{
      {1, "axioms and single-cell mutations", 1, axioms_and_mutations},
      {2, "crisp h-ideals and closure laws", 10, crisp_theory},
      {3, "closure of products", 60, closure_lemmas},
      {4, "hemiregularity both directions", 300, hemiregular_equivalence},
      {5, "prime characterization vs definition", 300, prime_cross_validation},
      {6, "N0 examples", 0, n0_examples},
      {7, "normal and maximal fuzzy h-ideals", 0, normal_and_maximal},
      {8, "model finder", 600, model_finder},
  };
  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    const bool pass = o.pass && in_time;
    if (!pass) failed.insert(c.id);
    char timing[64];
    if (c.limit_s > 0) {
      std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, c.limit_s);
    } else {
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    }
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << ", "
              << timing << "): " << o.detail << std::endl;
  }
  std::cout << "summary: " << criteria.size() - failed.size() << " of " << criteria.size()
            << " criteria pass" << std::endl;
  if (failed != expected) {
    std::cout << "unexpected outcome: failing set differs from the expected set" << std::endl;
    return 1;
  }
  return 0;
}
