#include "hemi/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <random>

#include <json.hpp>

#include "hemi/fuzzy_structure.hpp"

namespace hemi {

namespace {

std::string join_grades(const std::vector<Grade>& grades) {
  std::string out;
  for (const auto& g : grades) {
    if (!out.empty()) out += ',';
    out += g.to_string();
  }
  return out;
}

std::string braces(const CrispSubset& s) { return "{" + s.to_string() + "}"; }

// Records the first failure; later calls are ignored so the report keeps the
// earliest counterexample.
struct Check {
  SuiteReport& report;

  bool failed() const { return report.verdict.is_fails(); }

  void fail(Witness w) {
    if (failed()) return;
    report.witnesses.insert(report.witnesses.begin(), w);
    report.verdict = Verdict::fails(std::move(w));
  }
  void fail(std::string description, std::vector<Element> elements = {}) {
    fail(Witness{std::move(description), std::move(elements)});
  }
  void exhibit(std::string description, std::vector<Element> elements = {}) {
    report.witnesses.push_back({std::move(description), std::move(elements)});
  }
  void note(std::string text) { report.notes.push_back(std::move(text)); }
};

void require_order(const FiniteHemiring& c, std::size_t cap, std::string_view what) {
  if (c.order() > cap) {
    throw CapExceeded(std::string(what) + " needs order <= " + std::to_string(cap) + ", got " +
                      std::to_string(c.order()));
  }
}

std::vector<CrispSubset> nonempty_subsets(const FiniteHemiring& c, std::size_t cap) {
  require_order(c, cap, "subset scan");
  std::vector<CrispSubset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c.order()); ++mask) {
    out.push_back(CrispSubset::from_mask(c, mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Random fuzzy h-ideals: a random chain of proper h-ideals I1 < ... < Ik < S
// graded g1 > ... > gk > g_{k+1}. Every level set is one of the chain members.

class Sampler {
 public:
  Sampler(const FiniteHemiring& c, Side side, std::uint64_t seed, std::size_t cap)
      : carrier_(c), rng_(seed) {
    for (auto& a : enumerate_ideals(c, IdealKind::h, side, cap))
      if (!a.is_whole()) proper_.push_back(std::move(a));
  }

  Grade grade() {
    std::uniform_int_distribution<int> num(0, 12);
    return Grade::from(num(rng_), 12);
  }

  std::vector<Grade> distinct_grades(std::size_t k) {
    std::vector<Grade> out;
    while (out.size() < k) {
      auto g = grade();
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  FuzzySet fuzzy_h_ideal() {
    std::vector<CrispSubset> chain;
    std::bernoulli_distribution extend(0.5);
    if (!proper_.empty() && extend(rng_)) {
      chain.push_back(pick(proper_));
      while (extend(rng_)) {
        std::vector<CrispSubset> above;
        for (const auto& a : proper_)
          if (chain.back().subset_of(a) && !(a == chain.back())) above.push_back(a);
        if (above.empty()) break;
        chain.push_back(pick(above));
      }
    }
    const auto grades = distinct_grades(chain.size() + 1);
    std::vector<Grade> mu(carrier_.order(), grades.back());
    for (Element x : elements(carrier_))
      for (std::size_t i = 0; i < chain.size(); ++i)
        if (chain[i].contains(x)) {
          mu[x] = grades[i];
          break;
        }
    return FuzzySet(carrier_, std::move(mu));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  const CrispSubset& pick(const std::vector<CrispSubset>& from) {
    std::uniform_int_distribution<std::size_t> d(0, from.size() - 1);
    return from[d(rng_)];
  }

  FiniteHemiring carrier_;
  std::mt19937_64 rng_;
  std::vector<CrispSubset> proper_;
};

// ---------------------------------------------------------------------------
// Crisp suites

void suite_axioms(const FiniteHemiring& c, const SuiteParams&, Check& check) {
  auto report = check_axioms(c.add_table(), c.mul_table());
  for (const auto& v : report.violations) check.fail(v.axiom, v.witness);
}

void suite_closure_properties(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  const auto subsets = nonempty_subsets(c, p.pair_scan_cap);
  std::vector<CrispSubset> closures;
  std::size_t not_extensive = 0, not_extensive_with_zero = 0, not_idempotent = 0;
  for (const auto& a : subsets) {
    auto cl = h_closure(a);
    if (!a.subset_of(cl)) {
      ++not_extensive;
      if (a.contains(0)) ++not_extensive_with_zero;
      check.fail("not extensive at " + braces(a) + ", closure " + braces(cl));
    }
    if (!(h_closure(cl) == cl)) {
      ++not_idempotent;
      check.fail("not idempotent at " + braces(a) + ": " + braces(cl) + " then " +
                 braces(h_closure(cl)));
    }
    closures.push_back(std::move(cl));
  }
  // The closure always contains 0, and for 0 in A it contains A (a1 = 0,
  // a2 = x, z = 0). Without 0 it can miss A: in a ring it is A - A.
  check.note("subsets not contained in their closure: " + std::to_string(not_extensive) +
             ", of which containing 0: " + std::to_string(not_extensive_with_zero) +
             "; subsets whose closure is not closed: " + std::to_string(not_idempotent));
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j)
      if (subsets[i].subset_of(subsets[j]) && !closures[i].subset_of(closures[j])) {
        check.fail("not monotone at " + braces(subsets[i]) + " within " + braces(subsets[j]));
      }
  // For left ideals the closure is the least left h-ideal above them.
  const auto h_ideals = enumerate_ideals(c, IdealKind::h, Side::left, p.subset_cap);
  for (const auto& a : enumerate_ideals(c, IdealKind::plain, Side::left, p.subset_cap)) {
    auto cl = h_closure(a);
    if (!is_h_ideal(cl, Side::left)) check.fail("closure of ideal " + braces(a) + " not an h-ideal");
    for (const auto& h : h_ideals)
      if (a.subset_of(h) && !cl.subset_of(h)) {
        check.fail("closure of " + braces(a) + " not below h-ideal " + braces(h));
      }
  }
  check.report.params = "subsets=" + std::to_string(subsets.size());
}

void suite_h_implies_k(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  std::size_t k_only = 0;
  for (Side side : {Side::left, Side::right}) {
    const auto ks = enumerate_ideals(c, IdealKind::k, side, p.subset_cap);
    for (const auto& h : enumerate_ideals(c, IdealKind::h, side, p.subset_cap))
      if (std::find(ks.begin(), ks.end(), h) == ks.end()) {
        check.fail(std::string(to_string(side)) + " h-ideal " + braces(h) + " is not a k-ideal");
      }
    for (const auto& k : ks)
      if (auto v = is_h_ideal(k, side); !v) {
        ++k_only;
        check.exhibit(std::string(to_string(side)) + " k-ideal " + braces(k) +
                          " is not an h-ideal: " + v.witness()->description,
                      v.witness()->elements);
      }
    for (const auto& mu : enumerate_fuzzy_h_ideals(c, p.coarse_grades, side, p.fuzzy_cap))
      if (!is_fuzzy_k_ideal(mu, side)) {
        check.fail("fuzzy h-ideal (" + mu.to_string() + ") is not a fuzzy k-ideal");
      }
  }
  check.note("k-ideals that are not h-ideals: " + std::to_string(k_only));
}

void suite_transfer(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  const auto grades = normalize_grade_set(p.coarse_grades);
  double total = 1;
  for (std::size_t i = 0; i < c.order(); ++i) total *= static_cast<double>(grades.size());
  std::size_t checked = 0;
  auto compare = [&](const FuzzySet& mu, Side side) {
    ++checked;
    const bool direct = static_cast<bool>(is_fuzzy_h_ideal(mu, side));
    if (direct != static_cast<bool>(transfer_check(mu, side))) {
      check.fail("level-set route disagrees on (" + mu.to_string() + ")");
    }
    if (is_fuzzy_ideal(mu, side)) {
      for (Element x : elements(c))
        if (mu(0) < mu(x)) check.fail("fuzzy ideal with mu(0) < mu(x)", {x});
    }
  };
  for (Side side : {Side::left, Side::right}) {
    if (total <= 20000) {
      std::vector<std::size_t> idx(c.order(), 0);
      while (true) {
        std::vector<Grade> g;
        for (auto i : idx) g.push_back(grades[i]);
        compare(FuzzySet(c, g), side);
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == grades.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
      }
    }
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<int> num(0, 6);
    for (std::size_t s = 0; s < p.samples; ++s) {
      std::vector<Grade> g;
      for (std::size_t i = 0; i < c.order(); ++i) g.push_back(Grade::from(num(rng), 6));
      compare(FuzzySet(c, g), side);
    }
  }
  check.report.params = "grades=" + join_grades(grades) + " seed=" + std::to_string(p.seed) +
                        " checked=" + std::to_string(checked);
}

void suite_two_valued(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  const auto grades = normalize_grade_set(p.coarse_grades);
  for (const auto& a : nonempty_subsets(c, p.subset_cap))
    for (Side side : {Side::left, Side::right}) {
      const bool crisp = static_cast<bool>(is_h_ideal(a, side));
      for (std::size_t i = 0; i < grades.size(); ++i)
        for (std::size_t j = i + 1; j < grades.size(); ++j) {
          auto mu = two_valued(a, grades[j], grades[i]);
          if (crisp != static_cast<bool>(is_fuzzy_h_ideal(mu, side))) {
            check.fail("two-valued set on " + braces(a) + " disagrees with crisp verdict");
          }
        }
    }
}

void suite_fuzzy_intersection(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  const auto left = enumerate_fuzzy_h_ideals(c, p.coarse_grades, Side::left, p.fuzzy_cap);
  const auto right = enumerate_fuzzy_h_ideals(c, p.coarse_grades, Side::right, p.fuzzy_cap);
  for (const auto& mu : left)
    for (const auto& nu : left)
      if (!is_fuzzy_h_ideal(intersect(mu, nu), Side::left)) {
        check.fail("intersection of (" + mu.to_string() + ") and (" + nu.to_string() +
                   ") is not a fuzzy left h-ideal");
      }
  HProductEngine engine(c);
  for (const auto& mu : right)
    for (const auto& nu : left) {
      auto prod = p.hproduct_form == HProductForm::single ? engine(mu, nu)
                                                          : h_product(mu, nu, p.hproduct_form);
      if (!prod.subset_of(intersect(mu, nu))) {
        check.fail("h-product of (" + mu.to_string() + ") and (" + nu.to_string() +
                   ") exceeds their intersection");
      }
    }
  check.report.params = "grades=" + join_grades(p.coarse_grades) +
                        " left=" + std::to_string(left.size()) +
                        " right=" + std::to_string(right.size());
}

void suite_closure_product(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  const auto subsets = nonempty_subsets(c, p.pair_scan_cap);
  std::vector<CrispSubset> closures;
  for (const auto& a : subsets) closures.push_back(h_closure(a));
  std::size_t pairs = 0, mismatches = 0, mismatches_with_zero = 0;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      ++pairs;
      auto lhs = h_closure(ideal_product(subsets[i], subsets[j]));
      auto rhs = h_closure(ideal_product(closures[i], closures[j]));
      if (!(lhs == rhs)) {
        ++mismatches;
        if (subsets[i].contains(0) && subsets[j].contains(0)) ++mismatches_with_zero;
        check.fail("A=" + braces(subsets[i]) + " B=" + braces(subsets[j]) + ": " + braces(lhs) +
                   " vs " + braces(rhs));
      }
    }
  check.report.params = "pairs=" + std::to_string(pairs);
  check.note("mismatching pairs: " + std::to_string(mismatches) +
             ", of which both sets contain 0: " + std::to_string(mismatches_with_zero));
}

void suite_closure_product_bound(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  const auto right = enumerate_ideals(c, IdealKind::h, Side::right, p.subset_cap);
  const auto left = enumerate_ideals(c, IdealKind::h, Side::left, p.subset_cap);
  for (const auto& a : right)
    for (const auto& b : left)
      if (!h_closure(ideal_product(a, b)).subset_of(a.intersect(b))) {
        check.fail("A=" + braces(a) + " B=" + braces(b) + ": closure of AB exceeds A cap B");
      }
  check.report.params =
      "pairs=" + std::to_string(right.size() * left.size());
}

void suite_hemiregular_ideals(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  const auto regular = is_h_hemiregular(c);
  const auto right = enumerate_ideals(c, IdealKind::h, Side::right, p.subset_cap);
  const auto left = enumerate_ideals(c, IdealKind::h, Side::left, p.subset_cap);
  std::optional<std::pair<CrispSubset, CrispSubset>> mismatch;
  for (const auto& a : right) {
    for (const auto& b : left)
      if (!(h_closure(ideal_product(a, b)) == a.intersect(b))) {
        mismatch.emplace(a, b);
        break;
      }
    if (mismatch) break;
  }
  if (regular.verdict.is_holds()) {
    check.note("carrier is h-hemiregular");
    if (mismatch) {
      check.fail("A=" + braces(mismatch->first) + " B=" + braces(mismatch->second) +
                 ": closure of AB differs from A cap B");
    }
  } else {
    check.note("carrier is not h-hemiregular: " + regular.verdict.witness()->to_string());
    if (!mismatch) {
      check.fail("not h-hemiregular, yet closure(AB) = A cap B for every pair",
                 regular.verdict.witness()->elements);
    } else {
      check.exhibit("A=" + braces(mismatch->first) + " B=" + braces(mismatch->second) +
                    " closure(AB)=" + braces(h_closure(ideal_product(mismatch->first,
                                                                     mismatch->second))) +
                    " A cap B=" + braces(mismatch->first.intersect(mismatch->second)));
    }
  }
}

void suite_hemiregular_fuzzy(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  const bool regular = is_h_hemiregular(c).verdict.is_holds();
  const auto right = enumerate_fuzzy_h_ideals(c, p.coarse_grades, Side::right, p.fuzzy_cap);
  const auto left = enumerate_fuzzy_h_ideals(c, p.coarse_grades, Side::left, p.fuzzy_cap);
  HProductEngine engine(c);
  std::optional<std::pair<std::size_t, std::size_t>> mismatch;
  FuzzySet prod = FuzzySet::constant(c, Grade::zero());
  for (std::size_t i = 0; i < right.size() && !mismatch; ++i)
    for (std::size_t j = 0; j < left.size(); ++j) {
      prod = p.hproduct_form == HProductForm::single
                 ? engine(right[i], left[j])
                 : h_product(right[i], left[j], p.hproduct_form);
      if (!(prod == intersect(right[i], left[j]))) {
        mismatch.emplace(i, j);
        break;
      }
    }
  check.report.params = "grades=" + join_grades(p.coarse_grades) +
                        " pairs=" + std::to_string(right.size() * left.size());
  if (regular) {
    check.note("carrier is h-hemiregular");
    if (mismatch) {
      check.fail("mu=(" + right[mismatch->first].to_string() + ") nu=(" +
                 left[mismatch->second].to_string() + "): h-product (" + prod.to_string() +
                 ") differs from intersection");
    }
  } else {
    check.note("carrier is not h-hemiregular");
    if (!mismatch) {
      check.fail("not h-hemiregular, yet the h-product equals the intersection for every pair");
    } else {
      check.exhibit("mu=(" + right[mismatch->first].to_string() + ") nu=(" +
                    left[mismatch->second].to_string() + ") h-product=(" + prod.to_string() +
                    ") intersection=(" +
                    intersect(right[mismatch->first], left[mismatch->second]).to_string() + ")");
    }
  }
}

void suite_prime_ideal_forms(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  std::size_t primes = 0;
  for (Side side : {Side::left, Side::right})
    for (const auto& a : enumerate_ideals(c, IdealKind::h, side, p.subset_cap)) {
      const auto sums = is_prime_h_ideal(a, side, ProductForm::sums, p.subset_cap);
      const auto single = is_prime_h_ideal(a, side, ProductForm::single, p.subset_cap);
      const auto elementwise = is_prime_elementwise(a, side);
      if (sums.passed()) ++primes;
      if (sums.passed() != single.passed()) {
        check.fail(std::string(to_string(side)) + " " + braces(a) + ": sum-form " +
                   sums.to_string() + " vs single-product " + single.to_string());
      }
      if (sums.passed() != elementwise.passed()) {
        check.fail(std::string(to_string(side)) + " " + braces(a) + ": ideal-wise " +
                   sums.to_string() + " vs element-wise " + elementwise.to_string());
      }
    }
  check.note("prime h-ideals (both sides): " + std::to_string(primes));
}

// ---------------------------------------------------------------------------
// Prime fuzzy h-ideals

void suite_prime_characteristic(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  for (Side side : {Side::left, Side::right}) {
    DefinitionalPrimeOracle oracle(c, p.coarse_grades, side, p.fuzzy_cap, p.hproduct_form);
    for (const auto& a : enumerate_ideals(c, IdealKind::h, side, p.subset_cap)) {
      const bool crisp = is_prime_h_ideal(a, side, ProductForm::sums, p.subset_cap).passed();
      if (a.is_whole()) {
        // The characteristic function of S is constant, hence never prime.
        if (crisp) check.fail("whole carrier reported prime");
        continue;
      }
      const auto chi = characteristic(a);
      const bool fuzzy = is_prime_fuzzy_h_ideal(chi, side, p.subset_cap).verdict.passed();
      const bool definitional = oracle(chi).passed();
      if (fuzzy != crisp || definitional != crisp) {
        check.fail(std::string(to_string(side)) + " " + braces(a) + ": crisp " +
                   (crisp ? "prime" : "not prime") + ", characterization " +
                   (fuzzy ? "prime" : "not prime") + ", definition " +
                   (definitional ? "prime" : "not prime"));
      }
    }
  }
}

void suite_prime_characterization(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  std::size_t compared = 0, prime = 0;
  for (Side side : {Side::left, Side::right}) {
    DefinitionalPrimeOracle oracle(c, p.fine_grades, side, p.fuzzy_cap, p.hproduct_form);
    for (const auto& zeta : oracle.family()) {
      if (zeta.is_constant()) continue;
      ++compared;
      const auto report = is_prime_fuzzy_h_ideal(zeta, side, p.subset_cap);
      const auto definitional = oracle(zeta);
      if (report.verdict.passed()) ++prime;
      if (report.verdict.passed() != definitional.passed()) {
        check.fail(std::string(to_string(side)) + " zeta=(" + zeta.to_string() +
                   "): characterization " + report.verdict.to_string() + ", definition " +
                   definitional.to_string());
      }
    }
  }
  check.report.params = "grades=" + join_grades(p.fine_grades) +
                        " compared=" + std::to_string(compared);
  check.note("prime: " + std::to_string(prime));
}

bool is_commutative_ring_with_one(const FiniteHemiring& c) {
  for (Element x : elements(c)) {
    bool inverse = false;
    for (Element y : elements(c)) inverse = inverse || c.add(x, y) == 0;
    if (!inverse) return false;
    for (Element y : elements(c))
      if (c.mul(x, y) != c.mul(y, x)) return false;
  }
  for (Element e : elements(c)) {
    bool unit = true;
    for (Element x : elements(c)) unit = unit && c.mul(e, x) == x;
    if (unit) return true;
  }
  return false;
}

void suite_ring_primality(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  if (!is_commutative_ring_with_one(c)) {
    throw CapExceeded("applies to commutative rings with identity only");
  }
  // Ring ideals straight from the ring axioms: additive subgroups (closure
  // under + suffices in a finite group) absorbing multiplication.
  auto ring_ideal = [&](const CrispSubset& a) {
    for (Element x : a.members())
      for (Element y : elements(c)) {
        if (a.contains(y) && !a.contains(c.add(x, y))) return false;
        if (!a.contains(c.mul(y, x))) return false;
      }
    return a.contains(0);
  };
  auto ring_prime = [&](const CrispSubset& a) {
    if (a.is_whole()) return false;
    for (Element x : elements(c))
      for (Element y : elements(c))
        if (a.contains(c.mul(x, y)) && !a.contains(x) && !a.contains(y)) return false;
    return true;
  };
  const auto h_ideals = enumerate_ideals(c, IdealKind::h, Side::left, p.subset_cap);
  for (const auto& a : nonempty_subsets(c, p.subset_cap)) {
    const bool in_h = std::find(h_ideals.begin(), h_ideals.end(), a) != h_ideals.end();
    if (in_h != ring_ideal(a)) check.fail(braces(a) + ": h-ideal and ring ideal disagree");
  }
  std::size_t compared = 0;
  for (const auto& zeta : enumerate_fuzzy_h_ideals(c, p.fine_grades, Side::left, p.fuzzy_cap)) {
    if (zeta.is_constant()) continue;
    ++compared;
    const bool classical =
        ring_prime(zeta_zero(zeta)) && zeta.image().size() == 2 && zeta(0).is_one();
    if (classical != is_prime_fuzzy_h_ideal(zeta, Side::left, p.subset_cap).verdict.passed()) {
      check.fail("zeta=(" + zeta.to_string() + "): ring-ideal route disagrees");
    }
  }
  check.report.params = "grades=" + join_grades(p.fine_grades) +
                        " compared=" + std::to_string(compared);
}

void suite_prime_normal(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  for (Side side : {Side::left, Side::right})
    for (const auto& zeta : enumerate_fuzzy_h_ideals(c, p.fine_grades, side, p.fuzzy_cap)) {
      if (zeta.is_constant()) continue;
      if (is_prime_fuzzy_h_ideal(zeta, side, p.subset_cap).verdict.passed() &&
          !is_normal(zeta, side)) {
        check.fail("prime but not normal: (" + zeta.to_string() + ")");
      }
    }
}

// ---------------------------------------------------------------------------
// Normal and maximal fuzzy h-ideals

void check_normalization(const FuzzySet& mu, Check& check) {
  const auto plus = normalize_plus(mu);
  const std::string at = "(" + mu.to_string() + ")";
  if (!mu.subset_of(plus)) check.fail("mu not within mu+ for " + at);
  if (!plus(0).is_one() || !is_normal(plus)) check.fail("mu+ not normal for " + at);
  if (!is_fuzzy_h_ideal(plus, Side::left)) check.fail("mu+ not a fuzzy h-ideal for " + at);
  if (!(normalize_plus(plus) == plus)) check.fail("(mu+)+ differs from mu+ for " + at);
  if (mu(0).is_one() && !(plus == mu)) check.fail("normal mu changed by normalization: " + at);
  for (Element x : elements(mu.carrier()))
    if (plus(x).is_zero() && !mu(x).is_zero()) check.fail("mu+(x)=0 but mu(x)>0 for " + at, {x});
}

void suite_normalization(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  for (const auto& mu : enumerate_fuzzy_h_ideals(c, p.coarse_grades, Side::left, p.fuzzy_cap)) {
    check_normalization(mu, check);
  }
  Sampler sampler(c, Side::left, p.seed, p.subset_cap);
  for (std::size_t s = 0; s < p.samples; ++s) {
    auto mu = sampler.fuzzy_h_ideal();
    if (!is_fuzzy_h_ideal(mu, Side::left)) {
      check.fail("sampler produced a non-ideal (" + mu.to_string() + ")");
      continue;
    }
    check_normalization(mu, check);
  }
  check.report.params = "samples=" + std::to_string(p.samples) + " seed=" + std::to_string(p.seed);
}

void suite_monotone_rescaling(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  Sampler sampler(c, Side::left, p.seed, p.subset_cap);
  std::size_t normal_cases = 0, inflating_cases = 0;
  for (std::size_t s = 0; s < p.samples; ++s) {
    const auto mu = sampler.fuzzy_h_ideal();
    const auto image = mu.image();
    auto values = std::vector<Grade>();
    for (std::size_t i = 0; i < image.size(); ++i) values.push_back(sampler.grade());
    std::sort(values.begin(), values.end());
    // Three flavours: arbitrary, top grade sent to 1, and inflating.
    const int flavour = static_cast<int>(s % 3);
    if (flavour == 1) values.back() = Grade::one();
    if (flavour == 2)
      for (std::size_t i = 0; i < image.size(); ++i) values[i] = std::max(values[i], image[i]);
    std::vector<std::pair<Grade, Grade>> table;
    for (std::size_t i = 0; i < image.size(); ++i) table.emplace_back(image[i], values[i]);
    const GradeMap f(table);

    std::vector<Grade> mapped_grades;
    for (Element x : elements(c)) mapped_grades.push_back(f(mu(x)));
    const FuzzySet mapped(c, mapped_grades);
    const std::string at = "(" + mu.to_string() + ") -> (" + mapped.to_string() + ")";
    if (!is_fuzzy_h_ideal(mapped, Side::left)) check.fail("rescaled set not a fuzzy h-ideal: " + at);
    if (f(mu(0)).is_one()) {
      ++normal_cases;
      if (!mapped(0).is_one()) check.fail("rescaled set not normal: " + at);
    }
    bool inflating = true;
    for (const auto& t : image) inflating = inflating && f(t) >= t;
    if (inflating) {
      ++inflating_cases;
      if (!mu.subset_of(mapped)) check.fail("inflating map does not contain mu: " + at);
    }
    if (!(apply_monotone(mu, f) == mapped)) check.fail("apply_monotone differs: " + at);
  }
  check.report.params = "samples=" + std::to_string(p.samples) + " seed=" + std::to_string(p.seed);
  check.note("normalizing maps: " + std::to_string(normal_cases) +
             ", inflating maps: " + std::to_string(inflating_cases));
}

void suite_maximal_two_valued(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  const auto poset = poset_N(c, p.coarse_grades, Side::left, p.fuzzy_cap);
  std::size_t non_constant_maximal = 0;
  for (std::size_t i : poset.maximal()) {
    const auto& mu = poset.members[i];
    if (mu.is_constant()) continue;
    ++non_constant_maximal;
    for (Element x : elements(c))
      if (!mu(x).is_zero() && !mu(x).is_one()) {
        check.fail("non-constant maximal element (" + mu.to_string() + ") takes " +
                   mu(x).to_string(), {x});
      }
  }
  check.report.params = "grades=" + join_grades(p.coarse_grades) +
                        " poset=" + std::to_string(poset.members.size());
  check.note("non-constant maximal elements: " + std::to_string(non_constant_maximal) +
             (non_constant_maximal == 0 ? " (constant 1 is the greatest element; vacuous)" : ""));
  // Informational: maximality among the non-constant members only.
  std::vector<std::size_t> non_constant;
  for (std::size_t i = 0; i < poset.members.size(); ++i)
    if (!poset.members[i].is_constant()) non_constant.push_back(i);
  std::size_t interior = 0;
  for (std::size_t i : poset.maximal_within(non_constant))
    for (const auto& g : poset.members[i].grades())
      if (!g.is_zero() && !g.is_one()) {
        ++interior;
        break;
      }
  check.note("maximal among non-constant members with an interior grade: " +
             std::to_string(interior));
}

void suite_maximal_structure(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  const auto maximal = maximal_h_ideals(c, Side::left, p.subset_cap);
  for (const auto& m : maximal)
    if (!is_maximal_fuzzy_h_ideal(characteristic(m), Side::left, p.subset_cap)) {
      check.fail("characteristic function of maximal h-ideal " + braces(m) + " rejected");
    }
  std::size_t found = 0;
  for (const auto& mu : enumerate_fuzzy_h_ideals(c, p.coarse_grades, Side::left, p.fuzzy_cap)) {
    if (mu.is_constant() || !is_maximal_fuzzy_h_ideal(mu, Side::left, p.subset_cap)) continue;
    ++found;
    const auto level = zeta_zero(mu);
    const std::string at = "(" + mu.to_string() + ")";
    if (!mu(0).is_one()) check.fail("maximal but not normal: " + at);
    for (const auto& g : mu.grades())
      if (!g.is_zero() && !g.is_one()) check.fail("maximal but takes " + g.to_string() + ": " + at);
    if (!(characteristic(level) == mu)) check.fail("characteristic function of mu^0 differs: " + at);
    if (std::find(maximal.begin(), maximal.end(), level) == maximal.end()) {
      check.fail("mu^0 not a maximal h-ideal: " + at);
    }
  }
  if (found != maximal.size()) {
    check.fail("found " + std::to_string(found) + " maximal fuzzy h-ideals for " +
               std::to_string(maximal.size()) + " maximal h-ideals");
  }
  check.note("maximal h-ideals: " + std::to_string(maximal.size()));
}

void suite_maximal_completely_normal_poset(const FiniteHemiring& c, const SuiteParams& p,
                                           Check& check) {
  const auto poset = poset_N(c, p.coarse_grades, Side::left, p.fuzzy_cap);
  const auto complete = poset.completely_normal();
  const auto complete_max = poset.maximal_within(complete);
  auto is_complete_max = [&](std::size_t i) {
    return std::find(complete_max.begin(), complete_max.end(), i) != complete_max.end();
  };
  for (std::size_t i : poset.maximal()) {
    if (poset.members[i].is_constant()) continue;
    if (!is_complete_max(i)) {
      check.fail("(" + poset.members[i].to_string() + ") maximal in N(S) but not in C(S)");
    }
  }
  // Through the characterization: each maximal fuzzy h-ideal is maximal in C(S).
  for (const auto& m : maximal_h_ideals(c, Side::left, p.subset_cap)) {
    const auto chi = characteristic(m);
    auto it = std::find(poset.members.begin(), poset.members.end(), chi);
    if (it == poset.members.end()) {
      check.fail("characteristic function of " + braces(m) + " missing from the poset");
      continue;
    }
    if (!is_complete_max(static_cast<std::size_t>(it - poset.members.begin()))) {
      check.fail("characteristic function of " + braces(m) + " not maximal in C(S)");
    }
  }
  check.report.params = "grades=" + join_grades(p.coarse_grades) +
                        " N=" + std::to_string(poset.members.size()) +
                        " C=" + std::to_string(complete.size());
}

void suite_maximal_completely_normal(const FiniteHemiring& c, const SuiteParams& p, Check& check) {
  for (const auto& mu : enumerate_fuzzy_h_ideals(c, p.coarse_grades, Side::left, p.fuzzy_cap)) {
    if (mu.is_constant() || !is_maximal_fuzzy_h_ideal(mu, Side::left, p.subset_cap)) continue;
    if (!is_completely_normal(mu)) check.fail("maximal but not completely normal: (" + mu.to_string() + ")");
  }
}

using SuiteFn = void (*)(const FiniteHemiring&, const SuiteParams&, Check&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"axioms", suite_axioms},
      {"closure-properties", suite_closure_properties},
      {"h-implies-k", suite_h_implies_k},
      {"transfer-principle", suite_transfer},
      {"two-valued-sets", suite_two_valued},
      {"fuzzy-intersection", suite_fuzzy_intersection},
      {"closure-product", suite_closure_product},
      {"closure-product-bound", suite_closure_product_bound},
      {"hemiregular-ideals", suite_hemiregular_ideals},
      {"hemiregular-fuzzy", suite_hemiregular_fuzzy},
      {"prime-ideal-forms", suite_prime_ideal_forms},
      {"prime-characteristic", suite_prime_characteristic},
      {"prime-characterization", suite_prime_characterization},
      {"ring-primality", suite_ring_primality},
      {"prime-normal", suite_prime_normal},
      {"normalization", suite_normalization},
      {"monotone-rescaling", suite_monotone_rescaling},
      {"maximal-two-valued", suite_maximal_two_valued},
      {"maximal-structure", suite_maximal_structure},
      {"maximal-completely-normal-poset", suite_maximal_completely_normal_poset},
      {"maximal-completely-normal", suite_maximal_completely_normal},
  };
  return suites;
}

bool product_sensitive(std::string_view id) {
  return id == "fuzzy-intersection" || id == "hemiregular-fuzzy" ||
         id == "prime-characteristic" || id == "prime-characterization";
}

template <class F>
SuiteReport timed(std::string id, std::string carrier, F&& body) {
  SuiteReport report;
  report.id = std::move(id);
  report.carrier = std::move(carrier);
  const auto start = std::chrono::steady_clock::now();
  try {
    Check check{report};
    body(check);
  } catch (const CapExceeded& e) {
    report.skipped = true;
    report.skip_reason = e.what();
    report.verdict = Verdict::holds();
    report.witnesses.clear();
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// N0 examples

void n0_evens_prime(const SuiteParams& p, Check& check) {
  const BoundedN0Carrier c(p.bound);
  const auto mu = N0FuzzySet::parse_rule("mu", "even -> 1, odd -> 0.2");
  if (auto v = is_fuzzy_h_ideal(c, mu, Side::left); !v) check.fail("mu not a fuzzy h-ideal: " + v.to_string());
  const auto report = is_prime_fuzzy_h_ideal(c, mu, Side::left);
  if (!report.verdict) check.fail("not prime: " + report.verdict.to_string());
  if (!report.zero_level_prime || !report.two_valued || !report.top_is_one) {
    check.fail("a primality condition failed");
  }
  const auto evens = level_set(mu, Grade::one()).members_up_to(p.bound);
  for (Element n = 0; n <= p.bound; ++n) {
    const bool listed = std::binary_search(evens.begin(), evens.end(), n);
    if (listed != (n % 2 == 0)) check.fail("level set at 1 is not the even numbers", {n});
  }
  check.note(report.render());
}

void n0_top_below_one(const SuiteParams& p, Check& check) {
  const BoundedN0Carrier c(p.bound);
  const auto zeta = N0FuzzySet::parse_rule("zeta", "even -> 0.5, odd -> 0.2");
  const auto mu = N0FuzzySet::parse_rule("mu", "even -> 0.7, odd -> 0");
  const auto nu = N0FuzzySet::parse_rule("nu", "mult3 -> 0.3, any -> 0");
  for (const auto* s : {&zeta, &mu, &nu})
    if (auto v = is_fuzzy_h_ideal(c, *s, Side::left); !v) {
      check.fail(s->name() + " not a fuzzy h-ideal: " + v.to_string());
    }
  const auto prod = h_product(c, mu, nu);
  if (auto v = contained_in(prod, zeta); !v) check.fail("h-product not within zeta: " + v.to_string());
  for (Element n = 0; n <= p.bound; ++n) {
    const Grade expected = n % 6 == 0 ? Grade::from(3, 10) : Grade::zero();
    if (prod(n) != expected) check.fail("h-product grade " + prod(n).to_string(), {n});
  }
  if (!(mu(2) == Grade::from(7, 10) && zeta(2) == Grade::from(1, 2) && mu(2) > zeta(2))) {
    check.fail("mu(2) does not exceed zeta(2)", {2});
  }
  if (!(nu(3) == Grade::from(3, 10) && zeta(3) == Grade::from(1, 5) && nu(3) > zeta(3))) {
    check.fail("nu(3) does not exceed zeta(3)", {3});
  }
  check.exhibit("mu(2)=" + mu(2).to_string() + " > zeta(2)=" + zeta(2).to_string(), {2});
  check.exhibit("nu(3)=" + nu(3).to_string() + " > zeta(3)=" + zeta(3).to_string(), {3});
  const auto report = is_prime_fuzzy_h_ideal(c, zeta, Side::left);
  if (!report.zero_level_prime) check.fail("zero level set should be prime");
  if (!report.two_valued) check.fail("zeta should be two-valued");
  if (report.top_is_one) check.fail("zeta(0) should differ from 1");
  if (report.verdict.passed()) check.fail("zeta reported prime");
  check.note(report.render());
}

void n0_three_valued(const SuiteParams& p, Check& check) {
  const BoundedN0Carrier c(p.bound);
  const auto mu = N0FuzzySet::parse_rule("mu", "mult4 -> 1, even -> 0.5, any -> 0");
  if (!is_normal(c, mu, Side::left)) check.fail("mu should be normal");
  const auto report = is_prime_fuzzy_h_ideal(c, mu, Side::left);
  if (report.two_valued || report.image_size != 3) check.fail("mu should take three values");
  if (report.verdict.passed()) check.fail("mu reported prime");
  const auto image = mu.image_up_to(p.bound);
  if (image.empty() || !image.front().is_zero()) check.fail("mu should attain grade 0");
  check.note(report.render());
}

SuiteReport finish_bounded(SuiteReport r, std::uint64_t bound) {
  if (!r.skipped && !r.verdict.is_fails()) r.verdict = Verdict::holds_up_to_bound(bound);
  return r;
}

}  // namespace

std::string SuiteReport::status() const {
  if (skipped) return "Skipped";
  switch (verdict.kind()) {
    case Verdict::Kind::holds: return "Holds";
    case Verdict::Kind::fails: return "Fails";
    case Verdict::Kind::holds_up_to_bound:
      return "HoldsUpToBound(" + std::to_string(verdict.bound()) + ")";
  }
  return {};
}

std::string SuiteReport::text() const {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.1f ms", elapsed_ms);
  std::string out = "[" + status() + "] " + id + " on " + carrier;
  if (!params.empty()) out += " (" + params + ")";
  out += " " + std::string(ms) + "\n";
  if (skipped) out += "    reason: " + skip_reason + "\n";
  for (const auto& w : witnesses) out += "    witness: " + w.to_string() + "\n";
  for (const auto& n : notes) {
    std::string indented = n;
    for (std::size_t pos = 0; (pos = indented.find('\n', pos)) != std::string::npos; pos += 7) {
      if (pos + 1 == indented.size()) {
        indented.erase(pos);
        break;
      }
      indented.replace(pos, 1, "\n      ");
    }
    out += "    note: " + indented + "\n";
  }
  return out;
}

std::string SuiteReport::machine_line() const {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", elapsed_ms);
  std::string witness = witnesses.empty() ? "-" : witnesses.front().to_string();
  if (skipped) witness = skip_reason;
  std::replace(witness.begin(), witness.end(), '\t', ' ');
  std::replace(witness.begin(), witness.end(), '\n', ' ');
  return id + "\t" + carrier + "\t" + status() + "\t" + witness + "\t" + ms;
}

std::string SuiteReport::json() const {
  nlohmann::json j;
  j["id"] = id;
  j["carrier"] = carrier;
  j["params"] = params;
  j["verdict"] = status();
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : witnesses) {
    j["witnesses"].push_back({{"description", w.description}, {"elements", w.elements}});
  }
  j["notes"] = notes;
  if (skipped) j["skip_reason"] = skip_reason;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

SuiteReport run_suite(std::string_view id, const FiniteHemiring& carrier, const SuiteParams& params) {
  for (const auto& [name, fn] : registry()) {
    if (name != id) continue;
    return timed(name, carrier.name(), [&, fn = fn](Check& check) { fn(carrier, params, check); });
  }
  throw PreconditionError("unknown suite '" + std::string(id) + "'");
}

std::vector<std::string> counterexample_ids() {
  return {"n0-evens-prime", "n0-top-below-one", "n0-three-valued"};
}

std::vector<SuiteReport> run_counterexamples(const SuiteParams& params) {
  const std::string carrier = BoundedN0Carrier(params.bound).name();
  const std::string bound = "bound=" + std::to_string(params.bound);
  std::vector<SuiteReport> out;
  out.push_back(finish_bounded(
      timed("n0-evens-prime", carrier, [&](Check& c) { n0_evens_prime(params, c); }),
      params.bound));
  out.push_back(finish_bounded(
      timed("n0-top-below-one", carrier, [&](Check& c) { n0_top_below_one(params, c); }),
      params.bound));
  out.push_back(finish_bounded(
      timed("n0-three-valued", carrier, [&](Check& c) { n0_three_valued(params, c); }),
      params.bound));
  for (auto& r : out) r.params = bound;
  return out;
}

std::size_t AggregateReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.failed(); }));
}

std::size_t AggregateReport::skipped() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.skipped; }));
}

std::string AggregateReport::text() const {
  std::string out;
  for (const auto& r : reports) out += r.text();
  for (const auto& a : annotations) out += "annotation: " + a + "\n";
  out += "suites: " + std::to_string(reports.size()) + ", failures: " +
         std::to_string(failures()) + ", skipped: " + std::to_string(skipped()) + "\n";
  return out;
}

AggregateReport run_all(const RunConfig& config) {
  std::vector<std::string> ids = config.suites.empty() ? suite_ids() : config.suites;
  for (const auto& id : ids) {
    const auto known = suite_ids();
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw PreconditionError("unknown suite '" + id + "'");
    }
  }
  std::vector<FiniteHemiring> carriers;
  for (const auto& name : config.builtins) carriers.push_back(builtin(name));

  struct Job {
    std::string id;
    const FiniteHemiring* carrier;
  };
  std::vector<Job> jobs;
  for (const auto& c : carriers)
    for (const auto& id : ids) jobs.push_back({id, &c});

  std::vector<SuiteReport> results(jobs.size());
  auto run_range = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < jobs.size(); i += stride) {
      results[i] = run_suite(jobs[i].id, *jobs[i].carrier, config.params);
    }
  };
  const unsigned workers = std::max(1U, config.jobs);
  if (workers == 1) {
    run_range(0, 1);
  } else {
    std::vector<std::future<void>> futures;
    for (unsigned w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, run_range, w, workers));
    }
    for (auto& f : futures) f.get();
  }

  AggregateReport aggregate;
  aggregate.reports = std::move(results);

  if (config.compare_product_forms) {
    auto sums = config.params;
    sums.hproduct_form = HProductForm::sums;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (!product_sensitive(jobs[i].id)) continue;
      const auto alt = run_suite(jobs[i].id, *jobs[i].carrier, sums);
      const auto& base = aggregate.reports[i];
      if (alt.status() != base.status()) {
        aggregate.annotations.push_back(jobs[i].id + " on " + base.carrier + ": single-product " +
                                        base.status() + ", sum-form " + alt.status());
      }
    }
    if (aggregate.annotations.empty()) {
      aggregate.annotations.push_back("sum-form h-product changed no verdict");
    }
  }

  if (config.include_counterexamples) {
    for (auto& r : run_counterexamples(config.params)) aggregate.reports.push_back(std::move(r));
  }
  return aggregate;
}

}  // namespace hemi
