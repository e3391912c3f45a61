#include "hemi/fuzzy.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "hemi/detail/scan.hpp"
#include "hemi/ideals.hpp"

namespace hemi {

FuzzySet::FuzzySet(FiniteHemiring carrier, std::vector<Grade> grades, std::string name)
    : carrier_(std::move(carrier)), grades_(std::move(grades)), name_(std::move(name)) {
  if (grades_.size() != carrier_.order()) {
    throw PreconditionError("fuzzy set needs " + std::to_string(carrier_.order()) +
                            " grades, got " + std::to_string(grades_.size()));
  }
}

FuzzySet FuzzySet::constant(const FiniteHemiring& carrier, Grade g) {
  return FuzzySet(carrier, std::vector<Grade>(carrier.order(), g));
}

std::vector<Grade> FuzzySet::image() const { return normalize_grade_set(grades_); }

bool FuzzySet::is_constant() const {
  return std::all_of(grades_.begin(), grades_.end(),
                     [&](const Grade& g) { return g == grades_.front(); });
}

bool FuzzySet::subset_of(const FuzzySet& other) const {
  for (std::size_t i = 0; i < grades_.size(); ++i)
    if (grades_[i] > other.grades_.at(i)) return false;
  return true;
}

FuzzySet FuzzySet::with_name(std::string name) const {
  return FuzzySet(carrier_, grades_, std::move(name));
}

std::string FuzzySet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(i) + ":" + grades_[i].to_string();
  }
  return out;
}

bool N0Predicate::operator()(Element n) const {
  switch (kind) {
    case Kind::any: return true;
    case Kind::even: return n % 2 == 0;
    case Kind::odd: return n % 2 == 1;
    case Kind::multiple: return n % modulus == 0;
  }
  return false;
}

std::string N0Predicate::to_string() const {
  switch (kind) {
    case Kind::any: return "any";
    case Kind::even: return "even";
    case Kind::odd: return "odd";
    case Kind::multiple: return "mult" + std::to_string(modulus);
  }
  return {};
}

N0Predicate N0Predicate::parse(std::string_view text) {
  if (text == "any" || text == "otherwise") return {Kind::any, 1};
  if (text == "even") return {Kind::even, 2};
  if (text == "odd") return {Kind::odd, 2};
  if (text.starts_with("mult")) {
    auto digits = text.substr(4);
    Element k = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') {
        throw PreconditionError("invalid predicate '" + std::string(text) + "'");
      }
      k = k * 10 + static_cast<Element>(ch - '0');
    }
    if (digits.empty() || k == 0) {
      throw PreconditionError("invalid predicate '" + std::string(text) + "'");
    }
    return {Kind::multiple, k};
  }
  throw PreconditionError("unknown predicate '" + std::string(text) + "'");
}

N0FuzzySet::N0FuzzySet(std::string name, std::vector<Clause> clauses)
    : name_(std::move(name)), clauses_(std::move(clauses)) {
  // All predicates are periodic with the lcm of their moduli, so one period
  // decides totality.
  Element period = 1;
  for (const auto& c : clauses_) period = std::lcm(period, c.when.modulus);
  for (Element n = 0; n < period; ++n) {
    bool covered = std::any_of(clauses_.begin(), clauses_.end(),
                               [n](const Clause& c) { return c.when(n); });
    if (!covered) {
      throw PreconditionError("rule for " + name_ + " does not cover " + std::to_string(n));
    }
  }
  rule_ = [clauses = clauses_](Element n) {
    for (const auto& c : clauses)
      if (c.when(n)) return c.grade;
    return Grade::zero();
  };
}

N0FuzzySet::N0FuzzySet(std::string name, std::function<Grade(Element)> rule)
    : name_(std::move(name)), rule_(std::move(rule)) {}

N0FuzzySet N0FuzzySet::parse_rule(std::string name, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.starts_with("rule ")) text = trim(text.substr(5));
  std::vector<Clause> clauses;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto clause = trim(text.substr(0, comma));
    auto arrow = clause.find("->");
    if (arrow == std::string_view::npos) {
      throw PreconditionError("expected '<predicate> -> <grade>' in '" + std::string(clause) +
                              "'");
    }
    clauses.push_back({N0Predicate::parse(trim(clause.substr(0, arrow))),
                       Grade::parse(trim(clause.substr(arrow + 2)))});
    if (comma == std::string_view::npos) break;
    text = trim(text.substr(comma + 1));
  }
  if (clauses.empty()) throw PreconditionError("empty rule");
  return N0FuzzySet(std::move(name), std::move(clauses));
}

std::string N0FuzzySet::rule_text() const {
  std::string out = "rule ";
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (i) out += ", ";
    out += clauses_[i].when.to_string() + " -> " + clauses_[i].grade.to_string();
  }
  return out;
}

std::vector<Grade> N0FuzzySet::image_up_to(Element bound) const {
  std::vector<Grade> out;
  for (Element n = 0; n <= bound; ++n) out.push_back(grade(n));
  return normalize_grade_set(std::move(out));
}

Verdict is_fuzzy_ideal(const FuzzySet& mu, Side side) {
  return detail::scan_fuzzy_ideal(mu.carrier(), mu, side);
}

Verdict is_fuzzy_k_ideal(const FuzzySet& mu, Side side) {
  return detail::scan_fuzzy_k_ideal(mu.carrier(), mu, side);
}

Verdict is_fuzzy_h_ideal(const FuzzySet& mu, Side side) {
  return detail::scan_fuzzy_h_ideal(mu.carrier(), mu, side);
}

Verdict is_fuzzy_ideal(const BoundedN0Carrier& c, const N0FuzzySet& mu, Side side) {
  return detail::scan_fuzzy_ideal(c, mu, side);
}

Verdict is_fuzzy_k_ideal(const BoundedN0Carrier& c, const N0FuzzySet& mu, Side side) {
  return detail::scan_fuzzy_k_ideal(c, mu, side);
}

Verdict is_fuzzy_h_ideal(const BoundedN0Carrier& c, const N0FuzzySet& mu, Side side) {
  return detail::scan_fuzzy_h_ideal(c, mu, side);
}

CrispSubset level_set(const FuzzySet& mu, Grade t) {
  std::vector<Element> members;
  for (Element x : elements(mu.carrier()))
    if (mu(x) >= t) members.push_back(x);
  return CrispSubset(mu.carrier(), members);
}

N0Subset level_set(const N0FuzzySet& mu, Grade t) {
  return N0Subset("U(" + mu.name() + ";" + t.to_string() + ")",
                  [mu, t](Element n) { return mu(n) >= t; });
}

Verdict transfer_check(const FuzzySet& mu, Side side) {
  for (const Grade& t : mu.image()) {
    auto level = level_set(mu, t);
    if (auto v = is_h_ideal(level, side); !v) {
      auto w = *v.witness();
      w.description = "level set U(mu;" + t.to_string() + ")={" + level.to_string() +
                      "} is not an h-ideal: " + w.description;
      return Verdict::fails(std::move(w));
    }
  }
  return Verdict::holds();
}

FuzzySet two_valued(const CrispSubset& a, Grade t, Grade s) {
  if (!(s < t)) throw PreconditionError("two-valued set needs s < t");
  std::vector<Grade> grades;
  for (Element x : elements(a.carrier())) grades.push_back(a.contains(x) ? t : s);
  return FuzzySet(a.carrier(), std::move(grades));
}

FuzzySet characteristic(const CrispSubset& a) {
  return two_valued(a, Grade::one(), Grade::zero());
}

namespace {

void require_same_carrier(const FuzzySet& mu, const FuzzySet& nu) {
  if (!mu.carrier().same_structure(nu.carrier())) {
    throw PreconditionError("fuzzy sets live on different carriers");
  }
}

// Best grade min(mu(a), nu(b)) over all a*b = p.
std::vector<Grade> product_grades(const FuzzySet& mu, const FuzzySet& nu) {
  const auto& c = mu.carrier();
  std::vector<Grade> best(c.order(), Grade::zero());
  for (Element a : elements(c))
    for (Element b : elements(c)) {
      auto& slot = best[c.mul(a, b)];
      slot = std::max(slot, std::min(mu(a), nu(b)));
    }
  return best;
}

FuzzySet h_product_sums(const FuzzySet& mu, const FuzzySet& nu) {
  const auto& c = mu.carrier();
  auto thresholds = mu.image();
  for (const auto& g : nu.image()) thresholds.push_back(g);
  thresholds = normalize_grade_set(std::move(thresholds));
  std::vector<Grade> out(c.order(), Grade::zero());
  std::vector<bool> done(c.order(), false);
  for (auto it = thresholds.rbegin(); it != thresholds.rend(); ++it) {
    const Grade t = *it;
    auto a = level_set(mu, t);
    auto b = level_set(nu, t);
    if (a.empty() || b.empty() || t.is_zero()) continue;
    std::vector<Element> products;
    for (Element x : a.members())
      for (Element y : b.members()) products.push_back(c.mul(x, y));
    const auto sums = additive_closure(c, products, false).members();
    for (Element x : elements(c)) {
      if (done[x]) continue;
      for (Element p : sums) {
        bool hit = false;
        for (Element q : sums)
          if (c.cancels(x, p, q)) {
            hit = true;
            break;
          }
        if (hit) {
          out[x] = t;
          done[x] = true;
          break;
        }
      }
    }
  }
  return FuzzySet(c, std::move(out));
}

}  // namespace

FuzzySet intersect(const FuzzySet& mu, const FuzzySet& nu) {
  require_same_carrier(mu, nu);
  std::vector<Grade> out;
  for (Element x : elements(mu.carrier())) out.push_back(std::min(mu(x), nu(x)));
  return FuzzySet(mu.carrier(), std::move(out));
}

N0FuzzySet intersect(const N0FuzzySet& mu, const N0FuzzySet& nu) {
  return N0FuzzySet("(" + mu.name() + " cap " + nu.name() + ")",
                    [mu, nu](Element n) { return std::min(mu(n), nu(n)); });
}

HProductEngine::HProductEngine(FiniteHemiring carrier)
    : carrier_(std::move(carrier)), related_(carrier_.order()) {
  for (Element x : elements(carrier_))
    for (Element p : elements(carrier_))
      for (Element q : elements(carrier_))
        if (carrier_.cancels(x, p, q)) related_[x].emplace_back(p, q);
}

std::vector<Grade> HProductEngine::grades(const FuzzySet& mu, const FuzzySet& nu) const {
  const auto g = product_grades(mu, nu);
  std::vector<Grade> out(carrier_.order(), Grade::zero());
  for (Element x : elements(carrier_))
    for (auto [p, q] : related_[x]) out[x] = std::max(out[x], std::min(g[p], g[q]));
  return out;
}

FuzzySet HProductEngine::operator()(const FuzzySet& mu, const FuzzySet& nu) const {
  require_same_carrier(mu, nu);
  return FuzzySet(carrier_, grades(mu, nu));
}

FuzzySet h_product(const FuzzySet& mu, const FuzzySet& nu, HProductForm form) {
  require_same_carrier(mu, nu);
  if (form == HProductForm::sums) return h_product_sums(mu, nu);
  return HProductEngine(mu.carrier())(mu, nu);
}

BoundedGrades h_product(const BoundedN0Carrier& c, const N0FuzzySet& mu, const N0FuzzySet& nu) {
  std::map<Element, Grade> best;
  for (Element a : elements(c))
    for (Element b : elements(c)) {
      const Element p = c.mul(a, b);
      const Grade g = std::min(mu(a), nu(b));
      auto [it, fresh] = best.emplace(p, g);
      if (!fresh) it->second = std::max(it->second, g);
    }
  BoundedGrades out{c.bound(), std::vector<Grade>(c.size(), Grade::zero()), true};
  // N0 addition is cancellative: x + p + z = q + z holds for some z <= B
  // exactly when q = x + p (and then z = 0 works).
  for (Element x : elements(c))
    for (const auto& [p, gp] : best) {
      auto q = best.find(c.add(x, p));
      if (q != best.end()) out.grades[x] = std::max(out.grades[x], std::min(gp, q->second));
    }
  return out;
}

Verdict contained_in(const BoundedGrades& mu, const N0FuzzySet& zeta) {
  for (Element n = 0; n <= mu.bound; ++n)
    if (mu(n) > zeta(n)) {
      return Verdict::fails("grade " + mu(n).to_string() + " exceeds " + zeta(n).to_string(),
                            {n});
    }
  return Verdict::holds_up_to_bound(mu.bound);
}

std::vector<FuzzySet> enumerate_fuzzy_h_ideals(const FiniteHemiring& c,
                                               const std::vector<Grade>& grade_set, Side side,
                                               std::size_t cap) {
  const auto grades = normalize_grade_set(grade_set);
  if (grades.empty()) throw PreconditionError("empty grade set");
  const std::size_t n = c.order();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(grades.size());
  if (total > static_cast<double>(cap)) {
    throw CapExceeded("fuzzy enumeration needs |grades|^order <= " + std::to_string(cap));
  }

  std::vector<FuzzySet> out;
  std::vector<std::size_t> idx(n, 0);
  std::vector<Grade> current(n);
  // Odometer over grade indices with element 0 most significant; every other
  // element is capped by the grade at 0 since fuzzy ideals peak at zero.
  for (std::size_t top = 0; top < grades.size(); ++top) {
    std::fill(idx.begin(), idx.end(), 0);
    idx[0] = top;
    while (true) {
      for (std::size_t i = 0; i < n; ++i) current[i] = grades[idx[i]];
      FuzzySet mu(c, current);
      if (is_fuzzy_h_ideal(mu, side)) out.push_back(std::move(mu));
      bool exhausted = true;
      for (std::size_t pos = n; pos-- > 1;) {
        if (idx[pos] < top) {
          ++idx[pos];
          exhausted = false;
          break;
        }
        idx[pos] = 0;
      }
      if (exhausted) break;
    }
  }
  return out;
}

std::vector<Grade> normalize_grade_set(std::vector<Grade> grades) {
  std::sort(grades.begin(), grades.end());
  grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
  return grades;
}

std::vector<Grade> parse_grade_list(std::string_view text) {
  std::vector<Grade> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    out.push_back(Grade::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return normalize_grade_set(std::move(out));
}

}  // namespace hemi
