#include "hemi/fuzzy_structure.hpp"

#include <algorithm>

namespace hemi {

namespace {

void require_fuzzy_h_ideal(const FuzzySet& mu, Side side) {
  if (auto v = is_fuzzy_h_ideal(mu, side); !v) {
    throw PreconditionError("not a fuzzy " + std::string(to_string(side)) +
                            " h-ideal: " + v.to_string());
  }
}

void require_fuzzy_h_ideal(const BoundedN0Carrier& c, const N0FuzzySet& mu, Side side) {
  if (auto v = is_fuzzy_h_ideal(c, mu, side); !v) {
    throw PreconditionError(mu.name() + " is not a fuzzy " + std::string(to_string(side)) +
                            " h-ideal: " + v.to_string());
  }
}

Verdict combine(const Verdict& zero_level, bool two_valued, bool top_is_one,
                std::size_t image_size, const Grade& at_zero, const Verdict& success) {
  std::string why;
  auto add = [&](const std::string& s) {
    if (!why.empty()) why += "; ";
    why += s;
  };
  if (!zero_level) add("zero level set not prime: " + zero_level.to_string());
  if (!two_valued) add("|Im| = " + std::to_string(image_size));
  if (!top_is_one) add("grade at 0 is " + at_zero.to_string() + ", not 1");
  if (why.empty()) return success;
  return Verdict::fails(why);
}

}  // namespace

CrispSubset zeta_zero(const FuzzySet& zeta) {
  std::vector<Element> members;
  for (Element x : elements(zeta.carrier()))
    if (zeta(x) == zeta(0)) members.push_back(x);
  return CrispSubset(zeta.carrier(), members);
}

N0Subset zeta_zero(const N0FuzzySet& zeta) {
  const Grade top = zeta(0);
  return N0Subset(zeta.name() + "^0", [zeta, top](Element n) { return zeta(n) == top; });
}

std::string PrimalityReport::render() const {
  std::string out = "verdict: " + verdict.to_string() + "\n";
  out += "zero-level prime: " + zero_level_prime.to_string() + "\n";
  out += "two-valued: " + std::string(two_valued ? "true" : "false") + " (|Im| = " +
         std::to_string(image_size) + ")\n";
  out += "grade at zero is 1: " + std::string(top_is_one ? "true" : "false") + " (" +
         grade_at_zero.to_string() + ")\n";
  return out;
}

PrimalityReport is_prime_fuzzy_h_ideal(const FuzzySet& zeta, Side side, std::size_t cap) {
  require_fuzzy_h_ideal(zeta, side);
  if (zeta.is_constant()) throw PreconditionError("prime fuzzy h-ideals are non-constant");
  PrimalityReport r;
  r.non_constant = true;
  r.zero_level_prime = is_prime_h_ideal(zeta_zero(zeta), side, ProductForm::sums, cap);
  r.image_size = zeta.image().size();
  r.two_valued = r.image_size == 2;
  r.grade_at_zero = zeta(0);
  r.top_is_one = r.grade_at_zero.is_one();
  r.verdict = combine(r.zero_level_prime, r.two_valued, r.top_is_one, r.image_size,
                      r.grade_at_zero, Verdict::holds());
  return r;
}

PrimalityReport is_prime_fuzzy_h_ideal(const BoundedN0Carrier& c, const N0FuzzySet& zeta,
                                       Side side) {
  require_fuzzy_h_ideal(c, zeta, side);
  const auto image = zeta.image_up_to(c.bound());
  if (image.size() < 2) throw PreconditionError("prime fuzzy h-ideals are non-constant");
  PrimalityReport r;
  r.non_constant = true;
  r.zero_level_prime = is_prime_elementwise(c, zeta_zero(zeta), side);
  r.image_size = image.size();
  r.two_valued = r.image_size == 2;
  r.grade_at_zero = zeta(0);
  r.top_is_one = r.grade_at_zero.is_one();
  r.verdict = combine(r.zero_level_prime, r.two_valued, r.top_is_one, r.image_size,
                      r.grade_at_zero, Verdict::holds_up_to_bound(c.bound()));
  return r;
}

DefinitionalPrimeOracle::DefinitionalPrimeOracle(const FiniteHemiring& c,
                                                 const std::vector<Grade>& grade_set, Side side,
                                                 std::size_t cap, HProductForm form)
    : side_(side),
      grades_(normalize_grade_set(grade_set)),
      family_(enumerate_fuzzy_h_ideals(c, grades_, side, cap)) {
  HProductEngine engine(c);
  const std::size_t n = family_.size();
  products_.reserve(n * n);
  for (const auto& mu : family_)
    for (const auto& nu : family_) {
      products_.push_back(form == HProductForm::single ? engine.grades(mu, nu)
                                                       : h_product(mu, nu, form).grades());
    }
}

Verdict DefinitionalPrimeOracle::operator()(const FuzzySet& zeta) const {
  require_fuzzy_h_ideal(zeta, side_);
  if (zeta.is_constant()) throw PreconditionError("prime fuzzy h-ideals are non-constant");
  for (const Grade& g : zeta.image())
    if (!std::binary_search(grades_.begin(), grades_.end(), g)) {
      throw PreconditionError("oracle grade set lacks grade " + g.to_string());
    }

  const std::size_t n = family_.size();
  std::vector<std::size_t> outside;  // members not contained in zeta
  for (std::size_t i = 0; i < n; ++i)
    if (!family_[i].subset_of(zeta)) outside.push_back(i);

  auto below_zeta = [&](const std::vector<Grade>& g) {
    for (std::size_t x = 0; x < g.size(); ++x)
      if (g[x] > zeta(x)) return false;
    return true;
  };
  auto excess = [&](const FuzzySet& mu) {
    for (Element x : elements(zeta.carrier()))
      if (mu(x) > zeta(x)) return x;
    return Element{0};
  };
  for (std::size_t i : outside)
    for (std::size_t j : outside)
      if (below_zeta(products_[i * n + j])) {
        return Verdict::fails("mu=(" + family_[i].to_string() + ") nu=(" +
                                  family_[j].to_string() +
                                  ") with mu o_h nu within zeta, neither within zeta",
                              {excess(family_[i]), excess(family_[j])});
      }
  return Verdict::holds();
}

Verdict is_prime_definitional(const FuzzySet& zeta, const std::vector<Grade>& grade_set,
                              Side side, std::size_t cap) {
  auto grades = grade_set;
  for (const Grade& g : zeta.image()) grades.push_back(g);
  require_fuzzy_h_ideal(zeta, side);
  if (zeta.is_constant()) throw PreconditionError("prime fuzzy h-ideals are non-constant");
  return DefinitionalPrimeOracle(zeta.carrier(), grades, side, cap)(zeta);
}

bool is_normal(const FuzzySet& mu, Side side) {
  require_fuzzy_h_ideal(mu, side);
  return mu(0).is_one();
}

bool is_normal(const BoundedN0Carrier& c, const N0FuzzySet& mu, Side side) {
  require_fuzzy_h_ideal(c, mu, side);
  return mu(0).is_one();
}

FuzzySet normalize_plus(const FuzzySet& mu, Side side) {
  require_fuzzy_h_ideal(mu, side);
  const Rational shift = Rational(1) - mu(0).value();
  std::vector<Grade> out;
  for (Element x : elements(mu.carrier())) out.push_back(Grade::from(mu(x).value() + shift));
  FuzzySet plus(mu.carrier(), std::move(out), mu.name().empty() ? "" : mu.name() + "+");
  if (!plus(0).is_one() || !mu.subset_of(plus) || !is_fuzzy_h_ideal(plus, side)) {
    throw Error("normalization postcondition violated for " + mu.to_string());
  }
  return plus;
}

GradeMap::GradeMap(std::vector<std::pair<Grade, Grade>> table) : table_(std::move(table)) {
  std::sort(table_.begin(), table_.end());
  for (std::size_t i = 1; i < table_.size(); ++i) {
    if (table_[i].first == table_[i - 1].first) {
      throw PreconditionError("grade map has duplicate key " + table_[i].first.to_string());
    }
    if (table_[i].second < table_[i - 1].second) {
      throw PreconditionError("grade map decreases between " + table_[i - 1].first.to_string() +
                              " and " + table_[i].first.to_string());
    }
  }
}

GradeMap GradeMap::identity(const std::vector<Grade>& domain) {
  std::vector<std::pair<Grade, Grade>> t;
  for (const auto& g : normalize_grade_set(domain)) t.emplace_back(g, g);
  return GradeMap(std::move(t));
}

bool GradeMap::defined_at(const Grade& g) const {
  return std::any_of(table_.begin(), table_.end(), [&](const auto& p) { return p.first == g; });
}

Grade GradeMap::operator()(const Grade& g) const {
  for (const auto& [k, v] : table_)
    if (k == g) return v;
  throw PreconditionError("grade map undefined at " + g.to_string());
}

FuzzySet apply_monotone(const FuzzySet& mu, const GradeMap& f, Side side) {
  require_fuzzy_h_ideal(mu, side);
  std::vector<Grade> out;
  for (Element x : elements(mu.carrier())) out.push_back(f(mu(x)));
  FuzzySet mapped(mu.carrier(), std::move(out));
  bool ok = static_cast<bool>(is_fuzzy_h_ideal(mapped, side));
  if (f(mu(0)).is_one()) ok = ok && mapped(0).is_one();
  bool inflating = true;
  for (const Grade& t : mu.image()) inflating = inflating && f(t) >= t;
  if (inflating) ok = ok && mu.subset_of(mapped);
  if (!ok) throw Error("monotone rescaling postcondition violated for " + mu.to_string());
  return mapped;
}

bool is_completely_normal(const FuzzySet& mu, Side side) {
  if (!is_normal(mu, side)) throw PreconditionError("complete normality needs a normal set");
  const auto& g = mu.grades();
  return std::any_of(g.begin(), g.end(), [](const Grade& x) { return x.is_zero(); });
}

Verdict is_maximal_fuzzy_h_ideal(const FuzzySet& mu, Side side, std::size_t cap) {
  require_fuzzy_h_ideal(mu, side);
  if (mu.is_constant()) throw PreconditionError("maximal fuzzy h-ideals are non-constant");
  if (!mu(0).is_one()) return Verdict::fails("not normal: grade at 0 is " + mu(0).to_string());
  for (Element x : elements(mu.carrier()))
    if (!mu(x).is_zero() && !mu(x).is_one()) {
      return Verdict::fails("grade " + mu(x).to_string() + " outside {0,1}", {x});
    }
  const auto level = zeta_zero(mu);
  const auto maximal = maximal_h_ideals(mu.carrier(), side, cap);
  if (std::find(maximal.begin(), maximal.end(), level) == maximal.end()) {
    return Verdict::fails("zero level set {" + level.to_string() + "} is not a maximal h-ideal");
  }
  return Verdict::holds();
}

std::vector<std::size_t> FuzzyPoset::maximal() const {
  std::vector<std::size_t> all(members.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return maximal_within(all);
}

std::vector<std::size_t> FuzzyPoset::completely_normal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& g = members[i].grades();
    if (std::any_of(g.begin(), g.end(), [](const Grade& x) { return x.is_zero(); })) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<std::size_t> FuzzyPoset::maximal_within(const std::vector<std::size_t>& subset) const {
  std::vector<std::size_t> out;
  for (std::size_t i : subset) {
    bool top = true;
    for (std::size_t j : subset)
      if (j != i && leq(i, j) && !(members[i] == members[j])) {
        top = false;
        break;
      }
    if (top) out.push_back(i);
  }
  return out;
}

FuzzyPoset poset_N(const FiniteHemiring& c, const std::vector<Grade>& grade_set, Side side,
                   std::size_t cap) {
  auto grades = grade_set;
  grades.push_back(Grade::one());
  FuzzyPoset poset;
  for (auto& mu : enumerate_fuzzy_h_ideals(c, grades, side, cap))
    if (mu(0).is_one()) poset.members.push_back(std::move(mu));
  return poset;
}

}  // namespace hemi
