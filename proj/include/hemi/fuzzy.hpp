#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hemi/carrier.hpp"
#include "hemi/grade.hpp"
#include "hemi/subset.hpp"
#include "hemi/verdict.hpp"

namespace hemi {

/// A fuzzy subset of a finite carrier: one grade per element.
class FuzzySet {
 public:
  /// Throws PreconditionError unless there is exactly one grade per element.
  FuzzySet(FiniteHemiring carrier, std::vector<Grade> grades, std::string name = {});

  static FuzzySet constant(const FiniteHemiring& carrier, Grade g);

  const FiniteHemiring& carrier() const noexcept { return carrier_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Grade>& grades() const noexcept { return grades_; }

  Grade grade(Element x) const { return grades_.at(x); }
  Grade operator()(Element x) const { return grades_[x]; }

  /// Distinct grades in increasing order.
  std::vector<Grade> image() const;
  bool is_constant() const;
  /// Pointwise <=.
  bool subset_of(const FuzzySet& other) const;

  FuzzySet with_name(std::string name) const;

  /// `0:1 1:1/2 ...`.
  std::string to_string() const;

  friend bool operator==(const FuzzySet& a, const FuzzySet& b) { return a.grades_ == b.grades_; }

 private:
  FiniteHemiring carrier_;
  std::vector<Grade> grades_;
  std::string name_;
};

/// Predicate used in rule-based N0 fuzzy sets.
struct N0Predicate {
  enum class Kind { any, even, odd, multiple };
  Kind kind = Kind::any;
  Element modulus = 1;  // for `multiple`

  bool operator()(Element n) const;
  /// `any`, `even`, `odd`, `mult<k>`.
  std::string to_string() const;
  static N0Predicate parse(std::string_view text);
};

/// A fuzzy subset of N0 given by a rule; grades are defined on every integer.
class N0FuzzySet {
 public:
  struct Clause {
    N0Predicate when;
    Grade grade;
  };

  /// First matching clause wins; the rule must be total (checked over one
  /// period of its predicates), otherwise PreconditionError.
  N0FuzzySet(std::string name, std::vector<Clause> clauses);
  /// Arbitrary computed grades (intersections, rescalings).
  N0FuzzySet(std::string name, std::function<Grade(Element)> rule);

  /// Parses `even -> 1, odd -> 1/5` (an optional leading `rule` is accepted).
  static N0FuzzySet parse_rule(std::string name, std::string_view text);

  Grade grade(Element n) const { return rule_(n); }
  Grade operator()(Element n) const { return rule_(n); }
  const std::string& name() const noexcept { return name_; }
  /// Empty for computed sets.
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  /// `rule even -> 1, odd -> 1/5`; only meaningful for clause-based sets.
  std::string rule_text() const;

  /// Distinct grades taken on {0,...,bound}, increasing.
  std::vector<Grade> image_up_to(Element bound) const;

 private:
  std::string name_;
  std::vector<Clause> clauses_;
  std::function<Grade(Element)> rule_;
};

/// Grades of a bounded computation over {0,...,bound}. When `lower_bound` is
/// set the values may grow if the bound is raised.
struct BoundedGrades {
  Element bound = 0;
  std::vector<Grade> grades;
  bool lower_bound = true;

  Grade operator()(Element n) const { return grades.at(n); }
};

/// Which decompositions the h-product ranges over.
enum class HProductForm {
  single,  ///< x + a1 b1 + z = a2 b2 + z
  sums,    ///< finite sums of products on both sides (experimental)
};

// Fuzzy ideal predicates; Fails carries the violating elements.
Verdict is_fuzzy_ideal(const FuzzySet& mu, Side side);
Verdict is_fuzzy_k_ideal(const FuzzySet& mu, Side side);
Verdict is_fuzzy_h_ideal(const FuzzySet& mu, Side side);
inline Verdict is_fuzzy_left_ideal(const FuzzySet& mu) { return is_fuzzy_ideal(mu, Side::left); }

Verdict is_fuzzy_ideal(const BoundedN0Carrier& c, const N0FuzzySet& mu, Side side);
Verdict is_fuzzy_k_ideal(const BoundedN0Carrier& c, const N0FuzzySet& mu, Side side);
Verdict is_fuzzy_h_ideal(const BoundedN0Carrier& c, const N0FuzzySet& mu, Side side);

/// U(mu; t) = { x | mu(x) >= t }.
CrispSubset level_set(const FuzzySet& mu, Grade t);
N0Subset level_set(const N0FuzzySet& mu, Grade t);

/// Fuzzy h-ideal test through level sets: holds iff every U(mu; t), t in
/// Im mu, is an h-ideal of the given side.
Verdict transfer_check(const FuzzySet& mu, Side side);

/// t on A, s elsewhere. Throws PreconditionError unless s < t.
FuzzySet two_valued(const CrispSubset& a, Grade t, Grade s);
FuzzySet characteristic(const CrispSubset& a);

FuzzySet intersect(const FuzzySet& mu, const FuzzySet& nu);
N0FuzzySet intersect(const N0FuzzySet& mu, const N0FuzzySet& nu);

/// The h-product; 0 where no decomposition exists. Throws PreconditionError
/// when the carriers differ.
FuzzySet h_product(const FuzzySet& mu, const FuzzySet& nu,
                   HProductForm form = HProductForm::single);
/// Bounded h-product on N0; all of a1, b1, a2, b2, z range over {0,...,B}.
BoundedGrades h_product(const BoundedN0Carrier& c, const N0FuzzySet& mu, const N0FuzzySet& nu);

/// Precomputes the h-equation relation of a carrier so that many h-products
/// over the same carrier avoid repeated quadruple scans.
class HProductEngine {
 public:
  explicit HProductEngine(FiniteHemiring carrier);

  FuzzySet operator()(const FuzzySet& mu, const FuzzySet& nu) const;
  /// Grades only, no FuzzySet construction.
  std::vector<Grade> grades(const FuzzySet& mu, const FuzzySet& nu) const;

 private:
  FiniteHemiring carrier_;
  // related_[x] lists (p, q) with x + p + z = q + z for some z.
  std::vector<std::vector<std::pair<Element, Element>>> related_;
};

/// mu <= zeta pointwise over the bounded range.
Verdict contained_in(const BoundedGrades& mu, const N0FuzzySet& zeta);

/// Default cap on |gradeSet|^order for fuzzy enumeration.
inline constexpr std::size_t default_fuzzy_cap = 1'000'000;

/// Every gradeSet-valued fuzzy h-ideal, in lexicographic order of grade
/// vectors (element 0 most significant, grades in increasing order).
std::vector<FuzzySet> enumerate_fuzzy_h_ideals(const FiniteHemiring& c,
                                               const std::vector<Grade>& grade_set, Side side,
                                               std::size_t cap = default_fuzzy_cap);

/// Sorted, deduplicated copy.
std::vector<Grade> normalize_grade_set(std::vector<Grade> grades);
/// Comma-separated grades such as `0,1/2,1`, returned normalized.
std::vector<Grade> parse_grade_list(std::string_view text);

}  // namespace hemi
