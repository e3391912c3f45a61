#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hemi/fuzzy.hpp"
#include "hemi/ideals.hpp"

namespace hemi {

/// { x | zeta(x) = zeta(0) }.
CrispSubset zeta_zero(const FuzzySet& zeta);
N0Subset zeta_zero(const N0FuzzySet& zeta);

/// Outcome of the three-condition primality test for a fuzzy h-ideal.
///
/// `verdict` passes exactly when the zero level set is a prime h-ideal, the
/// image has two grades, the grade at 0 is 1, and the set is non-constant.
struct PrimalityReport {
  Verdict verdict = Verdict::holds();
  Verdict zero_level_prime = Verdict::holds();
  bool two_valued = false;
  bool top_is_one = false;
  bool non_constant = false;
  std::size_t image_size = 0;
  Grade grade_at_zero;

  /// Four fixed lines: verdict, zero-level primality, two-valuedness, grade
  /// at zero.
  std::string render() const;
};

/// Throws PreconditionError if zeta is constant or not a fuzzy h-ideal of the
/// given side.
PrimalityReport is_prime_fuzzy_h_ideal(const FuzzySet& zeta, Side side,
                                       std::size_t cap = default_subset_cap);
/// Bounded N0 variant; zero-level primality is decided element-wise.
PrimalityReport is_prime_fuzzy_h_ideal(const BoundedN0Carrier& c, const N0FuzzySet& zeta,
                                       Side side);

/// Primality straight from the definition, restricted to fuzzy h-ideals
/// valued in grade_set + Im zeta: mu o_h nu within zeta must force mu or nu
/// within zeta. Throws PreconditionError when zeta is constant or not a
/// fuzzy h-ideal.
Verdict is_prime_definitional(const FuzzySet& zeta, const std::vector<Grade>& grade_set,
                              Side side, std::size_t cap = default_fuzzy_cap);

/// Same, reusing a precomputed family of fuzzy h-ideals (which must already
/// contain every grade_set + Im zeta valued one) and h-products.
class DefinitionalPrimeOracle {
 public:
  DefinitionalPrimeOracle(const FiniteHemiring& c, const std::vector<Grade>& grade_set, Side side,
                          std::size_t cap = default_fuzzy_cap,
                          HProductForm form = HProductForm::single);

  Verdict operator()(const FuzzySet& zeta) const;
  const std::vector<FuzzySet>& family() const noexcept { return family_; }

 private:
  Side side_;
  std::vector<Grade> grades_;
  std::vector<FuzzySet> family_;
  std::vector<std::vector<Grade>> products_;  // products_[i * n + j] = family_[i] o_h family_[j]
};

/// mu(0) = 1. Throws PreconditionError unless mu is a fuzzy h-ideal.
bool is_normal(const FuzzySet& mu, Side side = Side::left);
bool is_normal(const BoundedN0Carrier& c, const N0FuzzySet& mu, Side side = Side::left);

/// mu+(x) = mu(x) + 1 - mu(0).
FuzzySet normalize_plus(const FuzzySet& mu, Side side = Side::left);

/// A finite grade-to-grade table, non-decreasing on its domain.
class GradeMap {
 public:
  /// Throws PreconditionError on duplicate keys or a decreasing pair.
  explicit GradeMap(std::vector<std::pair<Grade, Grade>> table);

  static GradeMap identity(const std::vector<Grade>& domain);

  bool defined_at(const Grade& g) const;
  /// Throws PreconditionError outside the domain.
  Grade operator()(const Grade& g) const;
  const std::vector<std::pair<Grade, Grade>>& table() const noexcept { return table_; }

 private:
  std::vector<std::pair<Grade, Grade>> table_;
};

/// mu_f(x) = f(mu(x)). Throws PreconditionError when mu is not a fuzzy
/// h-ideal or f misses one of its grades.
FuzzySet apply_monotone(const FuzzySet& mu, const GradeMap& f, Side side = Side::left);

/// Normal and some grade is 0. Throws PreconditionError unless mu is normal.
bool is_completely_normal(const FuzzySet& mu, Side side = Side::left);

/// Normal, image {0,1}, and the zero level set a maximal h-ideal.
/// Throws PreconditionError for constant mu or non fuzzy h-ideals.
Verdict is_maximal_fuzzy_h_ideal(const FuzzySet& mu, Side side,
                                 std::size_t cap = default_subset_cap);

/// Normal fuzzy h-ideals valued in grade_set + {1}, ordered by inclusion.
struct FuzzyPoset {
  std::vector<FuzzySet> members;

  bool leq(std::size_t i, std::size_t j) const { return members[i].subset_of(members[j]); }
  /// Indices of members with nothing strictly above them.
  std::vector<std::size_t> maximal() const;
  /// Indices of completely normal members (the sub-poset C(S)).
  std::vector<std::size_t> completely_normal() const;
  /// Maximal elements of the sub-poset formed by `subset`.
  std::vector<std::size_t> maximal_within(const std::vector<std::size_t>& subset) const;
};

FuzzyPoset poset_N(const FiniteHemiring& c, const std::vector<Grade>& grade_set,
                   Side side = Side::left, std::size_t cap = default_fuzzy_cap);

}  // namespace hemi
