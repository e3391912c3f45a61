#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hemi/carrier.hpp"
#include "hemi/subset.hpp"
#include "hemi/verdict.hpp"

namespace hemi {

enum class IdealKind { plain, k, h };

std::string_view to_string(IdealKind kind);
IdealKind parse_ideal_kind(std::string_view text);

/// How the crisp product AB is formed.
enum class ProductForm {
  sums,    ///< all finite sums of products ab (additive closure of AB and 0)
  single,  ///< the bare set {ab}
};

/// Default limit on the carrier order for subset enumeration (2^8 subsets).
inline constexpr std::size_t default_subset_cap = 8;

// Predicates. All throw PreconditionError on an empty subset.
Verdict is_ideal(const CrispSubset& a, Side side);
Verdict is_k_ideal(const CrispSubset& a, Side side);
Verdict is_h_ideal(const CrispSubset& a, Side side);
Verdict is_ideal(const CrispSubset& a, IdealKind kind, Side side);

Verdict is_ideal(const BoundedN0Carrier& c, const N0Subset& a, Side side);
Verdict is_k_ideal(const BoundedN0Carrier& c, const N0Subset& a, Side side);
Verdict is_h_ideal(const BoundedN0Carrier& c, const N0Subset& a, Side side);

/// { x | x + a1 + z = a2 + z for some a1, a2 in A, z in S }.
CrispSubset h_closure(const CrispSubset& a);

/// Every nonempty subset satisfying the predicate, in subset order.
/// Throws CapExceeded when the carrier order exceeds `cap`.
std::vector<CrispSubset> enumerate_ideals(const FiniteHemiring& c, IdealKind kind, Side side,
                                          std::size_t cap = default_subset_cap);

/// Sa + N0a: the smallest left ideal containing a.
CrispSubset principal_left_ideal(const FiniteHemiring& c, Element a);
/// aS + N0a.
CrispSubset principal_right_ideal(const FiniteHemiring& c, Element a);

/// Smallest additively closed subset containing `generators`, and 0 unless
/// `include_zero` is false (then: all nonempty finite sums of generators).
CrispSubset additive_closure(const FiniteHemiring& c, const std::vector<Element>& generators,
                             bool include_zero = true);

CrispSubset ideal_product(const CrispSubset& a, const CrispSubset& b,
                          ProductForm form = ProductForm::sums);

/// Per element a: (x1, x2, z) with a + a x1 a + z = a x2 a + z.
struct HemiregularityWitness {
  std::vector<std::array<Element, 3>> triples;
};

struct HemiregularityResult {
  Verdict verdict;
  std::optional<HemiregularityWitness> witness;
};

HemiregularityResult is_h_hemiregular(const FiniteHemiring& c);

/// Ideal-wise primality: P is a proper h-ideal and AB within P forces A or B
/// within P for all same-side h-ideals A, B. Throws PreconditionError when P
/// is not an h-ideal.
Verdict is_prime_h_ideal(const CrispSubset& p, Side side, ProductForm form = ProductForm::sums,
                         std::size_t cap = default_subset_cap);

/// Element-wise primality: P is proper and for all x, y outside P some r has
/// xry outside P.
Verdict is_prime_elementwise(const CrispSubset& p, Side side);
/// Bounded variant; a pair (x, y) without a suitable r <= B is reported as
/// Fails even though a larger r might exist.
Verdict is_prime_elementwise(const BoundedN0Carrier& c, const N0Subset& p, Side side);

/// Proper h-ideals maximal under inclusion.
std::vector<CrispSubset> maximal_h_ideals(const FiniteHemiring& c, Side side,
                                          std::size_t cap = default_subset_cap);

}  // namespace hemi
