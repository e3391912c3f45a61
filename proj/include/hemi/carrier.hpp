#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "hemi/error.hpp"
#include "hemi/verdict.hpp"

namespace hemi {

/// Raw Cayley table as read from input: rows of element indices.
using Table = std::vector<std::vector<Element>>;

struct AxiomViolation {
  std::string axiom;
  std::vector<Element> witness;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

/// `passed` is true exactly when `violations` is empty.
struct AxiomReport {
  bool passed = true;
  std::vector<AxiomViolation> violations;

  std::string to_string() const;
};

/// Checks the hemiring axioms on a pair of raw tables.
///
/// Element 0 must already be the additive identity and the multiplicative
/// annihilator; tables that are not square, disagree in size, hold
/// out-of-range entries or misplace zero raise StructuralError. Every other
/// violated axiom is reported with the first witness found in lexicographic
/// scan order.
AxiomReport check_axioms(const Table& add, const Table& mul);

/// Raised when a FiniteHemiring is built from tables that are structurally
/// fine but violate an axiom.
class AxiomError : public Error {
 public:
  explicit AxiomError(AxiomReport report);
  const AxiomReport& report() const noexcept { return report_; }

 private:
  AxiomReport report_;
};

/// A finite hemiring given by Cayley tables, zero pinned at index 0.
///
/// Immutable; copies share the same table storage.
class FiniteHemiring {
 public:
  /// Throws StructuralError or AxiomError.
  FiniteHemiring(std::string name, const Table& add, const Table& mul);

  std::size_t order() const noexcept { return order_; }
  /// Number of elements ranged over by quantifiers.
  std::size_t size() const noexcept { return order_; }
  static constexpr bool bounded() noexcept { return false; }
  const std::string& name() const noexcept;

  Element add(Element a, Element b) const noexcept { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }

  Table add_table() const;
  Table mul_table() const;

  /// The least z with x+a+z = b+z, if any. Computed once per carrier.
  std::optional<Element> cancel_witness(Element x, Element a, Element b) const;
  bool cancels(Element x, Element a, Element b) const {
    return cancel_witness(x, a, b).has_value();
  }

  /// Same tables (names are ignored).
  bool same_structure(const FiniteHemiring& other) const noexcept;

  /// Renamed copy sharing nothing but the tables.
  FiniteHemiring renamed(std::string name) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  // Views into data_, kept inline for the hot table lookups.
  std::size_t order_ = 0;
  const Element* add_ = nullptr;
  const Element* mul_ = nullptr;
};

/// The hemiring (N0,+,*) with all quantifiers truncated to {0,...,B}.
///
/// Operation results are ordinary integers and may exceed B; membership of
/// such results is decided by the rule-based sets that live on this carrier.
class BoundedN0Carrier {
 public:
  explicit BoundedN0Carrier(std::uint64_t bound);

  std::uint64_t bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(bound_) + 1; }
  static constexpr bool bounded() noexcept { return true; }
  std::string name() const { return "N0<=" + std::to_string(bound_); }

  Element add(Element a, Element b) const noexcept { return a + b; }
  Element mul(Element a, Element b) const noexcept { return a * b; }

 private:
  std::uint64_t bound_;
};

/// Quantifier range of a carrier: 0..n-1 for finite carriers, 0..B for
/// bounded N0.
template <class Carrier>
auto elements(const Carrier& carrier) {
  return std::views::iota(Element{0}, static_cast<Element>(carrier.size()));
}

namespace builtins {

/// The four-element hemiring used throughout as the running example.
FiniteHemiring example21();
/// {0..n} with a+b = max, a*b = min.
FiniteHemiring chain(std::size_t n);
/// chain(1).
FiniteHemiring boolean();
/// The ring Z_n.
FiniteHemiring zmod(std::size_t n);
/// Z_n addition with the zero multiplication.
FiniteHemiring zero_mul(std::size_t n);
/// Componentwise direct product; (i,j) has index i*|h2| + j.
FiniteHemiring product(const FiniteHemiring& h1, const FiniteHemiring& h2);

}  // namespace builtins

/// Resolves a builtin by name: `example21`, `boolean`, `chain(n)`, `zmod(n)`,
/// `zero_mul(n)`, `product(A,B)` with nested names. Throws PreconditionError on
/// unknown names or n < 1.
FiniteHemiring builtin(std::string_view name);

/// Builtins used by the verification harness by default.
std::vector<std::string> default_builtin_names();

}  // namespace hemi
