#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hemi/carrier.hpp"

namespace hemi {

enum class Side { left, right };

std::string_view to_string(Side side);
/// Accepts `left` / `right`.
Side parse_side(std::string_view text);

/// A subset of a finite carrier.
class CrispSubset {
 public:
  /// Throws PreconditionError on out-of-range indices.
  CrispSubset(FiniteHemiring carrier, const std::vector<Element>& members);

  static CrispSubset whole(const FiniteHemiring& carrier);
  static CrispSubset empty(const FiniteHemiring& carrier);
  /// Bit i of `mask` selects element i; the carrier order must be <= 64.
  static CrispSubset from_mask(const FiniteHemiring& carrier, std::uint64_t mask);
  /// Comma-separated indices, e.g. `0,1,2`; the empty string is the empty set.
  static CrispSubset parse(const FiniteHemiring& carrier, std::string_view text);

  const FiniteHemiring& carrier() const noexcept { return carrier_; }
  bool contains(Element x) const noexcept { return x < bits_.size() && bits_[x]; }
  bool operator()(Element x) const noexcept { return contains(x); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool is_whole() const noexcept { return count_ == bits_.size(); }
  std::vector<Element> members() const;

  bool subset_of(const CrispSubset& other) const;
  CrispSubset intersect(const CrispSubset& other) const;
  CrispSubset insert(Element x) const;

  /// `0,1,2`.
  std::string to_string() const;

  friend bool operator==(const CrispSubset& a, const CrispSubset& b) {
    return a.bits_ == b.bits_;
  }
  /// Enumeration order: cardinality first, then the membership bitmask read
  /// as a binary number (element i is bit i).
  friend std::strong_ordering operator<=>(const CrispSubset& a, const CrispSubset& b);

 private:
  struct FromBits {};
  CrispSubset(FromBits, FiniteHemiring carrier, std::vector<bool> bits);

  FiniteHemiring carrier_;
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

/// A subset of N0 given by a membership rule, evaluated on any integer.
class N0Subset {
 public:
  N0Subset(std::string label, std::function<bool(Element)> rule)
      : label_(std::move(label)), rule_(std::move(rule)) {}

  /// k*N0.
  static N0Subset multiples(Element k);
  static N0Subset all();

  bool contains(Element x) const { return rule_(x); }
  bool operator()(Element x) const { return rule_(x); }
  const std::string& label() const noexcept { return label_; }
  /// Members in {0,...,bound}.
  std::vector<Element> members_up_to(Element bound) const;

 private:
  std::string label_;
  std::function<bool(Element)> rule_;
};

}  // namespace hemi
