#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hemi {

/// Carrier elements are indices for finite hemirings and plain integers for
/// bounded N0.
using Element = std::uint64_t;

/// A concrete counterexample: the elements involved plus a human-readable
/// description of the violated condition.
struct Witness {
  std::string description;
  std::vector<Element> elements;

  std::string to_string() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a universally quantified check.
///
/// Finite carriers produce Holds or Fails. Bounded carriers produce
/// HoldsUpToBound or Fails; they never claim Holds.
class Verdict {
 public:
  enum class Kind { holds, fails, holds_up_to_bound };

  static Verdict holds() { return Verdict(Kind::holds); }
  static Verdict fails(Witness w) {
    Verdict v(Kind::fails);
    v.witness_ = std::move(w);
    return v;
  }
  static Verdict fails(std::string description, std::vector<Element> elements = {}) {
    return fails(Witness{std::move(description), std::move(elements)});
  }
  static Verdict holds_up_to_bound(std::uint64_t bound) {
    Verdict v(Kind::holds_up_to_bound);
    v.bound_ = bound;
    return v;
  }

  Kind kind() const noexcept { return kind_; }
  bool is_holds() const noexcept { return kind_ == Kind::holds; }
  bool is_fails() const noexcept { return kind_ == Kind::fails; }
  bool is_bounded() const noexcept { return kind_ == Kind::holds_up_to_bound; }
  /// Holds or HoldsUpToBound.
  bool passed() const noexcept { return kind_ != Kind::fails; }
  explicit operator bool() const noexcept { return passed(); }

  const std::optional<Witness>& witness() const noexcept { return witness_; }
  std::uint64_t bound() const noexcept { return bound_; }

  /// `Holds`, `HoldsUpToBound(B)` or `Fails(<witness>)`.
  std::string to_string() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  explicit Verdict(Kind k) : kind_(k) {}

  Kind kind_;
  std::optional<Witness> witness_;
  std::uint64_t bound_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Verdict& v);

}  // namespace hemi
