#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace hemi {

using Rational = boost::rational<std::int64_t>;

/// An exact membership grade in [0,1].
///
/// Grades are always normalized rationals; arithmetic that may leave the unit
/// interval is done on `Rational` and brought back through `Grade::from`.
class Grade {
 public:
  constexpr Grade() = default;

  /// Throws PreconditionError when the value lies outside [0,1].
  static Grade from(const Rational& value);
  static Grade from(std::int64_t num, std::int64_t den = 1) {
    return from(Rational(num, den));
  }

  static Grade zero() { return Grade(); }
  static Grade one() { return from(1); }

  /// Accepts `p/q`, an integer, or a finite decimal literal such as `0.2`
  /// (converted exactly to 1/5).
  static Grade parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  std::int64_t numerator() const noexcept { return value_.numerator(); }
  std::int64_t denominator() const noexcept { return value_.denominator(); }

  bool is_zero() const noexcept { return value_.numerator() == 0; }
  bool is_one() const noexcept { return value_ == Rational(1); }

  /// `0`, `1` or `p/q`.
  std::string to_string() const;

  friend bool operator==(const Grade& a, const Grade& b) noexcept {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Grade& a, const Grade& b) noexcept {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Grade(const Rational& v) : value_(v) {}

  Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Grade& g);

}  // namespace hemi
