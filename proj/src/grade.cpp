#include "hemi/grade.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "hemi/error.hpp"

namespace hemi {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw PreconditionError("invalid grade '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Grade Grade::from(const Rational& value) {
  if (value < Rational(0) || value > Rational(1)) {
    throw PreconditionError("grade " + std::to_string(value.numerator()) + "/" +
                            std::to_string(value.denominator()) +
                            " outside [0,1]");
  }
  return Grade(value);
}

Grade Grade::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw PreconditionError("empty grade");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw PreconditionError("zero denominator in grade");
    return from(Rational(num, den));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto int_part = text.substr(0, dot);
    auto frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 15) {
      throw PreconditionError("invalid decimal grade '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    if (!int_part.empty() && int_part.front() == '-') {
      throw PreconditionError("grade '" + std::string(text) + "' outside [0,1]");
    }
    std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    std::int64_t frac = parse_int(frac_part, text);
    if (whole < 0 || whole > 1) {
      throw PreconditionError("grade '" + std::string(text) + "' outside [0,1]");
    }
    return from(Rational(whole * scale + frac, scale));
  }

  return from(Rational(parse_int(text, text)));
}

std::string Grade::to_string() const {
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" +
         std::to_string(value_.denominator());
}

std::ostream& operator<<(std::ostream& os, const Grade& g) {
  return os << g.to_string();
}

}  // namespace hemi
