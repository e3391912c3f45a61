#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "hemi/fuzzy.hpp"

namespace hemi {

// Fuzzy set text format:
//
//     fuzzy <name> over <carrier-name>
//     <element-index> <grade>
//     ...
//
// Grades are `p/q`, integers or finite decimals. Sets over N0 use
// `over N0` followed by a single `rule <pred> -> <grade>, ...` line.
// `#` starts a comment line.

/// Throws ParseError when the header names a different carrier, an element
/// is missing or repeated, or a grade is malformed or outside [0,1].
FuzzySet parse_fuzzy(std::istream& in, const FiniteHemiring& carrier);
FuzzySet parse_fuzzy_text(std::string_view text, const FiniteHemiring& carrier);

N0FuzzySet parse_fuzzy_n0(std::istream& in);
N0FuzzySet parse_fuzzy_n0_text(std::string_view text);

/// True when the file header says `over N0`.
bool is_n0_fuzzy_file(const std::string& path);

std::string write_fuzzy(const FuzzySet& mu);
std::string write_fuzzy(const N0FuzzySet& mu);

}  // namespace hemi
