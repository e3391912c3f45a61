#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "hemi/carrier.hpp"

namespace hemi {

/// Reads the carrier text format:
///
///     hemiring <name>
///     order <n>
///     add:
///     <n rows of n indices>
///     mul:
///     <n rows of n indices>
///
/// Blank lines and lines starting with `#` are ignored; tokens may be
/// separated by any whitespace. Throws ParseError (with a line number),
/// StructuralError or AxiomError.
FiniteHemiring parse_carrier(std::istream& in);
FiniteHemiring parse_carrier_text(std::string_view text);
FiniteHemiring parse_carrier_file(const std::string& path);

/// Canonical rendering; `parse_carrier_text(write_carrier(h))` reproduces h.
std::string write_carrier(const FiniteHemiring& h);

}  // namespace hemi
