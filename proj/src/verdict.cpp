#include "hemi/verdict.hpp"

namespace hemi {

std::string Witness::to_string() const {
  std::string out = description;
  if (!elements.empty()) {
    out += " [";
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(elements[i]);
    }
    out += ']';
  }
  return out;
}

std::string Verdict::to_string() const {
  switch (kind_) {
    case Kind::holds:
      return "Holds";
    case Kind::holds_up_to_bound:
      return "HoldsUpToBound(" + std::to_string(bound_) + ")";
    case Kind::fails:
      return "Fails(" + (witness_ ? witness_->to_string() : std::string()) + ")";
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Verdict& v) {
  return os << v.to_string();
}

}  // namespace hemi
