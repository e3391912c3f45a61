#include "hemi/subset.hpp"

#include <algorithm>
#include <charconv>

namespace hemi {

std::string_view to_string(Side side) { return side == Side::left ? "left" : "right"; }

Side parse_side(std::string_view text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  throw PreconditionError("unknown side '" + std::string(text) + "'");
}

CrispSubset::CrispSubset(FromBits, FiniteHemiring carrier, std::vector<bool> bits)
    : carrier_(std::move(carrier)), bits_(std::move(bits)) {
  count_ = static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

CrispSubset::CrispSubset(FiniteHemiring carrier, const std::vector<Element>& members)
    : carrier_(std::move(carrier)), bits_(carrier_.order(), false) {
  for (Element x : members) {
    if (x >= bits_.size()) {
      throw PreconditionError("element " + std::to_string(x) + " not in carrier " +
                              carrier_.name());
    }
    if (!bits_[x]) ++count_;
    bits_[x] = true;
  }
}

CrispSubset CrispSubset::whole(const FiniteHemiring& carrier) {
  return CrispSubset(FromBits{}, carrier, std::vector<bool>(carrier.order(), true));
}

CrispSubset CrispSubset::empty(const FiniteHemiring& carrier) {
  return CrispSubset(FromBits{}, carrier, std::vector<bool>(carrier.order(), false));
}

CrispSubset CrispSubset::from_mask(const FiniteHemiring& carrier, std::uint64_t mask) {
  if (carrier.order() > 64) throw CapExceeded("bitmask subsets need order <= 64");
  std::vector<bool> bits(carrier.order());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (mask >> i) & 1U;
  return CrispSubset(FromBits{}, carrier, std::move(bits));
}

CrispSubset CrispSubset::parse(const FiniteHemiring& carrier, std::string_view text) {
  std::vector<Element> members;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    Element v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw PreconditionError("invalid subset element '" + std::string(tok) + "'");
    }
    members.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return CrispSubset(carrier, members);
}

std::vector<Element> CrispSubset::members() const {
  std::vector<Element> out;
  out.reserve(count_);
  for (Element i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

bool CrispSubset::subset_of(const CrispSubset& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.contains(i)) return false;
  return true;
}

CrispSubset CrispSubset::intersect(const CrispSubset& other) const {
  std::vector<bool> bits(bits_.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = bits_[i] && other.contains(i);
  return CrispSubset(FromBits{}, carrier_, std::move(bits));
}

CrispSubset CrispSubset::insert(Element x) const {
  if (x >= bits_.size()) throw PreconditionError("element out of range");
  auto bits = bits_;
  bits[x] = true;
  return CrispSubset(FromBits{}, carrier_, std::move(bits));
}

std::string CrispSubset::to_string() const {
  std::string out;
  for (Element x : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::strong_ordering operator<=>(const CrispSubset& a, const CrispSubset& b) {
  if (auto c = a.count_ <=> b.count_; c != 0) return c;
  if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) return c;
  for (std::size_t i = a.bits_.size(); i-- > 0;) {
    if (a.bits_[i] != b.bits_[i]) {
      return a.bits_[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

N0Subset N0Subset::multiples(Element k) {
  if (k == 0) return N0Subset("{0}", [](Element x) { return x == 0; });
  return N0Subset(std::to_string(k) + "N0", [k](Element x) { return x % k == 0; });
}

N0Subset N0Subset::all() {
  return N0Subset("N0", [](Element) { return true; });
}

std::vector<Element> N0Subset::members_up_to(Element bound) const {
  std::vector<Element> out;
  for (Element x = 0; x <= bound; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

}  // namespace hemi
