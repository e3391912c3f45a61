#include "hemi/ideals.hpp"

#include <algorithm>

#include "hemi/detail/scan.hpp"

namespace hemi {

std::string_view to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::plain: return "plain";
    case IdealKind::k: return "k";
    case IdealKind::h: return "h";
  }
  return "";
}

IdealKind parse_ideal_kind(std::string_view text) {
  if (text == "plain") return IdealKind::plain;
  if (text == "k") return IdealKind::k;
  if (text == "h") return IdealKind::h;
  throw PreconditionError("unknown ideal kind '" + std::string(text) + "'");
}

Verdict is_ideal(const CrispSubset& a, Side side) {
  return detail::scan_ideal(a.carrier(), a, side);
}

Verdict is_k_ideal(const CrispSubset& a, Side side) {
  return detail::scan_k_ideal(a.carrier(), a, side);
}

Verdict is_h_ideal(const CrispSubset& a, Side side) {
  return detail::scan_h_ideal(a.carrier(), a, side);
}

Verdict is_ideal(const CrispSubset& a, IdealKind kind, Side side) {
  switch (kind) {
    case IdealKind::plain: return is_ideal(a, side);
    case IdealKind::k: return is_k_ideal(a, side);
    case IdealKind::h: return is_h_ideal(a, side);
  }
  return is_ideal(a, side);
}

Verdict is_ideal(const BoundedN0Carrier& c, const N0Subset& a, Side side) {
  return detail::scan_ideal(c, a, side);
}

Verdict is_k_ideal(const BoundedN0Carrier& c, const N0Subset& a, Side side) {
  return detail::scan_k_ideal(c, a, side);
}

Verdict is_h_ideal(const BoundedN0Carrier& c, const N0Subset& a, Side side) {
  return detail::scan_h_ideal(c, a, side);
}

CrispSubset h_closure(const CrispSubset& a) {
  if (a.empty()) throw PreconditionError("h-closure of an empty subset");
  const auto& c = a.carrier();
  const auto members = a.members();
  std::vector<Element> out;
  for (Element x : elements(c)) {
    bool reached = false;
    for (Element a1 : members) {
      for (Element a2 : members)
        if (c.cancels(x, a1, a2)) {
          reached = true;
          break;
        }
      if (reached) break;
    }
    if (reached) out.push_back(x);
  }
  return CrispSubset(c, out);
}

std::vector<CrispSubset> enumerate_ideals(const FiniteHemiring& c, IdealKind kind, Side side,
                                          std::size_t cap) {
  if (c.order() > cap) {
    throw CapExceeded("subset enumeration needs order <= " + std::to_string(cap) + ", got " +
                      std::to_string(c.order()));
  }
  std::vector<CrispSubset> out;
  const std::uint64_t limit = std::uint64_t{1} << c.order();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    auto s = CrispSubset::from_mask(c, mask);
    if (is_ideal(s, kind, side)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CrispSubset additive_closure(const FiniteHemiring& c, const std::vector<Element>& generators,
                             bool include_zero) {
  std::vector<bool> in(c.order(), false);
  std::vector<Element> members;
  if (include_zero) {
    members.push_back(0);
    in[0] = true;
  }
  for (Element g : generators)
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  // Fixpoint: keep adding pairwise sums until nothing new appears.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Element s = c.add(members[i], members[j]);
      if (!in[s]) {
        in[s] = true;
        members.push_back(s);
      }
    }
  return CrispSubset(c, members);
}

CrispSubset principal_left_ideal(const FiniteHemiring& c, Element a) {
  if (a >= c.order()) throw PreconditionError("element out of range");
  std::vector<Element> gens{a};
  for (Element s : elements(c)) gens.push_back(c.mul(s, a));
  return additive_closure(c, gens);
}

CrispSubset principal_right_ideal(const FiniteHemiring& c, Element a) {
  if (a >= c.order()) throw PreconditionError("element out of range");
  std::vector<Element> gens{a};
  for (Element s : elements(c)) gens.push_back(c.mul(a, s));
  return additive_closure(c, gens);
}

CrispSubset ideal_product(const CrispSubset& a, const CrispSubset& b, ProductForm form) {
  if (a.empty() || b.empty()) throw PreconditionError("product of an empty subset");
  const auto& c = a.carrier();
  std::vector<Element> products;
  for (Element x : a.members())
    for (Element y : b.members()) products.push_back(c.mul(x, y));
  if (form == ProductForm::single) return CrispSubset(c, products);
  return additive_closure(c, products);
}

HemiregularityResult is_h_hemiregular(const FiniteHemiring& c) {
  HemiregularityWitness witness;
  for (Element a : elements(c)) {
    std::optional<std::array<Element, 3>> found;
    for (Element x1 : elements(c)) {
      const Element l = c.mul(c.mul(a, x1), a);
      for (Element x2 : elements(c)) {
        const Element r = c.mul(c.mul(a, x2), a);
        if (auto z = c.cancel_witness(a, l, r)) {
          found = std::array<Element, 3>{x1, x2, *z};
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      return {Verdict::fails("no x1,x2,z with a+a*x1*a+z = a*x2*a+z", {a}), std::nullopt};
    }
    witness.triples.push_back(*found);
  }
  return {Verdict::holds(), std::move(witness)};
}

namespace {

void require_h_ideal(const CrispSubset& p, Side side) {
  if (auto v = is_h_ideal(p, side); !v) {
    throw PreconditionError("{" + p.to_string() + "} is not a " + std::string(to_string(side)) +
                            " h-ideal: " + v.to_string());
  }
}

}  // namespace

Verdict is_prime_h_ideal(const CrispSubset& p, Side side, ProductForm form, std::size_t cap) {
  require_h_ideal(p, side);
  if (p.is_whole()) return Verdict::fails("P equals the whole carrier");
  const auto ideals = enumerate_ideals(p.carrier(), IdealKind::h, side, cap);
  for (const auto& a : ideals) {
    if (a.subset_of(p)) continue;
    for (const auto& b : ideals) {
      if (b.subset_of(p)) continue;
      if (ideal_product(a, b, form).subset_of(p)) {
        const auto outside = [&](const CrispSubset& s) {
          for (Element x : s.members())
            if (!p.contains(x)) return x;
          return Element{0};
        };
        return Verdict::fails("A={" + a.to_string() + "} B={" + b.to_string() +
                                  "} with AB in P, neither in P",
                              {outside(a), outside(b)});
      }
    }
  }
  return Verdict::holds();
}

Verdict is_prime_elementwise(const CrispSubset& p, Side side) {
  require_h_ideal(p, side);
  return detail::scan_prime_elementwise(p.carrier(), p);
}

Verdict is_prime_elementwise(const BoundedN0Carrier& c, const N0Subset& p, Side side) {
  if (auto v = is_h_ideal(c, p, side); !v) {
    throw PreconditionError(p.label() + " is not an h-ideal: " + v.to_string());
  }
  return detail::scan_prime_elementwise(c, p);
}

std::vector<CrispSubset> maximal_h_ideals(const FiniteHemiring& c, Side side, std::size_t cap) {
  auto ideals = enumerate_ideals(c, IdealKind::h, side, cap);
  std::vector<CrispSubset> out;
  for (const auto& a : ideals) {
    if (a.is_whole()) continue;
    bool maximal = true;
    for (const auto& b : ideals)
      if (!b.is_whole() && !(b == a) && a.subset_of(b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

}  // namespace hemi
