#pragma once

// Quantifier scans shared by finite carriers and bounded N0. Every loop runs
// over elements(carrier); membership and grades are queried through callables
// so the same code serves explicit tables and rule-based sets.

#include <algorithm>
#include <optional>
#include <string>

#include "hemi/carrier.hpp"
#include "hemi/grade.hpp"
#include "hemi/subset.hpp"
#include "hemi/verdict.hpp"

namespace hemi::detail {

template <class C>
Verdict conclude(const C& carrier) {
  if constexpr (C::bounded()) {
    return Verdict::holds_up_to_bound(carrier.bound());
  } else {
    (void)carrier;
    return Verdict::holds();
  }
}

inline std::optional<Element> cancel_z(const FiniteHemiring& c, Element x, Element a,
                                       Element b) {
  return c.cancel_witness(x, a, b);
}

inline std::optional<Element> cancel_z(const BoundedN0Carrier& c, Element x, Element a,
                                       Element b) {
  for (Element z : elements(c))
    if (c.add(c.add(x, a), z) == c.add(b, z)) return z;
  return std::nullopt;
}

/// s*a for left ideals, a*s for right ideals.
template <class C>
Element absorb(const C& c, Side side, Element s, Element a) {
  return side == Side::left ? c.mul(s, a) : c.mul(a, s);
}

template <class C>
bool in_range(const C& c, Element x) {
  return x < c.size();
}

template <class C, class Set>
void require_nonempty(const C& c, const Set& set) {
  for (Element x : elements(c))
    if (set(x)) return;
  throw PreconditionError("subset must be nonempty");
}

template <class C, class Set>
Verdict scan_ideal(const C& c, const Set& set, Side side) {
  require_nonempty(c, set);
  for (Element a : elements(c)) {
    if (!set(a)) continue;
    for (Element b : elements(c))
      if (set(b) && !set(c.add(a, b))) return Verdict::fails("a+b not in set", {a, b});
  }
  for (Element s : elements(c))
    for (Element a : elements(c))
      if (set(a) && !set(absorb(c, side, s, a))) {
        return Verdict::fails(side == Side::left ? "s*a not in set" : "a*s not in set",
                              {s, a});
      }
  return conclude(c);
}

template <class C, class Set>
Verdict scan_k_ideal(const C& c, const Set& set, Side side) {
  if (auto v = scan_ideal(c, set, side); !v) return v;
  for (Element x : elements(c)) {
    if (set(x)) continue;
    for (Element y : elements(c)) {
      if (!set(y)) continue;
      const Element z = c.add(x, y);
      if (in_range(c, z) && set(z)) return Verdict::fails("x+y=z with y,z in set, x not", {x, y, z});
    }
  }
  return conclude(c);
}

template <class C, class Set>
Verdict scan_h_ideal(const C& c, const Set& set, Side side) {
  if (auto v = scan_ideal(c, set, side); !v) return v;
  for (Element x : elements(c)) {
    if (set(x)) continue;
    for (Element a : elements(c)) {
      if (!set(a)) continue;
      for (Element b : elements(c)) {
        if (!set(b)) continue;
        if (auto z = cancel_z(c, x, a, b)) {
          return Verdict::fails("x+a+z=b+z with a,b in set, x not", {x, a, b, *z});
        }
      }
    }
  }
  return conclude(c);
}

template <class C, class Set>
Verdict scan_prime_elementwise(const C& c, const Set& set) {
  bool proper = false;
  for (Element x : elements(c)) proper = proper || !set(x);
  if (!proper) return Verdict::fails("P equals the whole carrier");
  for (Element x : elements(c)) {
    if (set(x)) continue;
    for (Element y : elements(c)) {
      if (set(y)) continue;
      bool found = false;
      for (Element r : elements(c)) {
        if (!set(c.mul(c.mul(x, r), y))) {
          found = true;
          break;
        }
      }
      if (!found) return Verdict::fails("x*r*y in P for every r", {x, y});
    }
  }
  return conclude(c);
}

template <class C, class Grades>
Verdict scan_fuzzy_ideal(const C& c, const Grades& mu, Side side) {
  for (Element x : elements(c))
    for (Element y : elements(c))
      if (mu(c.add(x, y)) < std::min(mu(x), mu(y))) {
        return Verdict::fails("mu(x+y) < min(mu(x),mu(y))", {x, y});
      }
  for (Element x : elements(c))
    for (Element y : elements(c)) {
      const Element bound_by = side == Side::left ? y : x;
      if (mu(c.mul(x, y)) < mu(bound_by)) {
        return Verdict::fails(side == Side::left ? "mu(xy) < mu(y)" : "mu(xy) < mu(x)",
                              {x, y});
      }
    }
  return conclude(c);
}

template <class C, class Grades>
Verdict scan_fuzzy_k_ideal(const C& c, const Grades& mu, Side side) {
  if (auto v = scan_fuzzy_ideal(c, mu, side); !v) return v;
  for (Element x : elements(c))
    for (Element y : elements(c)) {
      const Element z = c.add(x, y);
      if (in_range(c, z) && mu(x) < std::min(mu(y), mu(z))) {
        return Verdict::fails("x+y=z with mu(x) < min(mu(y),mu(z))", {x, y, z});
      }
    }
  return conclude(c);
}

template <class C, class Grades>
Verdict scan_fuzzy_h_ideal(const C& c, const Grades& mu, Side side) {
  if (auto v = scan_fuzzy_ideal(c, mu, side); !v) return v;
  for (Element x : elements(c)) {
    const Grade mx = mu(x);
    for (Element a : elements(c)) {
      const Grade ma = mu(a);
      if (!(mx < ma)) continue;
      for (Element b : elements(c)) {
        if (!(mx < mu(b))) continue;
        if (auto z = cancel_z(c, x, a, b)) {
          return Verdict::fails("x+a+z=b+z with mu(x) < min(mu(a),mu(b))",
                                {x, a, b, *z});
        }
      }
    }
  }
  return conclude(c);
}

}  // namespace hemi::detail
