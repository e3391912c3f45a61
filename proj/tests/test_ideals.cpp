#include <doctest.h>

#include "hemi/ideals.hpp"
#include "hemi/model_finder.hpp"
#include "oracles.hpp"

using namespace hemi;

namespace {

std::vector<std::string> names(const std::vector<CrispSubset>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(s.to_string());
  return out;
}

std::vector<FiniteHemiring> small_carriers() {
  std::vector<FiniteHemiring> out;
  for (const auto& n : default_builtin_names()) out.push_back(builtin(n));
  for (std::size_t order = 1; order <= 3; ++order)
    for (auto& c : enumerate_hemirings(order)) out.push_back(c);
  return out;
}

}  // namespace

TEST_SUITE("ideals") {

TEST_CASE("example21 h-ideals") {
  const auto s = builtins::example21();
  CHECK(names(enumerate_ideals(s, IdealKind::h, Side::left)) ==
        std::vector<std::string>{"0,1,2", "0,1,2,3"});
  CHECK(is_h_ideal(CrispSubset(s, {0, 1, 2}), Side::left));
  const auto v = is_h_ideal(CrispSubset(s, {0}), Side::left);
  REQUIRE(v.is_fails());
  CHECK(v.witness()->elements == std::vector<Element>{1, 0, 0, 1});
  CHECK(h_closure(CrispSubset(s, {0})).to_string() == "0,1,2");
  CHECK(h_closure(CrispSubset::whole(s)).is_whole());
}

TEST_CASE("zmod(4) and chain(2) examples") {
  const auto z4 = builtins::zmod(4);
  CHECK(names(enumerate_ideals(z4, IdealKind::h, Side::left)) ==
        std::vector<std::string>{"0", "0,2", "0,1,2,3"});
  CHECK(ideal_product(CrispSubset(z4, {0, 2}), CrispSubset(z4, {0, 2})).to_string() == "0");
  const auto c2 = builtins::chain(2);
  CHECK(h_closure(CrispSubset(c2, {0, 1})).to_string() == "0,1,2");
  CHECK(principal_left_ideal(builtins::zmod(6), 2).to_string() == "0,2,4");
  const auto s = builtins::example21();
  CHECK(ideal_product(CrispSubset(s, {0, 1, 2}), CrispSubset(s, {0, 1, 2})).to_string() == "0,1");
}

TEST_CASE("order-one hemiring has only {0}") {
  const auto one = enumerate_hemirings(1).front();
  for (auto kind : {IdealKind::plain, IdealKind::k, IdealKind::h}) {
    CHECK(names(enumerate_ideals(one, kind, Side::left)) == std::vector<std::string>{"0"});
  }
}

TEST_CASE("predicates and closure agree with the brute-force oracle") {
  for (const auto& c : small_carriers()) {
    if (c.order() > 6) continue;
    CAPTURE(c.name());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c.order()); ++mask) {
      const auto a = CrispSubset::from_mask(c, mask);
      const auto bits = oracle::bits_of(c.order(), mask);
      for (bool left : {true, false}) {
        const Side side = left ? Side::left : Side::right;
        CHECK(is_ideal(a, side).passed() == oracle::left_ideal(c, bits, left));
        CHECK(is_k_ideal(a, side).passed() == oracle::k_ideal(c, bits, left));
        CHECK(is_h_ideal(a, side).passed() == oracle::h_ideal(c, bits, left));
      }
      const auto cl = h_closure(a);
      const auto expected = oracle::h_closure(c, bits);
      for (Element x = 0; x < c.order(); ++x) CHECK(cl.contains(x) == expected[x]);
    }
    CHECK(is_h_hemiregular(c).verdict.passed() == oracle::h_hemiregular(c));
  }
}

TEST_CASE("hemiregularity witnesses satisfy their equation") {
  for (const auto& c : small_carriers()) {
    const auto r = is_h_hemiregular(c);
    if (!r.verdict.is_holds()) {
      CHECK(r.verdict.witness().has_value());
      continue;
    }
    REQUIRE(r.witness.has_value());
    for (Element a = 0; a < c.order(); ++a) {
      const auto [x1, x2, z] = r.witness->triples[a];
      CHECK(c.add(c.add(a, c.mul(c.mul(a, x1), a)), z) == c.add(c.mul(c.mul(a, x2), a), z));
    }
  }
  CHECK(is_h_hemiregular(builtins::chain(3)).verdict.is_holds());
  CHECK(is_h_hemiregular(builtins::zmod(6)).verdict.is_holds());
  CHECK(is_h_hemiregular(builtins::zmod(4)).verdict.is_fails());
  CHECK(is_h_hemiregular(builtins::example21()).verdict.is_fails());
}

TEST_CASE("every h-ideal is a k-ideal") {
  for (const auto& c : small_carriers())
    for (Side side : {Side::left, Side::right}) {
      const auto ks = enumerate_ideals(c, IdealKind::k, side);
      for (const auto& h : enumerate_ideals(c, IdealKind::h, side)) {
        CHECK(std::find(ks.begin(), ks.end(), h) != ks.end());
      }
    }
}

TEST_CASE("closure of a left ideal is the least left h-ideal above it") {
  for (const auto& c : small_carriers()) {
    const auto hs = enumerate_ideals(c, IdealKind::h, Side::left);
    for (const auto& a : enumerate_ideals(c, IdealKind::plain, Side::left)) {
      const auto cl = h_closure(a);
      CHECK(is_h_ideal(cl, Side::left));
      CHECK(a.subset_of(cl));
      for (const auto& h : hs)
        if (a.subset_of(h)) CHECK(cl.subset_of(h));
    }
  }
}

TEST_CASE("closure contains sets with 0, and is idempotent on additively closed ones") {
  for (const auto& c : small_carriers()) {
    if (c.order() > 6) continue;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c.order()); mask += 2) {
      const auto a = CrispSubset::from_mask(c, mask);
      // x + 0 + 0 = x + 0.
      CHECK(a.subset_of(h_closure(a)));
      CHECK(h_closure(a).contains(0));
      if (additive_closure(c, a.members()) == a) CHECK(h_closure(h_closure(a)) == h_closure(a));
    }
  }
}

TEST_CASE("closure is neither extensive nor idempotent on arbitrary subsets of a ring") {
  const auto z2 = builtins::zmod(2);
  CHECK(h_closure(CrispSubset(z2, {1})).to_string() == "0");
  const auto z4 = builtins::zmod(4);
  const auto once = h_closure(CrispSubset(z4, {0, 1}));
  CHECK(once.to_string() == "0,1,3");
  CHECK(h_closure(once).to_string() == "0,1,2,3");
}

TEST_CASE("closure of AB lies in A cap B for right/left h-ideals") {
  for (const auto& c : small_carriers())
    for (const auto& a : enumerate_ideals(c, IdealKind::h, Side::right))
      for (const auto& b : enumerate_ideals(c, IdealKind::h, Side::left)) {
        CHECK(h_closure(ideal_product(a, b)).subset_of(a.intersect(b)));
      }
}

TEST_CASE("hemiregularity is equivalent to closure(AB) = A cap B") {
  for (const auto& c : small_carriers()) {
    CAPTURE(c.name());
    bool all_equal = true;
    for (const auto& a : enumerate_ideals(c, IdealKind::h, Side::right))
      for (const auto& b : enumerate_ideals(c, IdealKind::h, Side::left))
        all_equal = all_equal && h_closure(ideal_product(a, b)) == a.intersect(b);
    CHECK(all_equal == oracle::h_hemiregular(c));
  }
}

TEST_CASE("primality: ideal-wise and element-wise agree") {
  for (const auto& c : small_carriers())
    for (Side side : {Side::left, Side::right})
      for (const auto& p : enumerate_ideals(c, IdealKind::h, side)) {
        const bool sums = is_prime_h_ideal(p, side, ProductForm::sums).passed();
        CHECK(sums == is_prime_h_ideal(p, side, ProductForm::single).passed());
        CHECK(sums == is_prime_elementwise(p, side).passed());
      }
  const auto z6 = builtins::zmod(6);
  CHECK(is_prime_h_ideal(CrispSubset(z6, {0, 2, 4}), Side::left));
  CHECK(is_prime_h_ideal(CrispSubset(z6, {0, 3}), Side::left));
  CHECK(is_prime_h_ideal(CrispSubset(z6, {0}), Side::left).is_fails());
  CHECK(is_prime_h_ideal(CrispSubset::whole(z6), Side::left).is_fails());
  CHECK_THROWS_AS(is_prime_h_ideal(CrispSubset(z6, {0, 1}), Side::left), PreconditionError);
}

TEST_CASE("maximal h-ideals") {
  CHECK(names(maximal_h_ideals(builtins::zmod(6), Side::left)) ==
        std::vector<std::string>{"0,3", "0,2,4"});
  CHECK(names(maximal_h_ideals(builtins::example21(), Side::left)) ==
        std::vector<std::string>{"0,1,2"});
  CHECK(maximal_h_ideals(builtins::chain(2), Side::left).empty());
}

TEST_CASE("N0 ideals up to a bound") {
  const BoundedN0Carrier n0(30);
  CHECK(is_h_ideal(n0, N0Subset::multiples(2), Side::left).is_bounded());
  CHECK(is_k_ideal(n0, N0Subset::multiples(3), Side::left).is_bounded());
  CHECK(is_prime_elementwise(n0, N0Subset::multiples(2), Side::left).is_bounded());
  CHECK(is_prime_elementwise(n0, N0Subset::multiples(6), Side::left).is_fails());
  const N0Subset above_two("x>=2 or 0", [](Element x) { return x == 0 || x >= 2; });
  CHECK(is_h_ideal(n0, above_two, Side::left).is_fails());
}

TEST_CASE("caps and preconditions") {
  CHECK_THROWS_AS(enumerate_ideals(builtins::zmod(9), IdealKind::h, Side::left), CapExceeded);
  CHECK_THROWS_AS(h_closure(CrispSubset::empty(builtins::zmod(2))), PreconditionError);
  CHECK_THROWS_AS(is_h_ideal(CrispSubset::empty(builtins::zmod(2)), Side::left),
                  PreconditionError);
}

}  // TEST_SUITE
