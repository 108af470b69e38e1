#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "chev/rings.hpp"
#include "oracles.hpp"

using chev::Elem;
using chev::Ring;

namespace {

void check_axioms(const Ring& r) {
  const Elem n = r.size();
  for (Elem a = 0; a < n; ++a) {
    CHECK(r.add(a, r.zero()) == a);
    CHECK(r.mul(a, r.one()) == a);
    CHECK(r.add(a, r.neg(a)) == r.zero());
    for (Elem b = 0; b < n; ++b) {
      CHECK(r.add(a, b) == r.add(b, a));
      CHECK(r.mul(a, b) == r.mul(b, a));
      for (Elem c = 0; c < n; ++c) {
        CHECK(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
        CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
        CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
      }
    }
    bool unit = false;
    for (Elem b = 0; b < n; ++b) unit = unit || r.mul(a, b) == r.one();
    CHECK(r.is_unit(a) == unit);
    if (unit) CHECK(r.mul(a, r.inverse(a)) == r.one());
    else CHECK_THROWS_AS(r.inverse(a), std::domain_error);
  }
}

// Brute-force automorphism count over all permutations fixing 0 and 1.
int count_automorphisms(const Ring& r) {
  std::vector<Elem> rest;
  for (Elem a = 0; a < r.size(); ++a)
    if (a != r.zero() && a != r.one()) rest.push_back(a);
  int count = 0;
  do {
    std::vector<Elem> f(r.size());
    f[r.zero()] = r.zero();
    f[r.one()] = r.one();
    std::size_t k = 0;
    for (Elem a = 0; a < r.size(); ++a)
      if (a != r.zero() && a != r.one()) f[a] = rest[k++];
    bool ok = true;
    for (Elem a = 0; a < r.size() && ok; ++a)
      for (Elem b = 0; b < r.size() && ok; ++b)
        ok = f[r.add(a, b)] == r.add(f[a], f[b]) && f[r.mul(a, b)] == r.mul(f[a], f[b]);
    if (ok) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

}  // namespace

TEST_CASE("ring axioms hold exhaustively") {
  for (const auto& d : {"Z/4", "Z/5", "Z/6", "Z/12", "F4", "F8", "F9", "Z/3xZ/3", "Z/2xZ/4"}) {
    CAPTURE(d);
    check_axioms(Ring::parse(d));
  }
}

TEST_CASE("integers use checked arithmetic") {
  Ring z = Ring::integers();
  CHECK(z.mul(-7, 6) == -42);
  CHECK(z.is_unit(-1));
  CHECK_FALSE(z.is_unit(2));
  CHECK_FALSE(z.has_half());
  CHECK_THROWS_AS(z.mul(Elem{1} << 40, Elem{1} << 40), std::overflow_error);
  CHECK_THROWS_AS(z.add(INT64_MAX, 1), std::overflow_error);
}

TEST_CASE("half and third") {
  struct Case {
    const char* ring;
    bool half, third;
  };
  for (auto c : {Case{"Z/5", true, true}, Case{"Z/4", false, true}, Case{"Z/6", false, false},
                 Case{"Z/7", true, true}, Case{"F4", false, true}, Case{"F9", true, false},
                 Case{"Z/3xZ/5", true, false}}) {
    CAPTURE(c.ring);
    Ring r = Ring::parse(c.ring);
    CHECK(r.has_half() == c.half);
    CHECK(r.has_third() == c.third);
  }
}

TEST_CASE("descriptors round trip") {
  CHECK(Ring::parse("F5").descriptor() == "Z/5");
  for (const auto& d : {"Z", "Z/6", "F4", "F9", "Z/3xZ/3", "Z/2xF4"}) CHECK(Ring::parse(d).descriptor() == d);
  for (const auto& bad : {"Z/1", "Z/0", "F6", "F32", "Q", "Z/", "xZ/3"}) {
    CAPTURE(bad);
    CHECK_THROWS(Ring::parse(bad));
  }
}

TEST_CASE("CRT split of Z/n") {
  Ring z6 = Ring::zmod(6);
  auto split = chev::crt_split(z6);
  REQUIRE(split.factors.size() == 2);
  CHECK(split.factors[0] == Ring::zmod(2));
  CHECK(split.factors[1] == Ring::zmod(3));
  CHECK(split.idempotents.idempotents == std::vector<Elem>{3, 4});
  CHECK(chev::is_idempotent_system(z6, split.idempotents));

  CHECK(chev::crt_split(Ring::zmod(9)).factors.size() == 1);
  CHECK(chev::crt_split(Ring::zmod(2)).idempotents.idempotents == std::vector<Elem>{1});

  for (std::int64_t n = 2; n <= 1000; ++n) {
    Ring r = Ring::zmod(n);
    auto s = chev::crt_split(r);
    std::int64_t prod = 1;
    for (const auto& f : s.factors) prod *= f.modulus();
    CHECK(prod == n);
    for (std::size_t j = 0; j < s.factors.size(); ++j) {
      // Oracle: e_j is 1 mod its own modulus and 0 mod the others.
      Elem e = s.idempotents.idempotents[j];
      for (std::size_t i = 0; i < s.factors.size(); ++i)
        CHECK(e % s.factors[i].modulus() == (i == j ? 1 : 0));
    }
    for (Elem a = 0; a < n; a += std::max<std::int64_t>(1, n / 37)) CHECK(s.from_factors(s.to_factors(a)) == a);
  }
}

TEST_CASE("CRT split of products and fields") {
  for (const auto& d : {"Z/3xZ/3", "Z/2xF4", "Z/6xZ/5", "F4"}) {
    CAPTURE(d);
    Ring r = Ring::parse(d);
    auto s = chev::crt_split(r);
    CHECK(chev::is_idempotent_system(r, s.idempotents));
    for (Elem a = 0; a < r.size(); ++a) CHECK(s.from_factors(s.to_factors(a)) == a);
  }
  CHECK(chev::crt_split(Ring::parse("Z/6xZ/5")).factors.size() == 3);
}

TEST_CASE("residue maps and maximal ideals") {
  Ring z12 = Ring::zmod(12);
  auto maxes = chev::maximal_ideals(z12);
  REQUIRE(maxes.size() == 2);
  CHECK(maxes[0].generators == std::vector<std::int64_t>{2});
  CHECK(maxes[1].generators == std::vector<std::int64_t>{3});
  for (const auto& I : maxes) {
    CHECK(chev::ideal_is_maximal(z12, I));
    auto h = chev::residue_map(z12, I);
    CHECK(h.target.size() == I.generators[0]);
    for (Elem a = 0; a < 12; ++a) {
      CHECK(h(a) == a % I.generators[0]);
      CHECK(chev::ideal_contains(z12, I, a) == (a % I.generators[0] == 0));
    }
  }
  CHECK_FALSE(chev::ideal_is_maximal(z12, chev::IdealHandle::principal(4)));
  CHECK(chev::ideal_is_proper(z12, chev::IdealHandle::principal(4)));
  CHECK_FALSE(chev::ideal_is_proper(z12, chev::IdealHandle::principal(5)));
  CHECK_THROWS(chev::residue_map(z12, chev::IdealHandle::principal(1)));

  Ring z4 = Ring::zmod(4);
  auto h = chev::residue_map(z4, chev::IdealHandle::principal(2));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      CHECK(h(z4.mul(a, b)) == h.target.mul(h(a), h(b)));
      CHECK(h(z4.add(a, b)) == h.target.add(h(a), h(b)));
    }

  Ring p = Ring::parse("Z/3xZ/3");
  auto pm = chev::maximal_ideals(p);
  REQUIRE(pm.size() == 2);
  auto hp = chev::residue_map(p, pm[0]);
  CHECK(hp.target == Ring::zmod(3));
  CHECK(hp(p.encode({1, 2})) == 1);  // (3) x R keeps the first coordinate
}

TEST_CASE("ring automorphisms") {
  CHECK(chev::ring_automorphisms(Ring::zmod(7)).size() == 1);
  CHECK(chev::ring_automorphisms(Ring::zmod(12)).size() == 1);
  for (const auto& d : {"F4", "F8", "F9"}) {
    CAPTURE(d);
    Ring r = Ring::parse(d);
    auto autos = chev::ring_automorphisms(r);
    CHECK(static_cast<int>(autos.size()) == count_automorphisms(r));
    CHECK(autos.front().is_identity());
    for (const auto& f : autos) CHECK(chev::is_ring_automorphism(f));
  }
  CHECK(chev::ring_automorphisms(Ring::parse("F4")).size() == 2);
  CHECK(static_cast<int>(chev::ring_automorphisms(Ring::parse("Z/3xZ/3")).size()) ==
        oracle::count_product_automorphisms(3));
  CHECK_THROWS_AS(chev::ring_automorphisms(Ring::integers()), std::domain_error);

  // Frobenius on F4 is a -> a^2.
  Ring f4 = Ring::parse("F4");
  auto frob = chev::ring_automorphisms(f4)[1];
  for (Elem a = 0; a < 4; ++a) CHECK(frob(a) == f4.mul(a, a));
}

TEST_CASE("additive extension") {
  Ring f4 = Ring::parse("F4");
  auto gens = f4.additive_generators();
  REQUIRE(gens.size() == 2);
  auto swap = chev::extend_additively(f4, {gens[1], gens[0]});
  CHECK_FALSE(chev::is_ring_automorphism(swap));  // sends 1 away from 1
  Ring z4 = Ring::zmod(4);
  auto doubling = chev::extend_additively(z4, {2});
  CHECK_FALSE(chev::is_ring_automorphism(doubling));
  Ring z3 = Ring::zmod(3);
  CHECK(chev::is_ring_automorphism(chev::extend_additively(z3, {1})));
}

TEST_CASE("chain rings") {
  Ring z8 = Ring::zmod(8);
  CHECK(z8.is_chain_ring());
  CHECK(z8.chain_length() == 3);
  CHECK(z8.valuation(4) == 2);
  CHECK(z8.valuation(3) == 0);
  CHECK(z8.mul(z8.divide(4, 6), 6) == 4);
  CHECK_FALSE(Ring::zmod(6).is_chain_ring());
  CHECK(Ring::parse("F9").is_chain_ring());
}
