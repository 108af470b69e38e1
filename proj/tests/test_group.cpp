#include <doctest.h>

#include "chev/group.hpp"
#include "oracles.hpp"

using chev::AdjointAlgebra;
using chev::Elem;
using chev::GroupElement;
using chev::Matrix;
using chev::Ring;
using chev::build_algebra;
using chev::parse_system;

namespace {

oracle::IMat to_imat(const Matrix& m) {
  oracle::IMat out = oracle::imat(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i][j] = m(i, j);
  return out;
}

Matrix from_imat(const Ring& r, const oracle::IMat& a) {
  const int n = static_cast<int>(a.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = r.from_int(a[i][j]);
  return m;
}

std::vector<Elem> diagonal(const Matrix& m) {
  std::vector<Elem> d;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j)
      if (i != j) REQUIRE(m(i, j) == 0);
    d.push_back(m(i, i));
  }
  return d;
}

}  // namespace

TEST_CASE("unipotents agree with the integer exponential") {
  for (const auto& name : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    AdjointAlgebra alg = build_algebra(parse_system(name));
    for (std::int64_t n : {4, 5, 7, 6}) {
      Ring r = Ring::zmod(n);
      for (int a = 0; a < alg.num_roots(); ++a)
        for (std::int64_t t = 0; t < n; ++t) {
          auto expect = oracle::imod(oracle::iexp(to_imat(alg.adjoint_matrix(a)), t), n);
          CHECK(to_imat(chev::unipotent(alg, r, a, t).matrix()) == expect);
        }
    }
  }
}

TEST_CASE("one-parameter law") {
  AdjointAlgebra alg = build_algebra(parse_system("A2"));
  Ring z5 = Ring::zmod(5);
  for (int a = 0; a < alg.num_roots(); ++a) {
    CHECK(chev::unipotent(alg, z5, a, 0).is_identity());
    CHECK((chev::unipotent(alg, z5, a, 1) * chev::unipotent(alg, z5, a, 4)).is_identity());
  }
  Ring f4 = Ring::parse("F4");
  for (int a = 0; a < alg.num_roots(); ++a)
    for (Elem s = 0; s < 4; ++s)
      for (Elem t = 0; t < 4; ++t)
        CHECK(chev::unipotent(alg, f4, a, s) * chev::unipotent(alg, f4, a, t) ==
              chev::unipotent(alg, f4, a, f4.add(s, t)));
}

TEST_CASE("divided powers survive over Z/2") {
  AdjointAlgebra alg = build_algebra(parse_system("B2"));
  Ring z2 = Ring::zmod(2);
  bool square_term_seen = false;
  for (int a = 0; a < alg.num_roots(); ++a) {
    auto x = chev::unipotent(alg, z2, a, 1);
    auto full = oracle::imod(oracle::iexp(to_imat(alg.adjoint_matrix(a)), 1), 2);
    CHECK(to_imat(x.matrix()) == full);
    auto truncated = oracle::imod(to_imat(alg.adjoint_matrix(a)), 2);
    for (int i = 0; i < alg.dimension(); ++i) truncated[i][i] = (truncated[i][i] + 1) % 2;
    square_term_seen = square_term_seen || truncated != full;
    CHECK((x * x).is_identity());
  }
  CHECK(square_term_seen);
}

TEST_CASE("Weyl elements") {
  AdjointAlgebra alg = build_algebra(parse_system("G2"));
  Ring z7 = Ring::zmod(7);
  for (int a = 0; a < alg.num_roots(); ++a)
    for (Elem t = 1; t < 7; ++t) {
      auto w = chev::weyl(alg, z7, a, t);
      auto expect = chev::unipotent(alg, z7, a, t) * chev::unipotent(alg, z7, alg.system().negative(a), z7.neg(z7.inverse(t))) *
                    chev::unipotent(alg, z7, a, t);
      CHECK(w == expect);
    }
  for (int a = 0; a < alg.num_roots(); ++a)
    for (int b = 0; b < alg.num_roots(); ++b) {
      auto c = chev::weyl_sign(alg, a, b);
      REQUIRE(c);
      CHECK((*c == 1 || *c == -1));
      auto w = chev::weyl(alg, z7, a, 1);
      for (Elem u = 0; u < 7; ++u)
        CHECK(w * chev::unipotent(alg, z7, b, u) * w.inverse() ==
              chev::unipotent(alg, z7, alg.system().reflect(a, b), z7.mul(z7.from_int(*c), u)));
    }
}

TEST_CASE("torus anchors") {
  Ring z5 = Ring::zmod(5);
  Ring z = Ring::integers();
  AdjointAlgebra a2 = build_algebra(parse_system("A2"));
  int a1 = a2.system().simple_index(0);
  CHECK(diagonal(chev::torus_coroot(a2, z, a1, -1).matrix()) == std::vector<Elem>{1, 1, -1, -1, -1, -1, 1, 1});
  CHECK(diagonal(chev::torus_coroot(a2, z5, a1, 4).matrix()) == std::vector<Elem>{1, 1, 4, 4, 4, 4, 1, 1});
  AdjointAlgebra b2 = build_algebra(parse_system("B2"));
  int b1 = b2.system().simple_index(0);
  CHECK(diagonal(chev::torus_coroot(b2, z, b1, -1).matrix()) == std::vector<Elem>{1, 1, -1, -1, -1, -1, 1, 1, 1, 1});
}

TEST_CASE("torus conjugation scales root subgroups by the character") {
  AdjointAlgebra alg = build_algebra(parse_system("B2"));
  Ring z7 = Ring::zmod(7);
  chev::Character chi{{3, 5}};
  auto h = chev::torus(alg, z7, chi);
  for (int b = 0; b < alg.num_roots(); ++b) {
    // Oracle for chi(beta): product of simple values to the coefficients.
    Elem value = 1;
    const auto& r = alg.system().root(b);
    for (int i = 0; i < 2; ++i) {
      Elem base = r[i] >= 0 ? chi.values[i] : z7.inverse(chi.values[i]);
      for (int k = 0; k < std::abs(r[i]); ++k) value = value * base % 7;
    }
    CHECK(chi.evaluate(z7, r) == value);
    for (Elem t = 0; t < 7; ++t)
      CHECK(h * chev::unipotent(alg, z7, b, t) * h.inverse() == chev::unipotent(alg, z7, b, z7.mul(value, t)));
  }
}

TEST_CASE("Chevalley commutator formula") {
  Ring z7 = Ring::zmod(7);
  SUBCASE("A2 simple roots") {
    AdjointAlgebra alg = build_algebra(parse_system("A2"));
    int a1 = alg.system().simple_index(0), a2 = alg.system().simple_index(1);
    int sum = alg.system().index_of({1, 1});
    auto terms = chev::commutator_coefficients(alg, a1, a2);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].root == sum);
    // Brute-force the coefficient over Z/7.
    auto c = chev::commutator(chev::unipotent(alg, z7, a1, 1), chev::unipotent(alg, z7, a2, 1));
    int found = 0;
    for (Elem s = 0; s < 7; ++s)
      if (c == chev::unipotent(alg, z7, sum, s)) found = static_cast<int>(s);
    CHECK(((found == 1 && terms[0].coefficient == 1) || (found == 6 && terms[0].coefficient == -1)));
    for (Elem t = 0; t < 7; ++t)
      for (Elem u = 0; u < 7; ++u)
        CHECK(chev::commutator(chev::unipotent(alg, z7, a1, t), chev::unipotent(alg, z7, a2, u)) ==
              chev::commutator_product(alg, z7, terms, t, u));
  }
  SUBCASE("B2 short roots give 2tu") {
    AdjointAlgebra alg = build_algebra(parse_system("B2"));
    int e1 = alg.system().index_of({1, 1}), e2 = alg.system().index_of({0, 1}), top = alg.system().index_of({1, 2});
    auto terms = chev::commutator_coefficients(alg, e1, e2);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].root == top);
    CHECK(std::abs(terms[0].coefficient) == 2);
    for (Elem t = 1; t < 7; ++t)
      for (Elem u = 1; u < 7; ++u) {
        auto c = chev::commutator(chev::unipotent(alg, z7, e1, t), chev::unipotent(alg, z7, e2, u));
        Elem s = z7.mul(z7.from_int(terms[0].coefficient), z7.mul(t, u));
        CHECK(c == chev::unipotent(alg, z7, top, s));
      }
  }
  SUBCASE("G2 exhaustive over Z/7") {
    AdjointAlgebra alg = build_algebra(parse_system("G2"));
    for (int a = 0; a < alg.num_roots(); ++a)
      for (int b = 0; b < alg.num_roots(); ++b) {
        if (b == a || b == alg.system().negative(a)) continue;
        auto terms = chev::commutator_coefficients(alg, a, b);
        for (Elem t : {1, 3})
          for (Elem u : {1, 5})
            CHECK(chev::commutator(chev::unipotent(alg, z7, a, t), chev::unipotent(alg, z7, b, u)) ==
                  chev::commutator_product(alg, z7, terms, t, u));
      }
  }
}

TEST_CASE("reduction and congruence subgroups") {
  AdjointAlgebra alg = build_algebra(parse_system("A2"));
  Ring z12 = Ring::zmod(12);
  chev::IdealHandle two = chev::IdealHandle::principal(2), three = chev::IdealHandle::principal(3);
  for (int a = 0; a < alg.num_roots(); ++a)
    for (Elem t = 0; t < 12; ++t) {
      auto x = chev::unipotent(alg, z12, a, t);
      CHECK(chev::reduce(x, three) == chev::unipotent(alg, Ring::zmod(3), a, t % 3));
      CHECK(chev::in_congruence_kernel(x, two) == (t % 2 == 0));
      CHECK(chev::in_congruence_kernel(x, three) == (t % 3 == 0));
    }
  auto w = chev::weyl(alg, z12, 0, 1);
  CHECK_FALSE(chev::in_congruence_kernel(w, two));
  CHECK(chev::in_congruence_center(alg, chev::unipotent(alg, z12, 0, 6), two));
  CHECK_FALSE(chev::in_congruence_center(alg, chev::unipotent(alg, z12, 0, 1), two));
}

TEST_CASE("elements over Z") {
  AdjointAlgebra alg = build_algebra(parse_system("G2"));
  Ring z = Ring::integers();
  for (int a = 0; a < alg.num_roots(); ++a) {
    auto x = chev::unipotent(alg, z, a, 3);
    CHECK(chev::determinant(z, x.matrix()) == 1);
    CHECK((x * chev::unipotent(alg, z, a, -3)).is_identity());
    CHECK(to_imat(x.matrix()) == oracle::iexp(to_imat(alg.adjoint_matrix(a)), 3));
  }
  auto w = chev::evaluate_word(alg, z, {{0, 1}, {1, -1}, {0, 1}});
  CHECK(w == chev::weyl(alg, z, 0, 1));
  CHECK(from_imat(z, oracle::ieye(14)) == chev::identity_matrix(z, 14));
}

TEST_CASE("matching unipotents") {
  AdjointAlgebra alg = build_algebra(parse_system("A3"));
  Ring z4 = Ring::zmod(4);
  for (int a = 0; a < alg.num_roots(); ++a)
    for (Elem t = 0; t < 4; ++t) {
      CHECK(chev::match_unipotent(alg, chev::unipotent(alg, z4, a, t), a) == t);
      if (t != 0) CHECK_FALSE(chev::match_unipotent(alg, chev::unipotent(alg, z4, a, t), alg.system().negative(a)));
    }
  CHECK_FALSE(chev::match_unipotent(alg, chev::weyl(alg, z4, 0, 1), 0));
}

TEST_CASE("invalid matrices are rejected") {
  Ring z4 = Ring::zmod(4);
  Matrix m = chev::identity_matrix(z4, 8);
  m(0, 0) = 2;
  CHECK_THROWS_AS(GroupElement::from_matrix(z4, m), std::domain_error);
}
