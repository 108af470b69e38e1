#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "chev/linalg.hpp"

using chev::Elem;
using chev::Matrix;
using chev::Ring;

namespace {

Matrix random_matrix(const Ring& r, int rows, int cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (auto& v : m.data) v = static_cast<Elem>(rng() % static_cast<std::uint64_t>(r.size()));
  return m;
}

// Leibniz expansion.
Elem leibniz(const Ring& r, const Matrix& a) {
  std::vector<int> perm(a.rows);
  std::iota(perm.begin(), perm.end(), 0);
  Elem det = r.zero();
  do {
    int inversions = 0;
    for (int i = 0; i < a.rows; ++i)
      for (int j = i + 1; j < a.rows; ++j) inversions += perm[i] > perm[j];
    Elem term = r.one();
    for (int i = 0; i < a.rows; ++i) term = r.mul(term, a(i, perm[i]));
    det = inversions % 2 ? r.sub(det, term) : r.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<Elem> apply(const Ring& r, const Matrix& a, const std::vector<Elem>& x) {
  std::vector<Elem> y(a.rows, r.zero());
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) y[i] = r.add(y[i], r.mul(a(i, j), x[j]));
  return y;
}

// All solutions of A x = 0 by enumeration.
std::set<std::vector<Elem>> brute_kernel(const Ring& r, const Matrix& a) {
  std::set<std::vector<Elem>> out;
  std::vector<Elem> x(a.cols, 0);
  while (true) {
    auto y = apply(r, a, x);
    if (std::all_of(y.begin(), y.end(), [](Elem v) { return v == 0; })) out.insert(x);
    int k = 0;
    while (k < a.cols && ++x[k] == r.size()) x[k++] = 0;
    if (k == a.cols) break;
  }
  return out;
}

// Additive span of generators, closed under ring scalars.
std::set<std::vector<Elem>> span(const Ring& r, const std::vector<std::vector<Elem>>& gens, int n) {
  std::set<std::vector<Elem>> out{std::vector<Elem>(n, 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Elem>> current(out.begin(), out.end());
    for (const auto& v : current)
      for (const auto& g : gens)
        for (Elem s = 0; s < r.size(); ++s) {
          std::vector<Elem> w(n);
          for (int i = 0; i < n; ++i) w[i] = r.add(v[i], r.mul(s, g[i]));
          grew = out.insert(w).second || grew;
        }
  }
  return out;
}

}  // namespace

TEST_CASE("determinant agrees with Leibniz expansion") {
  std::mt19937_64 rng(7);
  for (const auto& d : {"Z/4", "Z/6", "Z/9", "F4", "Z/3xZ/3"}) {
    Ring r = Ring::parse(d);
    for (int n = 1; n <= 5; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(r, n, n, rng);
        CHECK(chev::determinant(r, m) == leibniz(r, m));
      }
  }
  Ring z = Ring::integers();
  Matrix m(3, 3);
  m.data = {2, -1, 0, -1, 2, -1, 0, -1, 2};
  CHECK(chev::determinant(z, m) == 4);
  m.data = {2, -1, 0, -2, 2, -1, 0, -1, 2};  // Cartan matrix of C3
  CHECK(chev::determinant(z, m) == 2);
}

TEST_CASE("inverse exists exactly for unit determinant") {
  std::mt19937_64 rng(11);
  for (const auto& d : {"Z/4", "Z/6", "F4", "Z/12"}) {
    Ring r = Ring::parse(d);
    for (int trial = 0; trial < 100; ++trial) {
      Matrix m = random_matrix(r, 4, 4, rng);
      auto inv = chev::inverse(r, m);
      CHECK(inv.has_value() == r.is_unit(chev::determinant(r, m)));
      if (inv) {
        CHECK(chev::is_identity(r, chev::mat_mul(r, m, *inv)));
        CHECK(chev::is_identity(r, chev::mat_mul(r, *inv, m)));
      }
    }
  }
  Ring z = Ring::integers();
  Matrix u(2, 2);
  u.data = {2, 1, 1, 1};
  auto inv = chev::inverse(z, u);
  REQUIRE(inv);
  CHECK(inv->data == std::vector<Elem>{1, -1, -1, 2});
  u.data = {2, 0, 0, 1};
  CHECK_FALSE(chev::inverse(z, u));
}

TEST_CASE("kernels over chain rings are complete") {
  std::mt19937_64 rng(3);
  for (const auto& d : {"Z/4", "Z/8", "Z/9", "F4", "Z/5"}) {
    Ring r = Ring::parse(d);
    CAPTURE(d);
    for (int trial = 0; trial < 25; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 3), cols = 1 + static_cast<int>(rng() % 3);
      Matrix a = random_matrix(r, rows, cols, rng);
      if (trial % 3 == 0)
        for (auto& v : a.data) v = r.mul(v, r.uniformizer_power(1));
      auto gens = chev::kernel(r, a);
      for (const auto& g : gens) {
        auto y = apply(r, a, g);
        CHECK(std::all_of(y.begin(), y.end(), [](Elem v) { return v == 0; }));
      }
      CHECK(span(r, gens, cols) == brute_kernel(r, a));
    }
  }
}

TEST_CASE("solve_linear finds a solution whenever one exists") {
  std::mt19937_64 rng(5);
  for (const auto& d : {"Z/4", "Z/9", "F4"}) {
    Ring r = Ring::parse(d);
    for (int trial = 0; trial < 40; ++trial) {
      Matrix a = random_matrix(r, 3, 2, rng);
      std::vector<Elem> b(3);
      for (auto& v : b) v = static_cast<Elem>(rng() % static_cast<std::uint64_t>(r.size()));
      bool solvable = false;
      for (Elem x0 = 0; x0 < r.size(); ++x0)
        for (Elem x1 = 0; x1 < r.size(); ++x1) solvable = solvable || apply(r, a, {x0, x1}) == b;
      auto sol = chev::solve_linear(r, a, b);
      CHECK(sol.particular.has_value() == solvable);
      if (sol.particular) CHECK(apply(r, a, *sol.particular) == b);
    }
  }
}

TEST_CASE("Smith diagonal is a chain of divisors") {
  std::mt19937_64 rng(13);
  Ring r = Ring::zmod(27);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix a = random_matrix(r, 4, 5, rng);
    for (auto& v : a.data) v = r.mul(v, r.uniformizer_power(static_cast<int>(rng() % 3)));
    auto sf = chev::smith_form(r, a, true);
    for (std::size_t i = 1; i < sf.diagonal.size(); ++i)
      CHECK(r.valuation(sf.diagonal[i - 1]) <= r.valuation(sf.diagonal[i]));
    Matrix d = chev::mat_mul(r, chev::mat_mul(r, sf.row_transform, a), sf.column_transform);
    for (int i = 0; i < d.rows; ++i)
      for (int j = 0; j < d.cols; ++j) {
        Elem expect = (i == j && i < static_cast<int>(sf.diagonal.size())) ? sf.diagonal[i] : 0;
        CHECK(d(i, j) == expect);
      }
  }
}

TEST_CASE("exact integer division") {
  Matrix m(1, 3);
  m.data = {6, -12, 0};
  CHECK(chev::divide_exact(m, 6).data == std::vector<Elem>{1, -2, 0});
  CHECK_THROWS(chev::divide_exact(m, 4));
}
