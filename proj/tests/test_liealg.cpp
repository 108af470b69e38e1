#include <doctest.h>

#include <fstream>
#include <map>

#include <json.hpp>

#include "chev/json_io.hpp"
#include "chev/liealg.hpp"
#include "oracles.hpp"

using chev::AdjointAlgebra;
using chev::build_algebra;
using chev::parse_system;

namespace {

oracle::IMat to_imat(const chev::IntMatrix& m) {
  oracle::IMat out = oracle::imat(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i][j] = m(i, j);
  return out;
}

oracle::IMat ad_of(const AdjointAlgebra& alg, int basis) {
  return basis < alg.num_roots() ? to_imat(alg.adjoint_matrix(basis))
                                 : to_imat(alg.cartan_matrix(basis - alg.num_roots()));
}

oracle::IMat ad_of(const AdjointAlgebra& alg, const chev::SparseVector& v) {
  oracle::IMat out = oracle::imat(alg.dimension());
  for (auto [b, c] : v) {
    auto m = ad_of(alg, b);
    for (int i = 0; i < alg.dimension(); ++i)
      for (int j = 0; j < alg.dimension(); ++j) out[i][j] += c * m[i][j];
  }
  return out;
}

oracle::IMat commutator(const oracle::IMat& a, const oracle::IMat& b) {
  auto ab = oracle::imul(a, b), ba = oracle::imul(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

}  // namespace

TEST_CASE("dimensions") {
  CHECK(build_algebra(parse_system("A2")).dimension() == 8);
  CHECK(build_algebra(parse_system("B2")).dimension() == 10);
  CHECK(build_algebra(parse_system("A3")).dimension() == 15);
  CHECK(build_algebra(parse_system("G2")).dimension() == 14);
  CHECK(build_algebra(parse_system("F4")).dimension() == 52);
}

TEST_CASE("structure constants have magnitude p + 1") {
  for (const auto& name : {"A2", "B2", "G2", "A3", "C3", "B3", "D4", "F4"}) {
    CAPTURE(name);
    AdjointAlgebra alg = build_algebra(parse_system(name));
    const auto& sys = alg.system();
    const int n = alg.num_roots();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (b == sys.negative(a)) {
          CHECK_THROWS(alg.structure_constant(a, b));
          continue;
        }
        int nab = alg.structure_constant(a, b);
        if (sys.sum_index(a, b) < 0) {
          CHECK(nab == 0);
          continue;
        }
        // p from walking the chain downwards.
        int p = 0;
        auto down = [&](int k) {
          chev::Root r = sys.root(b);
          for (std::size_t i = 0; i < r.size(); ++i) r[i] -= k * sys.root(a)[i];
          return r;
        };
        while (sys.contains(down(p + 1))) ++p;
        CHECK(std::abs(nab) == p + 1);
        CHECK(alg.structure_constant(b, a) == -nab);
        CHECK(alg.structure_constant(sys.negative(a), sys.negative(b)) == -nab);
      }
  }
  AdjointAlgebra a2 = build_algebra(parse_system("A2"));
  CHECK(a2.structure_constant(a2.system().simple_index(0), a2.system().simple_index(1)) == 1);
  AdjointAlgebra b2 = build_algebra(parse_system("B2"));
  int a1 = b2.system().index_of({1, 0}), a12 = b2.system().index_of({1, 1}), s = b2.system().index_of({0, 1});
  CHECK(std::abs(b2.structure_constant(s, a12)) == 2);
  CHECK(b2.structure_constant(a1, s) == 1);
}

TEST_CASE("adjoint matrices form a representation (Jacobi)") {
  for (const auto& name : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    AdjointAlgebra alg = build_algebra(parse_system(name));
    const int dim = alg.dimension();
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) CHECK(commutator(ad_of(alg, i), ad_of(alg, j)) == ad_of(alg, alg.bracket(i, j)));
  }
}

TEST_CASE("Chevalley basis relations") {
  for (const auto& name : {"A2", "B2", "G2", "C3"}) {
    AdjointAlgebra alg = build_algebra(parse_system(name));
    const auto& sys = alg.system();
    for (int a = 0; a < alg.num_roots(); ++a) {
      // [x_a, x_-a] = h_a expressed through the simple coroots.
      auto h = alg.bracket(a, sys.negative(a));
      auto co = sys.coroot(a);
      std::map<int, std::int64_t> got(h.begin(), h.end());
      for (int i = 0; i < sys.rank(); ++i) CHECK(got[alg.cartan_index(i)] == co[i]);
      // [h_i, x_b] = <b, alpha_i> x_b.
      for (int i = 0; i < sys.rank(); ++i)
        CHECK(alg.cartan_matrix(i)(a, a) == sys.pairing(a, sys.simple_index(i)));
    }
  }
}

TEST_CASE("square of a simple root matrix") {
  AdjointAlgebra alg = build_algebra(parse_system("A2"));
  int a1 = alg.system().simple_index(0);
  auto x = to_imat(alg.adjoint_matrix(a1));
  auto x2 = oracle::imul(x, x);
  int neg = alg.system().negative(a1);
  for (int i = 0; i < alg.dimension(); ++i) CHECK(x2[i][neg] == (i == a1 ? -2 : 0));
  auto unit = alg.divided_square_unit(a1);
  REQUIRE(unit);
  CHECK(unit->row == a1);
  CHECK(unit->col == neg);
  CHECK(unit->sign == -1);
}

TEST_CASE("divided powers are integral and nilpotency indices are minimal") {
  for (const auto& name : {"A2", "B2", "G2", "A3", "C3", "F4"}) {
    CAPTURE(name);
    AdjointAlgebra alg = build_algebra(parse_system(name));
    for (int a = 0; a < alg.num_roots(); ++a) {
      const bool g2_short = alg.system().kind() == 'G' && !alg.system().is_long(a);
      CHECK(alg.nilpotency_index(a) == (g2_short ? 4 : 3));
      auto x = to_imat(alg.adjoint_matrix(a));
      oracle::IMat power = oracle::ieye(alg.dimension());
      std::int64_t fact = 1;
      for (int k = 0; k <= alg.nilpotency_index(a); ++k) {
        if (k > 0) {
          power = oracle::imul(power, x);
          fact *= k;
        }
        if (k == alg.nilpotency_index(a)) {
          CHECK(power == oracle::imat(alg.dimension()));
          break;
        }
        auto dp = to_imat(alg.divided_power(a, k));
        for (int i = 0; i < alg.dimension(); ++i)
          for (int j = 0; j < alg.dimension(); ++j) CHECK(dp[i][j] * fact == power[i][j]);
      }
    }
  }
}

TEST_CASE("golden adjoint dumps") {
  for (const auto& name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    std::ifstream f(std::string(CHEV_GOLDEN_DIR) + "/adjoint_" + name + ".json");
    REQUIRE(f);
    auto golden = nlohmann::json::parse(f);
    AdjointAlgebra alg = build_algebra(parse_system(name));
    CHECK(chev::adjoint_to_json(alg) == golden);
    // The golden matrices must themselves satisfy [X_a, X_b] = N_ab X_{a+b}.
    const auto& sys = alg.system();
    auto load = [&](int r) {
      const auto& m = golden.at("matrices").at(nlohmann::json(sys.root(r)).dump());
      oracle::IMat out;
      for (const auto& row : m) out.push_back(row.get<std::vector<std::int64_t>>());
      return out;
    };
    for (int a = 0; a < alg.num_roots(); ++a)
      for (int b = 0; b < alg.num_roots(); ++b) {
        int s = sys.sum_index(a, b);
        if (s < 0) continue;
        auto expect = load(s);
        for (auto& row : expect)
          for (auto& v : row) v *= alg.structure_constant(a, b);
        CHECK(commutator(load(a), load(b)) == expect);
      }
  }
}
