#include "chev/liealg.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace chev {

namespace {

// Rational number with small integer parts; only used while solving for the
// structure constants.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction operator+(const Fraction& o) const {
    Fraction r{num * o.den + o.num * den, den * o.den};
    std::int64_t g = std::gcd(r.num, r.den);
    if (g) r.num /= g, r.den /= g;
    return r;
  }
};

}  // namespace

AdjointAlgebra::AdjointAlgebra(RootSystem sys)
    : sys_(std::move(sys)), dim_(static_cast<int>(sys_.size()) + sys_.rank()) {
  compute_structure_constants();
  build_matrices();
}

AdjointAlgebra build_algebra(const RootSystem& sys) { return AdjointAlgebra(sys); }

void AdjointAlgebra::compute_structure_constants() {
  const int n = num_roots();
  constants_.assign(n, std::vector<int>(n, 0));
  std::vector<std::vector<char>> known(n, std::vector<char>(n, 0));

  // General N from the positive-pair entries already fixed.
  auto value = [&](auto&& self, int a, int b) -> std::int64_t {
    int c = sys_.sum_index(a, b);
    if (c < 0) return 0;
    if (known[a][b]) return constants_[a][b];
    bool pa = sys_.is_positive(a), pb = sys_.is_positive(b);
    if (pa && pb) {
      if (known[b][a]) return -constants_[b][a];
      throw std::logic_error("structure constant requested out of order");
    }
    if (!pa && !pb) return -self(self, sys_.negative(a), sys_.negative(b));
    // Mixed signs: rotate with a + b + g = 0 to a same-sign pair.
    int g = sys_.negative(c);
    if (sys_.is_positive(g)) {
      // the positive ones are (g, a) or (b, g)
      if (pa) return static_cast<std::int64_t>(sys_.length2(g)) * self(self, g, a) / sys_.length2(b);
      return static_cast<std::int64_t>(sys_.length2(g)) * self(self, b, g) / sys_.length2(a);
    }
    if (pa) return static_cast<std::int64_t>(sys_.length2(g)) * self(self, b, g) / sys_.length2(a);
    return static_cast<std::int64_t>(sys_.length2(g)) * self(self, g, a) / sys_.length2(b);
  };
  auto N = [&](int a, int b) { return value(value, a, b); };
  auto set = [&](int a, int b, std::int64_t v) {
    constants_[a][b] = static_cast<int>(v);
    constants_[b][a] = static_cast<int>(-v);
    known[a][b] = known[b][a] = 1;
  };

  for (int xi = 0; xi < n; xi += 2) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < xi; a += 2) {
      int b = sys_.sum_index(sys_.negative(a), xi);  // xi - a
      if (b >= 0 && sys_.is_positive(b) && a < b) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) continue;
    auto [a0, b0] = pairs.front();
    const std::int64_t n0 = sys_.root_chain(b0, a0).first + 1;
    set(a0, b0, n0);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      auto [a, b] = pairs[k];
      Fraction total;
      int d1 = sys_.sum_index(b, sys_.negative(a0));
      if (d1 >= 0)
        total = total + Fraction{N(b, sys_.negative(a0)) * N(a, sys_.negative(b0)), sys_.length2(d1)};
      int d2 = sys_.sum_index(a, sys_.negative(a0));
      if (d2 >= 0)
        total = total + Fraction{N(sys_.negative(a0), a) * N(b, sys_.negative(b0)), sys_.length2(d2)};
      std::int64_t num = total.num * sys_.length2(xi);
      std::int64_t den = total.den * n0;
      if (den == 0 || num % den != 0) throw std::logic_error("non-integral structure constant");
      set(a, b, num / den);
    }
  }
  // Fill every pair.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (b == sys_.negative(a) || sys_.sum_index(a, b) < 0) continue;
      std::int64_t v = N(a, b);
      constants_[a][b] = static_cast<int>(v);
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) known[a][b] = 1;
}

int AdjointAlgebra::structure_constant(int alpha, int beta) const {
  if (beta == sys_.negative(alpha))
    throw std::invalid_argument("structure_constant: [x_a, x_-a] lies in the Cartan subalgebra");
  return constants_[alpha][beta];
}

SparseVector AdjointAlgebra::bracket(int i, int j) const {
  const int n = num_roots();
  if (i >= n && j >= n) return {};
  if (i >= n) {  // [h, x_b]
    int c = sys_.pairing(j, sys_.simple_index(i - n));
    if (c == 0) return {};
    return {{j, c}};
  }
  if (j >= n) {
    int c = sys_.pairing(i, sys_.simple_index(j - n));
    if (c == 0) return {};
    return {{i, -c}};
  }
  if (j == sys_.negative(i)) {
    SparseVector out;
    auto co = sys_.coroot(i);
    for (int t = 0; t < sys_.rank(); ++t)
      if (co[t]) out.emplace_back(n + t, co[t]);
    return out;
  }
  int s = sys_.sum_index(i, j);
  if (s < 0) return {};
  return {{s, constants_[i][j]}};
}

SparseVector AdjointAlgebra::bracket(const SparseVector& u, const SparseVector& v) const {
  std::map<int, std::int64_t> acc;
  for (auto [i, a] : u)
    for (auto [j, b] : v)
      for (auto [k, c] : bracket(i, j)) acc[k] += a * b * c;
  SparseVector out;
  for (auto [k, c] : acc)
    if (c) out.emplace_back(k, c);
  return out;
}

void AdjointAlgebra::build_matrices() {
  const int n = num_roots();
  const Ring z = Ring::integers();
  adjoint_.assign(n, IntMatrix(dim_, dim_));
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < dim_; ++j)
      for (auto [k, c] : bracket(a, j)) adjoint_[a](k, j) = c;
  cartan_ad_.assign(sys_.rank(), IntMatrix(dim_, dim_));
  for (int i = 0; i < sys_.rank(); ++i)
    for (int j = 0; j < dim_; ++j)
      for (auto [k, c] : bracket(n + i, j)) cartan_ad_[i](k, j) = c;

  divided_.resize(n);
  for (int a = 0; a < n; ++a) {
    auto& powers = divided_[a];
    powers.push_back(identity_matrix(z, dim_));
    IntMatrix p = adjoint_[a];
    std::int64_t fact = 1;
    for (int k = 1; !is_zero(p); ++k) {
      fact *= k;
      powers.push_back(divide_exact(p, fact));
      p = mat_mul(z, p, adjoint_[a]);
      if (k > 8) throw std::logic_error("adjoint matrix is not nilpotent");
    }
  }
}

std::optional<MatrixUnit> AdjointAlgebra::divided_square_unit(int alpha) const {
  if (nilpotency_index(alpha) < 3) return std::nullopt;
  const IntMatrix& d = divided_[alpha][2];
  std::optional<MatrixUnit> unit;
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j) {
      auto x = d(i, j);
      if (x == 0) continue;
      if ((x != 1 && x != -1) || unit) return std::nullopt;
      unit = MatrixUnit{i, j, static_cast<int>(x)};
    }
  return unit;
}

}  // namespace chev
