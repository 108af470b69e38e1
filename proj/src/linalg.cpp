#include "chev/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace chev {

Matrix identity_matrix(const Ring& ring, int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix mat_mul(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      Elem x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        Elem y = b(k, j);
        if (y == 0) continue;
        c(i, j) = ring.add(c(i, j), ring.mul(x, y));
      }
    }
  return c;
}

Matrix mat_add(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("mat_add: dimension mismatch");
  Matrix c(a.rows, a.cols);
  for (std::size_t k = 0; k < a.data.size(); ++k) c.data[k] = ring.add(a.data[k], b.data[k]);
  return c;
}

Matrix mat_sub(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("mat_sub: dimension mismatch");
  Matrix c(a.rows, a.cols);
  for (std::size_t k = 0; k < a.data.size(); ++k) c.data[k] = ring.sub(a.data[k], b.data[k]);
  return c;
}

Matrix mat_scale(const Ring& ring, Elem s, const Matrix& a) {
  Matrix c(a.rows, a.cols);
  for (std::size_t k = 0; k < a.data.size(); ++k) c.data[k] = ring.mul(s, a.data[k]);
  return c;
}

bool is_zero(const Matrix& a) {
  for (Elem x : a.data)
    if (x != 0) return false;
  return true;
}

bool is_identity(const Ring& ring, const Matrix& a) {
  if (a.rows != a.cols) return false;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (a(i, j) != (i == j ? ring.one() : ring.zero())) return false;
  return true;
}

Matrix map_integers(const Ring& ring, const IntMatrix& a) {
  Matrix c(a.rows, a.cols);
  for (std::size_t k = 0; k < a.data.size(); ++k) c.data[k] = ring.from_int(a.data[k]);
  return c;
}

Matrix map_entries(const RingHom& hom, const Matrix& a) {
  Matrix c(a.rows, a.cols);
  for (std::size_t k = 0; k < a.data.size(); ++k) c.data[k] = hom(a.data[k]);
  return c;
}

IntMatrix divide_exact(const IntMatrix& a, std::int64_t d) {
  IntMatrix c(a.rows, a.cols);
  for (std::size_t k = 0; k < a.data.size(); ++k) {
    if (a.data[k] % d != 0) throw std::domain_error("divide_exact: entry not divisible");
    c.data[k] = a.data[k] / d;
  }
  return c;
}

namespace {

// Coefficients of det(x I - A), highest degree first (Berkowitz).
std::vector<Elem> characteristic_polynomial(const Ring& ring, const Matrix& a) {
  const int n = a.rows;
  std::vector<Elem> p{ring.one()};
  for (int k = 1; k <= n; ++k) {
    const int m = k - 1;  // size of the leading block
    std::vector<Elem> c(k + 1);
    c[0] = ring.one();
    c[1] = ring.neg(a(m, m));
    // v = R (column above the corner), repeatedly multiplied by the block.
    std::vector<Elem> v(m);
    for (int i = 0; i < m; ++i) v[i] = a(i, m);
    for (int j = 2; j <= k; ++j) {
      Elem s = ring.zero();
      for (int i = 0; i < m; ++i) s = ring.add(s, ring.mul(a(m, i), v[i]));
      c[j] = ring.neg(s);
      std::vector<Elem> w(m, ring.zero());
      for (int i = 0; i < m; ++i)
        for (int t = 0; t < m; ++t) w[i] = ring.add(w[i], ring.mul(a(i, t), v[t]));
      v = std::move(w);
    }
    std::vector<Elem> next(k + 1, ring.zero());
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= std::min(i, k - 1); ++j)
        next[i] = ring.add(next[i], ring.mul(c[i - j], p[j]));
    p = std::move(next);
  }
  return p;
}

std::optional<Matrix> inverse_chain(const Ring& ring, Matrix a) {
  const int n = a.rows;
  Matrix inv = identity_matrix(ring, n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (ring.is_unit(a(r, c))) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    Elem s = ring.inverse(a(c, c));
    for (int j = 0; j < n; ++j) {
      a(c, j) = ring.mul(s, a(c, j));
      inv(c, j) = ring.mul(s, inv(c, j));
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Elem f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) = ring.sub(a(r, j), ring.mul(f, a(c, j)));
        inv(r, j) = ring.sub(inv(r, j), ring.mul(f, inv(c, j)));
      }
    }
  }
  return inv;
}

}  // namespace

Elem determinant(const Ring& ring, const Matrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("determinant: square matrix expected");
  auto p = characteristic_polynomial(ring, a);
  Elem d = p[a.rows];
  return a.rows % 2 ? ring.neg(d) : d;
}

std::optional<Matrix> inverse(const Ring& ring, const Matrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("inverse: square matrix expected");
  if (ring.is_chain_ring()) return inverse_chain(ring, a);
  if (ring.finite()) {
    CrtSplit split = crt_split(ring);
    std::vector<Matrix> parts;
    for (std::size_t j = 0; j < split.factors.size(); ++j) {
      auto inv = inverse_chain(split.factors[j], map_entries(split.projections[j], a));
      if (!inv) return std::nullopt;
      parts.push_back(std::move(*inv));
    }
    Matrix out(a.rows, a.cols);
    std::vector<Elem> local(parts.size());
    for (std::size_t k = 0; k < out.data.size(); ++k) {
      for (std::size_t j = 0; j < parts.size(); ++j) local[j] = parts[j].data[k];
      out.data[k] = split.from_factors(local);
    }
    return out;
  }
  // Z: adjugate from Cayley-Hamilton.
  const int n = a.rows;
  auto p = characteristic_polynomial(ring, a);
  Elem det = n % 2 ? ring.neg(p[n]) : p[n];
  if (!ring.is_unit(det)) return std::nullopt;
  Matrix q = identity_matrix(ring, n);  // A^{n-1} + p1 A^{n-2} + ... + p_{n-1}
  for (int i = 1; i < n; ++i) {
    q = mat_mul(ring, q, a);
    for (int d = 0; d < n; ++d) q(d, d) = ring.add(q(d, d), p[i]);
  }
  Matrix adj = (n + 1) % 2 ? mat_scale(ring, ring.neg(ring.one()), q) : q;
  return mat_scale(ring, ring.inverse(det), adj);
}

namespace {

SmithForm smith_impl(const Ring& ring, Matrix a, Matrix* u, std::vector<Elem>* rhs) {
  if (!ring.is_chain_ring()) throw std::domain_error("Smith form needs Z/p^k or an explicit field");
  const int m = a.rows, n = a.cols;
  SmithForm out;
  out.column_transform = identity_matrix(ring, n);
  Matrix& v = out.column_transform;
  const int length = ring.chain_length();
  for (int t = 0; t < std::min(m, n); ++t) {
    int best_v = length, br = -1, bc = -1;
    for (int i = t; i < m && best_v > 0; ++i)
      for (int j = t; j < n; ++j) {
        Elem x = a(i, j);
        if (x == 0) continue;
        int val = ring.valuation(x);
        if (val < best_v) {
          best_v = val, br = i, bc = j;
          if (val == 0) break;
        }
      }
    if (br < 0) break;
    if (br != t) {
      for (int j = 0; j < n; ++j) std::swap(a(br, j), a(t, j));
      if (u)
        for (int j = 0; j < m; ++j) std::swap((*u)(br, j), (*u)(t, j));
      if (rhs) std::swap((*rhs)[br], (*rhs)[t]);
    }
    if (bc != t) {
      for (int i = 0; i < m; ++i) std::swap(a(i, bc), a(i, t));
      for (int i = 0; i < n; ++i) std::swap(v(i, bc), v(i, t));
    }
    const Elem pivot = a(t, t);
    for (int i = t + 1; i < m; ++i) {
      if (a(i, t) == 0) continue;
      Elem q = ring.divide(a(i, t), pivot);
      for (int j = t; j < n; ++j)
        if (a(t, j) != 0) a(i, j) = ring.sub(a(i, j), ring.mul(q, a(t, j)));
      if (u)
        for (int j = 0; j < m; ++j) (*u)(i, j) = ring.sub((*u)(i, j), ring.mul(q, (*u)(t, j)));
      if (rhs) (*rhs)[i] = ring.sub((*rhs)[i], ring.mul(q, (*rhs)[t]));
    }
    for (int j = t + 1; j < n; ++j) {
      if (a(t, j) == 0) continue;
      Elem q = ring.divide(a(t, j), pivot);
      a(t, j) = 0;
      for (int i = 0; i < n; ++i) v(i, j) = ring.sub(v(i, j), ring.mul(q, v(i, t)));
    }
    out.diagonal.push_back(pivot);
  }
  return out;
}

}  // namespace

SmithForm smith_form(const Ring& ring, Matrix a, bool with_rows) {
  if (!with_rows) return smith_impl(ring, std::move(a), nullptr, nullptr);
  Matrix u = identity_matrix(ring, a.rows);
  SmithForm f = smith_impl(ring, std::move(a), &u, nullptr);
  f.row_transform = std::move(u);
  return f;
}

SolutionSpace solve_linear(const Ring& ring, const Matrix& a, const std::vector<Elem>& b) {
  if (static_cast<int>(b.size()) != a.rows) throw std::invalid_argument("solve_linear: rhs size");
  std::vector<Elem> rhs = b;
  SmithForm f = smith_impl(ring, a, nullptr, &rhs);
  const int n = a.cols;
  const int r = static_cast<int>(f.diagonal.size());
  const int length = ring.chain_length();
  SolutionSpace out;
  const Matrix& v = f.column_transform;
  auto column = [&](int t, Elem scale) {
    std::vector<Elem> x(n);
    for (int i = 0; i < n; ++i) x[i] = ring.mul(v(i, t), scale);
    return x;
  };
  for (int t = 0; t < r; ++t) {
    int val = ring.valuation(f.diagonal[t]);
    if (val > 0) out.generators.push_back(column(t, ring.uniformizer_power(length - val)));
  }
  for (int t = r; t < n; ++t) out.generators.push_back(column(t, ring.one()));

  bool consistent = true;
  std::vector<Elem> y(n, ring.zero());
  for (int t = 0; t < r && consistent; ++t) {
    if (ring.valuation(rhs[t]) < ring.valuation(f.diagonal[t])) consistent = false;
    else y[t] = ring.divide(rhs[t], f.diagonal[t]);
  }
  for (int t = r; t < a.rows && consistent; ++t)
    if (rhs[t] != 0) consistent = false;
  if (consistent) {
    std::vector<Elem> x(n, ring.zero());
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t)
        if (y[t] != 0) x[i] = ring.add(x[i], ring.mul(v(i, t), y[t]));
    out.particular = std::move(x);
  }
  return out;
}

std::vector<std::vector<Elem>> kernel(const Ring& ring, const Matrix& a) {
  return solve_linear(ring, a, std::vector<Elem>(a.rows, ring.zero())).generators;
}

}  // namespace chev
