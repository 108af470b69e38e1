#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chev/rings.hpp"

namespace chev {

/// Dense row-major matrix of ring element codes.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

  Elem& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  Elem operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

  bool operator==(const Matrix& o) const = default;
};

/// Matrix with integer entries, used for the integral forms computed once
/// per system.
using IntMatrix = Matrix;

Matrix identity_matrix(const Ring& ring, int n);
Matrix mat_mul(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix mat_add(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Ring& ring, Elem s, const Matrix& a);
bool is_zero(const Matrix& a);
bool is_identity(const Ring& ring, const Matrix& a);

/// Entrywise image of an integer matrix in a ring.
Matrix map_integers(const Ring& ring, const IntMatrix& a);
/// Entrywise image under a ring homomorphism.
Matrix map_entries(const RingHom& hom, const Matrix& a);

/// Exact integer division of every entry; throws when inexact.
IntMatrix divide_exact(const IntMatrix& a, std::int64_t d);

/// Determinant over a commutative ring by the division-free
/// Samuelson-Berkowitz recurrence.
Elem determinant(const Ring& ring, const Matrix& a);

/// Inverse over a finite ring or Z; empty when the determinant is not a unit.
std::optional<Matrix> inverse(const Ring& ring, const Matrix& a);

/// Solution module of a linear system over a chain ring (Z/p^k or an
/// explicit field), computed from a Smith normal form.
struct SolutionSpace {
  std::optional<std::vector<Elem>> particular;   // empty when inconsistent
  std::vector<std::vector<Elem>> generators;      // generate the kernel
};

/// Smith normal form U A V = D over a chain ring. Only D and V are kept.
struct SmithForm {
  std::vector<Elem> diagonal;  // length rank
  Matrix column_transform;     // V, cols x cols
  Matrix row_transform;        // U, rows x rows (when requested)
};

SmithForm smith_form(const Ring& ring, Matrix a, bool with_rows = false);

/// All x with A x = b over a chain ring.
SolutionSpace solve_linear(const Ring& ring, const Matrix& a, const std::vector<Elem>& b);

/// Kernel generators of A over a chain ring.
std::vector<std::vector<Elem>> kernel(const Ring& ring, const Matrix& a);

}  // namespace chev
