#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chev/linalg.hpp"
#include "chev/roots.hpp"

namespace chev {

/// Signed matrix unit sign * E_{row, col} in basis indices.
struct MatrixUnit {
  int row = 0;
  int col = 0;
  int sign = 1;
};

/// Sparse vector over Z in the Chevalley basis.
using SparseVector = std::vector<std::pair<int, std::int64_t>>;

/// Chevalley basis {x_alpha; h_i} of the simple Lie algebra of a root system,
/// with integral structure constants and the adjoint matrices.
///
/// Basis order: the roots in RootSystem order, then h_1..h_l. Signs follow
/// the extraspecial-pair convention (N positive on extraspecial pairs) with
/// N_{-a,-b} = -N_{a,b}.
class AdjointAlgebra {
 public:
  explicit AdjointAlgebra(RootSystem sys);

  const RootSystem& system() const { return sys_; }
  int dimension() const { return dim_; }
  int num_roots() const { return static_cast<int>(sys_.size()); }
  int cartan_index(int i) const { return num_roots() + i; }

  /// N_{alpha, beta}; zero when alpha + beta is not a root. Throws for
  /// beta == -alpha.
  int structure_constant(int alpha, int beta) const;

  /// [b_i, b_j] for basis indices.
  SparseVector bracket(int i, int j) const;
  SparseVector bracket(const SparseVector& u, const SparseVector& v) const;

  /// ad x_alpha as an integer matrix (column j = [x_alpha, b_j]).
  const IntMatrix& adjoint_matrix(int alpha) const { return adjoint_[alpha]; }
  /// ad h_i.
  const IntMatrix& cartan_matrix(int i) const { return cartan_ad_[i]; }

  /// Smallest m with X_alpha^m = 0.
  int nilpotency_index(int alpha) const { return static_cast<int>(divided_[alpha].size()); }
  /// X_alpha^k / k! for 0 <= k < nilpotency_index(alpha).
  const IntMatrix& divided_power(int alpha, int k) const { return divided_[alpha][k]; }

  /// X_alpha^2 / 2 as a signed matrix unit, when it is one.
  std::optional<MatrixUnit> divided_square_unit(int alpha) const;

 private:
  RootSystem sys_;
  int dim_;
  std::vector<std::vector<int>> constants_;
  std::vector<IntMatrix> adjoint_;
  std::vector<IntMatrix> cartan_ad_;
  std::vector<std::vector<IntMatrix>> divided_;

  void compute_structure_constants();
  void build_matrices();
};

AdjointAlgebra build_algebra(const RootSystem& sys);

}  // namespace chev
