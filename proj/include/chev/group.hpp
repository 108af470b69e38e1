#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "chev/liealg.hpp"
#include "chev/rings.hpp"

namespace chev {

/// One letter x_root(param) of a generator word.
struct WordToken {
  int root = 0;
  Elem param = 0;
  bool operator==(const WordToken&) const = default;
};

/// An element of the adjoint elementary group over a ring, as an N x N matrix
/// with its inverse stored alongside.
class GroupElement {
 public:
  GroupElement(Ring ring, Matrix matrix, Matrix inverse,
               std::optional<std::vector<WordToken>> word = std::nullopt);

  static GroupElement identity(const Ring& ring, int n);
  /// Builds an element from a matrix alone; throws std::domain_error when the
  /// matrix is not invertible over the ring.
  static GroupElement from_matrix(const Ring& ring, Matrix matrix);

  const Ring& ring() const { return ring_; }
  const Matrix& matrix() const { return matrix_; }
  const Matrix& inverse_matrix() const { return inverse_; }
  const std::optional<std::vector<WordToken>>& word() const { return word_; }
  int dimension() const { return matrix_.rows; }

  GroupElement inverse() const;
  GroupElement operator*(const GroupElement& other) const;
  bool operator==(const GroupElement& other) const {
    return ring_ == other.ring_ && matrix_ == other.matrix_;
  }
  bool is_identity() const { return chev::is_identity(ring_, matrix_); }

 private:
  Ring ring_;
  Matrix matrix_;
  Matrix inverse_;
  std::optional<std::vector<WordToken>> word_;
};

/// Homomorphism from the root lattice to the units of a ring, given on the
/// simple roots.
struct Character {
  std::vector<Elem> values;

  Elem evaluate(const Ring& ring, const Root& beta) const;
  /// chi_{alpha,u}: lambda -> u^{<lambda, alpha>}.
  static Character for_coroot(const RootSystem& sys, const Ring& ring, int alpha, Elem u);
};

GroupElement unipotent(const AdjointAlgebra& alg, const Ring& ring, int alpha, Elem t);
GroupElement weyl(const AdjointAlgebra& alg, const Ring& ring, int alpha, Elem t);
GroupElement torus(const AdjointAlgebra& alg, const Ring& ring, const Character& chi);
/// h_alpha(u) = torus(chi_{alpha,u}).
GroupElement torus_coroot(const AdjointAlgebra& alg, const Ring& ring, int alpha, Elem u);
GroupElement commutator(const GroupElement& a, const GroupElement& b);

/// Product of the letters of a word.
GroupElement evaluate_word(const AdjointAlgebra& alg, const Ring& ring,
                           const std::vector<WordToken>& word);

/// Image under the residue map R -> R/I.
GroupElement reduce(const GroupElement& elem, const IdealHandle& ideal);
/// Image under an arbitrary ring homomorphism.
GroupElement map_element(const GroupElement& elem, const RingHom& hom);

/// Membership in the congruence subgroup N_I = ker(R -> R/I).
bool in_congruence_kernel(const GroupElement& elem, const IdealHandle& ideal);

/// Surrogate for C_I: the reduction commutes with x_alpha(1) and x_alpha(t)
/// for the additive generators t of R/I.
bool in_congruence_center(const AdjointAlgebra& alg, const GroupElement& elem,
                          const IdealHandle& ideal);

/// One factor x_root(coefficient * t^i u^j) of a Chevalley commutator.
struct CommutatorTerm {
  int i = 1;
  int j = 1;
  int root = 0;
  int coefficient = 0;
};

/// Coefficients of [x_alpha(t), x_beta(u)] = prod x_{i alpha + j beta}(C_ij t^i u^j),
/// product taken in the listed order, extracted by matching over Z.
/// Empty when the root subgroups commute. Throws for beta == -alpha.
std::vector<CommutatorTerm> commutator_coefficients(const AdjointAlgebra& alg, int alpha, int beta);

/// Expands a commutator formula at parameters (t, u) as a group element.
GroupElement commutator_product(const AdjointAlgebra& alg, const Ring& ring,
                                const std::vector<CommutatorTerm>& terms, Elem t, Elem u);

/// Sign c with w_alpha(1) x_beta(u) w_alpha(1)^-1 = x_{s_alpha(beta)}(c u),
/// determined over Z; nullopt when the conjugate is not of that form.
std::optional<int> weyl_sign(const AdjointAlgebra& alg, int alpha, int beta);

/// If elem == x_alpha(s) for some s in a finite ring, returns s.
std::optional<Elem> match_unipotent(const AdjointAlgebra& alg, const GroupElement& elem, int alpha);

}  // namespace chev
