#include "chev/group.hpp"

#include <stdexcept>

namespace chev {

GroupElement::GroupElement(Ring ring, Matrix matrix, Matrix inverse,
                           std::optional<std::vector<WordToken>> word)
    : ring_(std::move(ring)), matrix_(std::move(matrix)), inverse_(std::move(inverse)),
      word_(std::move(word)) {
  if (matrix_.rows != matrix_.cols || inverse_.rows != matrix_.rows || inverse_.cols != matrix_.cols)
    throw std::invalid_argument("GroupElement: square matrices of equal size expected");
}

GroupElement GroupElement::identity(const Ring& ring, int n) {
  Matrix e = identity_matrix(ring, n);
  return GroupElement(ring, e, e, std::vector<WordToken>{});
}

GroupElement GroupElement::from_matrix(const Ring& ring, Matrix matrix) {
  auto inv = chev::inverse(ring, matrix);
  if (!inv) throw std::domain_error("matrix is not invertible over " + ring.descriptor());
  return GroupElement(ring, std::move(matrix), std::move(*inv));
}

GroupElement GroupElement::inverse() const {
  std::optional<std::vector<WordToken>> w;
  if (word_) {
    w.emplace();
    for (auto it = word_->rbegin(); it != word_->rend(); ++it)
      w->push_back({it->root, ring_.neg(it->param)});
  }
  return GroupElement(ring_, inverse_, matrix_, std::move(w));
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (ring_ != other.ring_ || dimension() != other.dimension())
    throw std::invalid_argument("GroupElement: ring or dimension mismatch");
  std::optional<std::vector<WordToken>> w;
  if (word_ && other.word_) {
    w = *word_;
    w->insert(w->end(), other.word_->begin(), other.word_->end());
  }
  return GroupElement(ring_, mat_mul(ring_, matrix_, other.matrix_),
                      mat_mul(ring_, other.inverse_, inverse_), std::move(w));
}

Elem Character::evaluate(const Ring& ring, const Root& beta) const {
  Elem v = ring.one();
  for (std::size_t i = 0; i < values.size(); ++i) {
    int c = beta[i];
    Elem base = c >= 0 ? values[i] : ring.inverse(values[i]);
    v = ring.mul(v, ring.pow(base, c >= 0 ? c : -c));
  }
  return v;
}

Character Character::for_coroot(const RootSystem& sys, const Ring& ring, int alpha, Elem u) {
  Character chi;
  for (int i = 0; i < sys.rank(); ++i) {
    int e = sys.pairing(sys.simple_index(i), alpha);
    Elem base = e >= 0 ? u : ring.inverse(u);
    chi.values.push_back(ring.pow(base, e >= 0 ? e : -e));
  }
  return chi;
}

namespace {

Matrix unipotent_matrix(const AdjointAlgebra& alg, const Ring& ring, int alpha, Elem t) {
  const int n = alg.dimension();
  Matrix m = identity_matrix(ring, n);
  Elem tk = ring.one();
  for (int k = 1; k < alg.nilpotency_index(alpha); ++k) {
    tk = ring.mul(tk, t);
    if (tk == ring.zero()) break;
    const IntMatrix& d = alg.divided_power(alpha, k);
    for (std::size_t e = 0; e < d.data.size(); ++e)
      if (d.data[e] != 0) m.data[e] = ring.add(m.data[e], ring.mul(tk, ring.from_int(d.data[e])));
  }
  return m;
}

}  // namespace

GroupElement unipotent(const AdjointAlgebra& alg, const Ring& ring, int alpha, Elem t) {
  if (!ring.is_valid(t)) throw std::invalid_argument("unipotent: parameter outside the ring");
  return GroupElement(ring, unipotent_matrix(alg, ring, alpha, t),
                      unipotent_matrix(alg, ring, alpha, ring.neg(t)),
                      std::vector<WordToken>{{alpha, t}});
}

GroupElement weyl(const AdjointAlgebra& alg, const Ring& ring, int alpha, Elem t) {
  if (!ring.is_unit(t)) throw std::domain_error("weyl: parameter must be invertible");
  const int neg = alg.system().negative(alpha);
  return unipotent(alg, ring, alpha, t) * unipotent(alg, ring, neg, ring.neg(ring.inverse(t))) *
         unipotent(alg, ring, alpha, t);
}

GroupElement torus(const AdjointAlgebra& alg, const Ring& ring, const Character& chi) {
  const RootSystem& sys = alg.system();
  if (static_cast<int>(chi.values.size()) != sys.rank())
    throw std::invalid_argument("torus: one character value per simple root expected");
  for (Elem v : chi.values)
    if (!ring.is_unit(v)) throw std::domain_error("torus: character values must be units");
  const int n = alg.dimension();
  Matrix d = identity_matrix(ring, n), inv = identity_matrix(ring, n);
  for (int b = 0; b < alg.num_roots(); ++b) {
    d(b, b) = chi.evaluate(ring, sys.root(b));
    inv(b, b) = ring.inverse(d(b, b));
  }
  return GroupElement(ring, std::move(d), std::move(inv));
}

GroupElement torus_coroot(const AdjointAlgebra& alg, const Ring& ring, int alpha, Elem u) {
  return torus(alg, ring, Character::for_coroot(alg.system(), ring, alpha, u));
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return a * b * a.inverse() * b.inverse();
}

GroupElement evaluate_word(const AdjointAlgebra& alg, const Ring& ring,
                           const std::vector<WordToken>& word) {
  GroupElement g = GroupElement::identity(ring, alg.dimension());
  for (const auto& tok : word) g = g * unipotent(alg, ring, tok.root, tok.param);
  return g;
}

GroupElement map_element(const GroupElement& elem, const RingHom& hom) {
  if (hom.source != elem.ring()) throw std::invalid_argument("map_element: ring mismatch");
  std::optional<std::vector<WordToken>> w;
  if (elem.word()) {
    w.emplace();
    for (const auto& tok : *elem.word()) w->push_back({tok.root, hom(tok.param)});
  }
  return GroupElement(hom.target, map_entries(hom, elem.matrix()),
                      map_entries(hom, elem.inverse_matrix()), std::move(w));
}

GroupElement reduce(const GroupElement& elem, const IdealHandle& ideal) {
  return map_element(elem, residue_map(elem.ring(), ideal));
}

bool in_congruence_kernel(const GroupElement& elem, const IdealHandle& ideal) {
  return reduce(elem, ideal).is_identity();
}

bool in_congruence_center(const AdjointAlgebra& alg, const GroupElement& elem,
                          const IdealHandle& ideal) {
  GroupElement r = reduce(elem, ideal);
  const Ring& q = r.ring();
  std::vector<Elem> params = q.additive_generators();
  for (int a = 0; a < alg.num_roots(); ++a)
    for (Elem t : params) {
      GroupElement x = unipotent(alg, q, a, t);
      if (!((r * x).matrix() == (x * r).matrix())) return false;
    }
  return true;
}

std::vector<CommutatorTerm> commutator_coefficients(const AdjointAlgebra& alg, int alpha, int beta) {
  const RootSystem& sys = alg.system();
  if (beta == sys.negative(alpha) || beta == alpha)
    throw std::invalid_argument("commutator_coefficients: beta must differ from +-alpha");
  std::vector<CommutatorTerm> terms;
  for (int total = 2; total <= 5; ++total)
    for (int i = 1; i < total; ++i) {
      int j = total - i;
      Root r(sys.rank());
      for (int k = 0; k < sys.rank(); ++k) r[k] = i * sys.root(alpha)[k] + j * sys.root(beta)[k];
      int idx = sys.index_of(r);
      if (idx >= 0) terms.push_back({i, j, idx, 0});
    }
  if (terms.empty()) return terms;
  const Ring z = Ring::integers();
  GroupElement rest = commutator(unipotent(alg, z, alpha, 1), unipotent(alg, z, beta, 1));
  for (auto& term : terms) {
    int h = -1, pair = 0;
    for (int i = 0; i < sys.rank() && h < 0; ++i) {
      pair = sys.pairing(term.root, sys.simple_index(i));
      if (pair != 0) h = alg.cartan_index(i);
    }
    std::int64_t entry = rest.matrix()(term.root, h);
    if (entry % pair != 0) throw std::logic_error("commutator coefficient is not integral");
    term.coefficient = static_cast<int>(entry / -pair);
    rest = unipotent(alg, z, term.root, -term.coefficient) * rest;
  }
  if (!rest.is_identity()) throw std::logic_error("commutator is not a product of root elements");
  for (auto [t, u] : {std::pair<Elem, Elem>{2, 3}, {-1, 2}, {3, -2}}) {
    GroupElement lhs = commutator(unipotent(alg, z, alpha, t), unipotent(alg, z, beta, u));
    if (!(lhs.matrix() == commutator_product(alg, z, terms, t, u).matrix()))
      throw std::logic_error("commutator coefficients do not reproduce the commutator");
  }
  return terms;
}

GroupElement commutator_product(const AdjointAlgebra& alg, const Ring& ring,
                                const std::vector<CommutatorTerm>& terms, Elem t, Elem u) {
  GroupElement g = GroupElement::identity(ring, alg.dimension());
  for (const auto& term : terms) {
    Elem p = ring.mul(ring.from_int(term.coefficient), ring.mul(ring.pow(t, term.i), ring.pow(u, term.j)));
    g = g * unipotent(alg, ring, term.root, p);
  }
  return g;
}

std::optional<int> weyl_sign(const AdjointAlgebra& alg, int alpha, int beta) {
  const Ring z = Ring::integers();
  GroupElement w = weyl(alg, z, alpha, 1);
  GroupElement c = w * unipotent(alg, z, beta, 1) * w.inverse();
  int target = alg.system().reflect(alpha, beta);
  for (int s : {1, -1})
    if (c.matrix() == unipotent(alg, z, target, s).matrix()) return s;
  return std::nullopt;
}

std::optional<Elem> match_unipotent(const AdjointAlgebra& alg, const GroupElement& elem, int alpha) {
  const Ring& ring = elem.ring();
  const IntMatrix& x = alg.adjoint_matrix(alpha);
  // An entry where x_alpha(s) reads off +-s directly.
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      if (x(i, j) != 1 && x(i, j) != -1) continue;
      bool linear = true;
      for (int k = 2; k < alg.nilpotency_index(alpha) && linear; ++k)
        if (alg.divided_power(alpha, k)(i, j) != 0) linear = false;
      if (!linear || i == j) continue;
      Elem s = x(i, j) == 1 ? elem.matrix()(i, j) : ring.neg(elem.matrix()(i, j));
      if (unipotent(alg, ring, alpha, s).matrix() == elem.matrix()) return s;
      return std::nullopt;
    }
  if (!ring.finite()) return std::nullopt;
  for (Elem s = 0; s < ring.size(); ++s)
    if (unipotent(alg, ring, alpha, s).matrix() == elem.matrix()) return s;
  return std::nullopt;
}

}  // namespace chev
