#include "chev/autos.hpp"

namespace chev {

GraphRealization realize_symmetry(const AdjointAlgebra& alg, const DiagramSymmetry& symmetry) {
  const RootSystem& sys = alg.system();
  const int n = alg.dimension();
  const int nr = alg.num_roots();
  GraphRealization g{symmetry, IntMatrix(n, n), IntMatrix(n, n), std::vector<int>(nr, 0)};
  // Root vectors by height: x_beta = [x_{alpha_i}, x_gamma] / N for the first
  // simple alpha_i with gamma = beta - alpha_i a root of the same sign.
  for (int b = 0; b < nr; ++b) {
    if (sys.height(b) == 1 || sys.height(b) == -1) {
      g.signs[b] = 1;
      continue;
    }
    const bool positive = sys.is_positive(b);
    for (int i = 0; i < sys.rank(); ++i) {
      int a = sys.simple_index(i);
      if (!positive) a = sys.negative(a);
      int gamma = sys.sum_index(b, sys.negative(a));
      if (gamma < 0) continue;
      int da = sys.apply_symmetry(symmetry, a);
      int dg = sys.apply_symmetry(symmetry, gamma);
      int num = g.signs[gamma] * alg.structure_constant(da, dg);
      int den = alg.structure_constant(a, gamma);
      if (num % den != 0 || (num / den != 1 && num / den != -1))
        throw std::domain_error("no signed-permutation intertwiner for this symmetry");
      g.signs[b] = num / den;
      break;
    }
  }
  for (int b = 0; b < nr; ++b) g.lambda(sys.apply_symmetry(symmetry, b), b) = g.signs[b];
  for (int i = 0; i < sys.rank(); ++i)
    g.lambda(alg.cartan_index(symmetry.permutation[i]), alg.cartan_index(i)) = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.lambda_inverse(j, i) = g.lambda(i, j);
  const Ring z = Ring::integers();
  for (int a = 0; a < nr; ++a) {
    IntMatrix lhs = mat_mul(z, mat_mul(z, g.lambda, alg.adjoint_matrix(a)), g.lambda_inverse);
    IntMatrix rhs = mat_scale(z, g.signs[a], alg.adjoint_matrix(sys.apply_symmetry(symmetry, a)));
    if (!(lhs == rhs)) throw std::domain_error("graph realization fails to intertwine the adjoint matrices");
  }
  return g;
}

int intertwiner_dimension(const AdjointAlgebra& alg, const GraphRealization& graph, int prime) {
  const RootSystem& sys = alg.system();
  const Ring f = Ring::zmod(prime);
  const int n = alg.dimension();
  std::vector<int> gens;
  for (int i = 0; i < sys.rank(); ++i) {
    gens.push_back(sys.simple_index(i));
    gens.push_back(sys.negative(sys.simple_index(i)));
  }
  Matrix system(static_cast<int>(gens.size()) * n * n, n * n);
  int row = 0;
  for (int a : gens) {
    const IntMatrix& x = alg.adjoint_matrix(a);
    const IntMatrix& y = alg.adjoint_matrix(sys.apply_symmetry(graph.symmetry, a));
    const int s = graph.signs[a];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j, ++row) {
        for (int k = 0; k < n; ++k) {
          if (x(k, j)) system(row, i * n + k) = f.add(system(row, i * n + k), f.from_int(x(k, j)));
          if (y(i, k)) system(row, k * n + j) = f.sub(system(row, k * n + j), f.from_int(s * y(i, k)));
        }
      }
  }
  return static_cast<int>(kernel(f, system).size());
}

GraphData realize_graph(const AdjointAlgebra& alg, const Ring& ring,
                        const std::vector<GraphAssignment>& assignment) {
  if (assignment.empty()) throw std::invalid_argument("realize_graph: empty assignment");
  IdempotentSystem idem;
  for (const auto& a : assignment) idem.idempotents.push_back(a.idempotent);
  if (!is_idempotent_system(ring, idem))
    throw std::invalid_argument("realize_graph: idempotents are not an orthogonal system summing to 1");
  const auto& syms = alg.system().symmetries();
  const int n = alg.dimension();
  GraphData data{ring, {}, Matrix(n, n), Matrix(n, n)};
  for (const auto& a : assignment) {
    if (a.symmetry < 0 || a.symmetry >= static_cast<int>(syms.size()))
      throw std::invalid_argument("realize_graph: symmetry index out of range");
    GraphComponent c{realize_symmetry(alg, syms[a.symmetry]), a.idempotent};
    data.lambda = mat_add(ring, data.lambda, mat_scale(ring, a.idempotent, map_integers(ring, c.realization.lambda)));
    data.lambda_inverse = mat_add(
        ring, data.lambda_inverse, mat_scale(ring, a.idempotent, map_integers(ring, c.realization.lambda_inverse)));
    data.components.push_back(std::move(c));
  }
  return data;
}

namespace {

// Ring span test for a family of matrices, split over local factors.
bool in_span(const Ring& ring, const std::vector<Matrix>& basis, const Matrix& target) {
  const int entries = target.rows * target.cols;
  auto check_chain = [&](const Ring& r, const std::vector<Matrix>& b, const Matrix& t) {
    Matrix a(entries, static_cast<int>(b.size()));
    for (std::size_t c = 0; c < b.size(); ++c)
      for (int e = 0; e < entries; ++e) a(e, static_cast<int>(c)) = b[c].data[e];
    return solve_linear(r, a, t.data).particular.has_value();
  };
  if (ring.is_chain_ring()) return check_chain(ring, basis, target);
  if (ring.finite()) {
    CrtSplit split = crt_split(ring);
    for (std::size_t j = 0; j < split.factors.size(); ++j) {
      std::vector<Matrix> b;
      for (const auto& m : basis) b.push_back(map_entries(split.projections[j], m));
      if (!check_chain(split.factors[j], b, map_entries(split.projections[j], target))) return false;
    }
    return true;
  }
  // Over Z: necessary conditions modulo a few prime powers.
  for (std::int64_t q : {8, 9, 25, 49, 121}) {
    Ring r = Ring::zmod(q);
    std::vector<Matrix> b;
    for (const auto& m : basis) b.push_back(map_integers(r, m));
    if (!check_chain(r, b, map_integers(r, target))) return false;
  }
  return true;
}

}  // namespace

bool normalizes_lie_algebra(const AdjointAlgebra& alg, const Ring& ring, const Matrix& g,
                            const Matrix& g_inverse) {
  std::vector<Matrix> basis;
  for (int a = 0; a < alg.num_roots(); ++a) basis.push_back(map_integers(ring, alg.adjoint_matrix(a)));
  for (int i = 0; i < alg.system().rank(); ++i) basis.push_back(map_integers(ring, alg.cartan_matrix(i)));
  for (int a = 0; a < alg.num_roots(); ++a) {
    Matrix y = mat_mul(ring, mat_mul(ring, g, basis[a]), g_inverse);
    if (!in_span(ring, basis, y)) return false;
  }
  return true;
}

StandardAutomorphism StandardAutomorphism::ring(RingHom map) {
  if (map.source.finite() && !is_ring_automorphism(map))
    throw std::invalid_argument("ring part is not a ring automorphism");
  StandardAutomorphism a;
  a.kind = Kind::Ring;
  a.ring_map.push_back(std::move(map));
  return a;
}

StandardAutomorphism StandardAutomorphism::inner(const AdjointAlgebra& alg, GroupElement g) {
  if (g.dimension() != alg.dimension()) throw std::invalid_argument("inner: dimension mismatch");
  if (!normalizes_lie_algebra(alg, g.ring(), g.matrix(), g.inverse_matrix()))
    throw NormalizationError("conjugator does not normalize the elementary group");
  StandardAutomorphism a;
  a.kind = Kind::Inner;
  a.conjugator.push_back(std::move(g));
  return a;
}

StandardAutomorphism StandardAutomorphism::graph_of(GraphData data) {
  StandardAutomorphism a;
  a.kind = Kind::Graph;
  a.graph.push_back(std::move(data));
  return a;
}

StandardAutomorphism StandardAutomorphism::central() {
  StandardAutomorphism a;
  a.kind = Kind::Central;
  return a;
}

StandardAutomorphism compose(const StandardAutomorphism& a, const StandardAutomorphism& b) {
  StandardAutomorphism c;
  c.kind = StandardAutomorphism::Kind::Compose;
  for (const auto* part : {&a, &b}) {
    if (part->kind == StandardAutomorphism::Kind::Compose)
      c.parts.insert(c.parts.end(), part->parts.begin(), part->parts.end());
    else
      c.parts.push_back(*part);
  }
  return c;
}

GroupElement apply(const StandardAutomorphism& aut, const GroupElement& elem) {
  using Kind = StandardAutomorphism::Kind;
  switch (aut.kind) {
    case Kind::Central: return elem;
    case Kind::Ring: return map_element(elem, aut.ring_map.front());
    case Kind::Inner: {
      const GroupElement& g = aut.conjugator.front();
      if (g.ring() != elem.ring()) throw std::invalid_argument("apply: ring mismatch");
      GroupElement image = g * elem * g.inverse();
      return GroupElement(elem.ring(), image.matrix(), image.inverse_matrix());
    }
    case Kind::Graph: {
      const GraphData& d = aut.graph.front();
      if (d.ring != elem.ring()) throw std::invalid_argument("apply: ring mismatch");
      const Ring& r = elem.ring();
      Matrix m = mat_mul(r, mat_mul(r, d.lambda, elem.matrix()), d.lambda_inverse);
      Matrix inv = mat_mul(r, mat_mul(r, d.lambda, elem.inverse_matrix()), d.lambda_inverse);
      std::optional<std::vector<WordToken>> word;
      if (elem.word()) {
        word.emplace();
        for (const auto& tok : *elem.word())
          for (const auto& c : d.components) {
            const auto& real = c.realization;
            Elem p = r.mul(r.mul(c.idempotent, r.from_int(real.signs[tok.root])), tok.param);
            // root index of delta(alpha) is where lambda sends the basis line of alpha
            int target = -1;
            for (int i = 0; i < real.lambda.rows && target < 0; ++i)
              if (real.lambda(i, tok.root) != 0) target = i;
            if (p != r.zero()) word->push_back({target, p});
          }
      }
      return GroupElement(r, std::move(m), std::move(inv), std::move(word));
    }
    case Kind::Compose: {
      GroupElement x = elem;
      for (auto it = aut.parts.rbegin(); it != aut.parts.rend(); ++it) x = apply(*it, x);
      return x;
    }
  }
  return elem;
}

bool commutator_witness(const AdjointAlgebra& alg, const Ring& ring, int alpha, Elem t,
                        GroupElement* left, GroupElement* right) {
  const RootSystem& sys = alg.system();
  for (int b = 0; b < alg.num_roots(); ++b) {
    int c = sys.sum_index(alpha, sys.negative(b));  // alpha - beta
    if (c < 0 || c == b || c == sys.negative(b)) continue;
    auto terms = commutator_coefficients(alg, b, c);
    if (terms.size() != 1) continue;
    Elem coeff = ring.from_int(terms[0].coefficient);
    if (!ring.is_unit(coeff)) continue;
    if (left) *left = unipotent(alg, ring, b, ring.mul(t, ring.inverse(coeff)));
    if (right) *right = unipotent(alg, ring, c, ring.one());
    return true;
  }
  return false;
}

}  // namespace chev
