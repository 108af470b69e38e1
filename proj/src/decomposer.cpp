#include "chev/decomposer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "chev/json_io.hpp"

namespace chev {

using nlohmann::json;

DecompositionError::DecompositionError(std::string stage, const std::string& message, json witness)
    : std::runtime_error(message), stage_(std::move(stage)), witness_(std::move(witness)) {}

json DecompositionError::to_json() const {
  return json{{"status", "refused"}, {"stage", stage_}, {"message", what()}, {"witness", witness_}};
}

std::vector<Elem> spanning_parameters(const Ring& ring) {
  std::vector<Elem> out{ring.one()};
  for (Elem g : ring.additive_generators())
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

std::uint64_t draw_below(std::uint64_t word, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(word) * bound) >> 64);
}

namespace {

json root_json(const AdjointAlgebra& alg, int alpha) { return json(alg.system().root(alpha)); }

json generator_witness(const AdjointAlgebra& alg, const Ring& ring, int alpha, Elem t) {
  return json{{"root", root_json(alg, alpha)}, {"param", elem_to_json(ring, t)}};
}

}  // namespace

ImageTable::ImageTable(const AdjointAlgebra& alg, const AutomorphismSpec& spec) : one_(spec.ring.one()) {
  const Ring& ring = spec.ring;
  const auto gens = ring.additive_generators();
  std::map<std::pair<int, Elem>, const GroupElement*> supplied;
  for (const auto& e : spec.images) supplied[{e.root, e.param}] = &e.image;
  for (int a = 0; a < alg.num_roots(); ++a) {
    std::vector<const GroupElement*> step;
    for (Elem g : gens) {
      auto it = supplied.find({a, g});
      if (it == supplied.end())
        throw DecompositionError("precheck", "missing image of a generator", generator_witness(alg, ring, a, g));
      step.push_back(it->second);
    }
    std::vector<std::optional<GroupElement>> row(ring.size());
    row[0] = GroupElement::identity(ring, alg.dimension());
    std::deque<Elem> queue{0};
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Elem y = ring.add(x, gens[j]);
        GroupElement v = *row[x] * *step[j];
        if (!row[y]) {
          row[y] = GroupElement(ring, v.matrix(), v.inverse_matrix());
          queue.push_back(y);
        } else if (!(row[y]->matrix() == v.matrix())) {
          throw DecompositionError("precheck", "relation x(s)x(t) = x(s+t) fails",
                                   json{{"relation", "additivity"}, {"root", root_json(alg, a)},
                                        {"param", elem_to_json(ring, y)}});
        }
      }
    }
    std::vector<GroupElement> full;
    for (auto& v : row) full.push_back(std::move(*v));
    table_.push_back(std::move(full));
  }
  for (const auto& e : spec.images)
    if (!(table_[e.root][e.param].matrix() == e.image.matrix()))
      throw DecompositionError("precheck", "supplied image disagrees with the additive extension",
                               json{{"relation", "additivity"}, {"root", root_json(alg, e.root)},
                                    {"param", elem_to_json(ring, e.param)}});
}

std::vector<GroupElement> ImageTable::unit_family() const {
  std::vector<GroupElement> out;
  for (const auto& row : table_) out.push_back(row[one_]);
  return out;
}

ImageTable precheck(const AdjointAlgebra& alg, const AutomorphismSpec& spec) {
  const Ring& ring = spec.ring;
  const RootSystem& sys = alg.system();
  if (!ring.finite()) throw DecompositionError("precheck", "the decomposer needs a finite ring");
  if (spec.system != sys.name())
    throw DecompositionError("precheck", "spec system does not match the algebra", json{{"system", spec.system}});
  const int n = alg.dimension();
  for (const auto& e : spec.images) {
    if (e.root < 0 || e.root >= alg.num_roots() || !ring.is_valid(e.param))
      throw DecompositionError("precheck", "image token outside the root system or ring");
    if (e.image.ring() != ring || e.image.dimension() != n)
      throw DecompositionError("precheck", "image has the wrong ring or size",
                               generator_witness(alg, ring, e.root, e.param));
    if (!is_identity(ring, mat_mul(ring, e.image.matrix(), e.image.inverse_matrix())))
      throw DecompositionError("precheck", "image is not invertible",
                               json{{"relation", "invertibility"}, {"root", root_json(alg, e.root)},
                                    {"param", elem_to_json(ring, e.param)}});
  }
  ImageTable table(alg, spec);

  for (int a = 0; a < alg.num_roots(); ++a)
    for (Elem t = 1; t < ring.size(); ++t)
      if (table.at(a, t).is_identity())
        throw DecompositionError("precheck", "parameter map is not injective",
                                 json{{"relation", "injectivity"}, {"root", root_json(alg, a)},
                                      {"param", elem_to_json(ring, t)}});

  const auto params = spanning_parameters(ring);
  for (int a = 0; a < alg.num_roots(); ++a)
    for (int b = 0; b < alg.num_roots(); ++b) {
      if (b == a || b == sys.negative(a)) continue;
      auto terms = commutator_coefficients(alg, a, b);
      for (Elem s : params)
        for (Elem t : params) {
          GroupElement lhs = commutator(table.at(a, s), table.at(b, t));
          GroupElement rhs = GroupElement::identity(ring, n);
          for (const auto& term : terms) {
            Elem p = ring.mul(ring.from_int(term.coefficient), ring.mul(ring.pow(s, term.i), ring.pow(t, term.j)));
            rhs = rhs * table.at(term.root, p);
          }
          if (!(lhs.matrix() == rhs.matrix()))
            throw DecompositionError("precheck", "commutator formula fails on the images",
                                     json{{"relation", "commutator"}, {"alpha", root_json(alg, a)},
                                          {"beta", root_json(alg, b)}, {"s", elem_to_json(ring, s)},
                                          {"t", elem_to_json(ring, t)}});
        }
    }

  for (int a = 0; a < alg.num_roots(); ++a) {
    const int na = sys.negative(a);
    GroupElement w = table.at(a, ring.one()) * table.at(na, ring.neg(ring.one())) * table.at(a, ring.one());
    GroupElement w_inv = w.inverse();
    for (int b = 0; b < alg.num_roots(); ++b) {
      auto c = weyl_sign(alg, a, b);
      if (!c) continue;
      GroupElement lhs = w * table.at(b, ring.one()) * w_inv;
      if (!(lhs.matrix() == table.at(sys.reflect(a, b), ring.from_int(*c)).matrix()))
        throw DecompositionError("precheck", "Weyl conjugation fails on the images",
                                 json{{"relation", "weyl"}, {"alpha", root_json(alg, a)},
                                      {"beta", root_json(alg, b)}});
    }
  }
  return table;
}

std::vector<FactorSpec> split_local(const AdjointAlgebra& alg, const AutomorphismSpec& spec,
                                    const ImageTable& table) {
  (void)alg;
  CrtSplit split = crt_split(spec.ring);
  std::vector<FactorSpec> out;
  auto family = table.unit_family();
  for (std::size_t j = 0; j < split.factors.size(); ++j) {
    FactorSpec f{split.factors[j], split.projections[j], split.idempotents.idempotents[j], {}};
    for (const auto& y : family) f.family.push_back(map_element(y, f.projection));
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

Matrix column_vector(const std::vector<Elem>& v) {
  Matrix m(static_cast<int>(v.size()), 1);
  m.data = v;
  return m;
}

std::vector<Elem> times(const Ring& r, const Matrix& a, const std::vector<Elem>& v) {
  return mat_mul(r, a, column_vector(v)).data;
}

// Candidate elements of a solution module: generators, pairwise sums, then
// seeded random combinations.
std::vector<std::vector<Elem>> candidates(const Ring& r, const std::vector<std::vector<Elem>>& gens) {
  std::vector<std::vector<Elem>> out = gens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      std::vector<Elem> s(gens[i].size());
      for (std::size_t e = 0; e < s.size(); ++e) s[e] = r.add(gens[i][e], gens[j][e]);
      out.push_back(std::move(s));
    }
  if (gens.size() > 1) {
    std::mt19937_64 rng(0x5eed);
    for (int k = 0; k < 64; ++k) {
      std::vector<Elem> s(gens[0].size(), 0);
      for (const auto& g : gens) {
        Elem c = static_cast<Elem>(draw_below(rng(), static_cast<std::uint64_t>(r.size())));
        for (std::size_t e = 0; e < s.size(); ++e) s[e] = r.add(s[e], r.mul(c, g[e]));
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

bool intertwines(const Ring& r, const AdjointAlgebra& alg, const Matrix& m,
                 const std::vector<GroupElement>& family) {
  for (int a = 0; a < alg.num_roots(); ++a) {
    Matrix x = unipotent(alg, r, a, r.one()).matrix();
    if (!(mat_mul(r, m, x) == mat_mul(r, family[a].matrix(), m))) return false;
  }
  return true;
}

// Builds M from M e_theta = v by moving down root strings with unit
// structure constants: M x_beta = X'_gamma M x_delta / N_{gamma,delta}.
std::optional<Matrix> extend_from_highest(const AdjointAlgebra& alg, const Ring& r, const std::vector<Matrix>& x,
                                          const std::vector<Elem>& v) {
  const RootSystem& sys = alg.system();
  const int n = alg.dimension(), nr = alg.num_roots();
  std::vector<std::optional<std::vector<Elem>>> col(n);
  col[sys.highest_root()] = v;
  for (bool progress = true; progress;) {
    progress = false;
    for (int b = 0; b < nr; ++b) {
      if (col[b]) continue;
      for (int d = 0; d < nr && !col[b]; ++d) {
        if (!col[d]) continue;
        int g = sys.sum_index(b, sys.negative(d));
        if (g < 0 || g == sys.negative(d)) continue;
        Elem c = r.from_int(alg.structure_constant(g, d));
        if (!r.is_unit(c)) continue;
        auto w = times(r, x[g], *col[d]);
        Elem ci = r.inverse(c);
        for (auto& e : w) e = r.mul(e, ci);
        col[b] = std::move(w);
        progress = true;
      }
    }
  }
  for (int i = 0; i < sys.rank(); ++i) {
    int a = sys.simple_index(i);
    if (!col[sys.negative(a)]) return std::nullopt;
    col[alg.cartan_index(i)] = times(r, x[a], *col[sys.negative(a)]);
  }
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) {
    if (!col[j]) return std::nullopt;
    for (int i = 0; i < n; ++i) m(i, j) = (*col[j])[i];
  }
  return m;
}

std::optional<Matrix> highest_weight_intertwiner(const AdjointAlgebra& alg, const Ring& r,
                                                 const std::vector<Matrix>& x,
                                                 const std::vector<GroupElement>& family) {
  const RootSystem& sys = alg.system();
  const int n = alg.dimension();
  const int theta = sys.highest_root();
  Matrix a(2 * sys.rank() * n, n);
  int row = 0;
  for (int i = 0; i < sys.rank(); ++i) {
    int s = sys.simple_index(i);
    const Matrix& xp = x[s];
    const Matrix& xm = x[sys.negative(s)];
    Matrix h = mat_sub(r, mat_mul(r, xp, xm), mat_mul(r, xm, xp));
    Elem c = r.from_int(sys.pairing(theta, s));
    for (int k = 0; k < n; ++k) h(k, k) = r.sub(h(k, k), c);
    for (const Matrix* blk : {&xp, static_cast<const Matrix*>(&h)})
      for (int p = 0; p < n; ++p, ++row)
        for (int q = 0; q < n; ++q) a(row, q) = (*blk)(p, q);
  }
  for (const auto& v : candidates(r, kernel(r, a))) {
    auto m = extend_from_highest(alg, r, x, v);
    if (!m) continue;
    bool ok = true;
    for (int b = 0; b < alg.num_roots() && ok; ++b)
      ok = mat_mul(r, *m, map_integers(r, alg.adjoint_matrix(b))) == mat_mul(r, x[b], *m);
    if (ok && inverse(r, *m) && intertwines(r, alg, *m, family)) return m;
  }
  return std::nullopt;
}

// Solves M x_alpha(1) = y_alpha M directly as a linear system in the N^2
// entries of M.
std::optional<Matrix> linear_intertwiner(const AdjointAlgebra& alg, const Ring& r,
                                         const std::vector<GroupElement>& family) {
  const int n = alg.dimension();
  Matrix sys(alg.num_roots() * n * n, n * n);
  int row = 0;
  for (int a = 0; a < alg.num_roots(); ++a) {
    Matrix x = unipotent(alg, r, a, r.one()).matrix();
    const Matrix& y = family[a].matrix();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j, ++row)
        for (int k = 0; k < n; ++k) {
          if (x(k, j)) sys(row, i * n + k) = r.add(sys(row, i * n + k), x(k, j));
          if (y(i, k)) sys(row, k * n + j) = r.sub(sys(row, k * n + j), y(i, k));
        }
  }
  for (const auto& v : candidates(r, kernel(r, sys))) {
    Matrix m(n, n);
    m.data = v;
    auto inv = inverse(r, m);
    if (inv && normalizes_lie_algebra(alg, r, m, *inv)) return m;
  }
  return std::nullopt;
}

using Subspace = std::vector<std::vector<Elem>>;

Subspace row_reduce(const Ring& k, Subspace rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    Elem inv = k.inverse(rows[rank][c]);
    for (auto& e : rows[rank]) e = k.mul(e, inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      Elem f = rows[i][c];
      for (int e = 0; e < cols; ++e) rows[i][e] = k.sub(rows[i][e], k.mul(f, rows[rank][e]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

Subspace image_of(const Ring& k, const Matrix& g, const Subspace& s) {
  Subspace out;
  for (const auto& v : s) out.push_back(times(k, g, v));
  return row_reduce(k, std::move(out));
}

// Maximal parabolic subalgebra for node i: Cartan, positive roots, and the
// negative roots without alpha_i.
Subspace parabolic(const AdjointAlgebra& alg, int node) {
  const RootSystem& sys = alg.system();
  const int n = alg.dimension();
  Subspace s;
  for (int b = 0; b < n; ++b) {
    bool in = b >= alg.num_roots() || sys.is_positive(b) || sys.root(b)[node] == 0;
    if (!in) continue;
    std::vector<Elem> e(n, 0);
    e[b] = 1;
    s.push_back(std::move(e));
  }
  return s;
}

// Index of the diagram symmetry delta with M p_i conjugate to p_delta(i)
// under E over the residue field.
int detect_symmetry(const AdjointAlgebra& alg, const Ring& r, const Matrix& m) {
  const RootSystem& sys = alg.system();
  const auto& syms = sys.symmetries();
  if (syms.size() == 1) return 0;
  RingHom res = residue_map(r, maximal_ideals(r).front());
  const Ring& k = res.target;
  Matrix mk = map_entries(res, m);
  std::vector<Matrix> gens;
  for (int i = 0; i < sys.rank(); ++i)
    for (int a : {sys.simple_index(i), sys.negative(sys.simple_index(i))})
      for (Elem t : k.additive_generators()) gens.push_back(unipotent(alg, k, a, t).matrix());
  std::map<int, std::set<Subspace>> orbits;
  auto orbit = [&](int j) -> const std::set<Subspace>& {
    auto it = orbits.find(j);
    if (it != orbits.end()) return it->second;
    std::set<Subspace> seen{row_reduce(k, parabolic(alg, j))};
    std::deque<Subspace> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
      Subspace s = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        Subspace t = image_of(k, g, s);
        if (seen.insert(t).second) queue.push_back(std::move(t));
      }
    }
    return orbits.emplace(j, std::move(seen)).first->second;
  };
  std::vector<int> sigma(sys.rank(), -1);
  for (int i = 0; i < sys.rank(); ++i) {
    Subspace target = image_of(k, mk, parabolic(alg, i));
    for (int j = 0; j < sys.rank() && sigma[i] < 0; ++j) {
      bool possible = false;
      for (const auto& s : syms) possible = possible || s.permutation[i] == j;
      if (possible && orbit(j).count(target)) sigma[i] = j;
    }
    if (sigma[i] < 0)
      throw DecompositionError("graph", "image of a maximal parabolic is not conjugate to a standard one",
                               json{{"node", i + 1}, {"ring", r.descriptor()}});
  }
  for (std::size_t s = 0; s < syms.size(); ++s)
    if (syms[s].permutation == sigma) return static_cast<int>(s);
  throw DecompositionError("graph", "parabolic matching is not a diagram symmetry", json{{"matching", sigma}});
}

}  // namespace

FactorMatch match_graph_and_conjugator(const AdjointAlgebra& alg, const FactorSpec& factor) {
  const Ring& r = factor.ring;
  std::optional<Matrix> m;
  std::string method;
  if (auto x = recover_all(alg, factor.family)) {
    m = highest_weight_intertwiner(alg, r, *x, factor.family);
    std::set<std::string> regimes;
    for (int a = 0; a < alg.num_roots(); ++a) regimes.insert(regime_name(*select_regime(alg.system(), r, a)));
    for (const auto& g : regimes) method += g + "+";
    method += "highest-weight";
  }
  if (!m) {
    m = linear_intertwiner(alg, r, factor.family);
    method = "group-linear";
  }
  if (!m)
    throw DecompositionError("conjugator", "no invertible intertwiner over the local factor",
                             json{{"ring", r.descriptor()}});
  int s = detect_symmetry(alg, r, *m);
  GraphRealization real = realize_symmetry(alg, alg.system().symmetries()[s]);
  Matrix inv = *inverse(r, *m);
  Matrix g = mat_mul(r, map_integers(r, real.lambda_inverse), *m);
  Matrix g_inv = mat_mul(r, inv, map_integers(r, real.lambda));
  return FactorMatch{s, *m, std::move(g), std::move(g_inv), method};
}

RingHom extract_ring_map(const AdjointAlgebra& alg, const AutomorphismSpec& spec, const ImageTable& table,
                         const GraphData& graph, const GroupElement& conjugator) {
  const Ring& ring = spec.ring;
  Matrix c = mat_mul(ring, graph.lambda, conjugator.matrix());
  Matrix c_inv = mat_mul(ring, conjugator.inverse_matrix(), graph.lambda_inverse);
  auto residual = [&](const GroupElement& y) {
    return GroupElement(ring, mat_mul(ring, mat_mul(ring, c_inv, y.matrix()), c),
                        mat_mul(ring, mat_mul(ring, c_inv, y.inverse_matrix()), c));
  };
  for (int a = 0; a < alg.num_roots(); ++a)
    if (!(residual(table.at(a, ring.one())).matrix() == unipotent(alg, ring, a, ring.one()).matrix()))
      throw DecompositionError("conjugator", "residual automorphism moves x_alpha(1)",
                               json{{"root", root_json(alg, a)}});
  std::vector<Elem> images;
  for (Elem t : ring.additive_generators()) {
    std::optional<Elem> common;
    for (int a = 0; a < alg.num_roots(); ++a) {
      auto s = match_unipotent(alg, residual(table.at(a, t)), a);
      if (!s || (common && *common != *s))
        throw DecompositionError("ring_map", "residual image is not x_alpha(s) for a common s",
                                 generator_witness(alg, ring, a, t));
      common = s;
    }
    images.push_back(*common);
  }
  RingHom rho{ring, ring, {}};
  try {
    rho = extend_additively(ring, images);
  } catch (const std::invalid_argument& e) {
    throw DecompositionError("ring_map", e.what());
  }
  if (!is_ring_automorphism(rho))
    throw DecompositionError("ring_map", "parameter map is not a ring automorphism");
  return rho;
}

std::vector<KernelTransport> kernel_transport(const AdjointAlgebra& alg, const Ring& ring,
                                              const ImageTable& table) {
  auto maxes = maximal_ideals(ring);
  std::vector<RingHom> residues;
  for (const auto& j : maxes) residues.push_back(residue_map(ring, j));
  std::vector<KernelTransport> out;
  for (const auto& i : maxes) {
    std::vector<Elem> members;
    for (Elem a = 1; a < ring.size(); ++a)
      if (ideal_contains(ring, i, a)) members.push_back(a);
    std::optional<KernelTransport> found;
    for (std::size_t j = 0; j < maxes.size() && !found; ++j) {
      bool ok = true;
      for (int a = 0; a < alg.num_roots() && ok; ++a)
        for (Elem t : members)
          if (!map_element(table.at(a, t), residues[j]).is_identity()) {
            ok = false;
            break;
          }
      if (ok)
        found = KernelTransport{i, members.empty() ? i : maxes[j],
                                static_cast<int>(members.size()) * alg.num_roots()};
    }
    if (!found)
      throw DecompositionError("kernel_transport", "no maximal ideal J with phi(N_I) inside N_J",
                               json{{"ideal", i.generators}});
    out.push_back(*found);
  }
  return out;
}

StandardAutomorphism StandardCertificate::automorphism(const AdjointAlgebra& alg) const {
  return compose(StandardAutomorphism::graph_of(graph),
                 compose(StandardAutomorphism::inner(alg, conjugator), StandardAutomorphism::ring(ring_map)));
}

StandardCertificate certify(const AdjointAlgebra& alg, const AutomorphismSpec& spec) {
  ImageTable table = precheck(alg, spec);
  const Ring& ring = spec.ring;
  auto factors = split_local(alg, spec, table);
  CrtSplit split = crt_split(ring);
  const int n = alg.dimension();

  std::vector<FactorMatch> matches;
  for (const auto& f : factors) matches.push_back(match_graph_and_conjugator(alg, f));

  Matrix g(n, n), g_inv(n, n);
  std::vector<Elem> parts(matches.size());
  for (int e = 0; e < n * n; ++e) {
    for (std::size_t j = 0; j < matches.size(); ++j) parts[j] = matches[j].conjugator.data[e];
    g.data[e] = split.from_factors(parts);
    for (std::size_t j = 0; j < matches.size(); ++j) parts[j] = matches[j].conjugator_inverse.data[e];
    g_inv.data[e] = split.from_factors(parts);
  }
  std::vector<GraphAssignment> assignment;
  std::vector<std::string> methods;
  for (std::size_t j = 0; j < matches.size(); ++j) {
    assignment.push_back({matches[j].symmetry, factors[j].idempotent});
    methods.push_back(factors[j].ring.descriptor() + ": " + matches[j].method);
  }
  GraphData graph = realize_graph(alg, ring, assignment);
  GroupElement conjugator(ring, std::move(g), std::move(g_inv));
  RingHom rho = extract_ring_map(alg, spec, table, graph, conjugator);

  StandardCertificate cert{spec.system, ring, assignment, graph, conjugator, rho, methods, {}, 0};
  StandardAutomorphism aut = StandardAutomorphism::central();
  try {
    aut = cert.automorphism(alg);
  } catch (const NormalizationError& e) {
    json failing = json::array();
    for (std::size_t j = 0; j < matches.size(); ++j)
      if (!normalizes_lie_algebra(alg, factors[j].ring, matches[j].conjugator, matches[j].conjugator_inverse))
        failing.push_back(factors[j].ring.descriptor());
    throw DecompositionError("inner", e.what(), json{{"relation", "normalization"}, {"factors", failing}});
  }
  for (const auto& e : spec.images) {
    GroupElement replay = apply(aut, unipotent(alg, ring, e.root, e.param));
    if (!(replay.matrix() == e.image.matrix()))
      throw DecompositionError("replay", "certificate does not reproduce a supplied image",
                               generator_witness(alg, ring, e.root, e.param));
    ++cert.replayed;
  }
  cert.transport = kernel_transport(alg, ring, table);
  return cert;
}

AutomorphismSpec spec_from_automorphism(const AdjointAlgebra& alg, const Ring& ring,
                                        const StandardAutomorphism& aut) {
  AutomorphismSpec spec{alg.system().name(), ring, {}};
  for (int a = 0; a < alg.num_roots(); ++a)
    for (Elem t : spanning_parameters(ring)) {
      GroupElement y = apply(aut, unipotent(alg, ring, a, t));
      spec.images.push_back({a, t, GroupElement(ring, y.matrix(), y.inverse_matrix())});
    }
  return spec;
}

ForgedSpec forge_random(const AdjointAlgebra& alg, const Ring& ring, std::uint64_t seed) {
  if (!ring.finite()) throw std::invalid_argument("forge_random needs a finite ring");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(draw_below(rng(), bound)); };
  const RootSystem& sys = alg.system();
  std::vector<Elem> units;
  for (Elem a = 0; a < ring.size(); ++a)
    if (ring.is_unit(a)) units.push_back(a);

  auto graph_piece = [&] {
    CrtSplit split = crt_split(ring);
    std::vector<GraphAssignment> assignment;
    for (Elem e : split.idempotents.idempotents)
      assignment.push_back({static_cast<int>(pick(sys.symmetries().size())), e});
    return StandardAutomorphism::graph_of(realize_graph(alg, ring, assignment));
  };
  auto inner_piece = [&] {
    std::vector<WordToken> word;
    for (std::size_t len = 1 + pick(5); word.size() < len;)
      word.push_back({static_cast<int>(pick(sys.size())), static_cast<Elem>(pick(ring.size()))});
    Character chi;
    for (int i = 0; i < sys.rank(); ++i) chi.values.push_back(units[pick(units.size())]);
    GroupElement g = evaluate_word(alg, ring, word) * torus(alg, ring, chi);
    return StandardAutomorphism::inner(alg, g);
  };
  auto ring_piece = [&] {
    auto autos = ring_automorphisms(ring);
    return StandardAutomorphism::ring(autos[pick(autos.size())]);
  };

  std::vector<StandardAutomorphism> pieces{graph_piece(), inner_piece(), ring_piece()};
  if (pick(2)) pieces.push_back(inner_piece());
  for (std::size_t i = pieces.size() - 1; i > 0; --i) std::swap(pieces[i], pieces[pick(i + 1)]);
  StandardAutomorphism aut = pieces.back();
  for (std::size_t i = pieces.size() - 1; i-- > 0;) aut = compose(pieces[i], aut);
  return ForgedSpec{spec_from_automorphism(alg, ring, aut), aut};
}

}  // namespace chev
