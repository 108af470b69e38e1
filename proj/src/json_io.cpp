#include "chev/json_io.hpp"

#include <stdexcept>

namespace chev {

using nlohmann::json;

json elem_to_json(const Ring& ring, Elem a) {
  if (ring.kind() != Ring::Kind::Product) return a;
  json out = json::array();
  auto parts = ring.decode(a);
  for (std::size_t j = 0; j < parts.size(); ++j) out.push_back(elem_to_json(ring.factors()[j], parts[j]));
  return out;
}

Elem elem_from_json(const Ring& ring, const json& j) {
  if (ring.kind() == Ring::Kind::Product) {
    if (!j.is_array() || j.size() != ring.factors().size())
      throw std::invalid_argument("product ring element must be a tuple");
    std::vector<Elem> parts;
    for (std::size_t k = 0; k < j.size(); ++k) parts.push_back(elem_from_json(ring.factors()[k], j[k]));
    return ring.encode(parts);
  }
  if (!j.is_number_integer()) throw std::invalid_argument("ring element must be an integer");
  Elem a = j.get<Elem>();
  if (ring.kind() == Ring::Kind::Field) {
    if (!ring.is_valid(a)) throw std::invalid_argument("field element index out of range");
    return a;
  }
  return ring.from_int(a);
}

namespace {

json matrix_to_json(const Ring& ring, const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols; ++k) row.push_back(elem_to_json(ring, m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Ring& ring, const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw std::invalid_argument("matrix has the wrong size");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      throw std::invalid_argument("matrix has the wrong size");
    for (int k = 0; k < n; ++k) m(i, k) = elem_from_json(ring, j[i][k]);
  }
  return m;
}

int root_from_json(const RootSystem& sys, const json& j) {
  int idx = sys.index_of(j.get<Root>());
  if (idx < 0) throw std::invalid_argument("not a root of " + sys.name() + ": " + j.dump());
  return idx;
}

int symmetry_index(const RootSystem& sys, const std::vector<int>& perm) {
  const auto& syms = sys.symmetries();
  for (std::size_t s = 0; s < syms.size(); ++s)
    if (syms[s].permutation == perm) return static_cast<int>(s);
  throw std::invalid_argument("not a diagram symmetry of " + sys.name());
}

}  // namespace

json root_system_to_json(const RootSystem& sys) {
  json syms = json::array();
  for (const auto& s : sys.symmetries()) syms.push_back(s.permutation);
  json lengths = json::array();
  for (int i = 0; i < static_cast<int>(sys.size()); ++i) lengths.push_back(sys.is_long(i) ? "long" : "short");
  return json{{"kind", std::string(1, sys.kind())},
              {"rank", sys.rank()},
              {"roots", sys.roots()},
              {"cartan", sys.cartan()},
              {"length_class", lengths},
              {"symmetries", syms}};
}

json adjoint_to_json(const AdjointAlgebra& alg) {
  const RootSystem& sys = alg.system();
  const Ring z = Ring::integers();
  json basis = json::array();
  for (const auto& r : sys.roots()) basis.push_back(r);
  for (int i = 0; i < sys.rank(); ++i) basis.push_back("h" + std::to_string(i + 1));
  json mats = json::object();
  for (int a = 0; a < alg.num_roots(); ++a) mats[json(sys.root(a)).dump()] = matrix_to_json(z, alg.adjoint_matrix(a));
  json cartan = json::array();
  for (int i = 0; i < sys.rank(); ++i) cartan.push_back(matrix_to_json(z, alg.cartan_matrix(i)));
  return json{{"system", sys.name()},
              {"dimension", alg.dimension()},
              {"basis", basis},
              {"matrices", mats},
              {"cartan_matrices", cartan}};
}

json group_element_to_json(const AdjointAlgebra& alg, const GroupElement& g) {
  json out{{"ring", g.ring().descriptor()}, {"matrix", matrix_to_json(g.ring(), g.matrix())}};
  if (g.word()) {
    json w = json::array();
    for (const auto& t : *g.word())
      w.push_back(json{{"root", alg.system().root(t.root)}, {"param", elem_to_json(g.ring(), t.param)}});
    out["word"] = w;
  }
  return out;
}

GroupElement group_element_from_json(const AdjointAlgebra& alg, const Ring& ring, const json& j) {
  if (j.contains("ring") && Ring::parse(j.at("ring").get<std::string>()) != ring)
    throw std::invalid_argument("group element over the wrong ring");
  Matrix m = matrix_from_json(ring, j.at("matrix"), alg.dimension());
  GroupElement g = GroupElement::from_matrix(ring, std::move(m));
  if (!j.contains("word")) return g;
  std::vector<WordToken> word;
  for (const auto& t : j.at("word")) word.push_back({root_from_json(alg.system(), t.at("root")), elem_from_json(ring, t.at("param"))});
  if (!(evaluate_word(alg, ring, word).matrix() == g.matrix()))
    throw std::invalid_argument("group element word does not evaluate to its matrix");
  return GroupElement(ring, g.matrix(), g.inverse_matrix(), std::move(word));
}

json ring_map_to_json(const RingHom& hom) {
  json gens = json::array(), images = json::array();
  for (Elem g : hom.source.additive_generators()) {
    gens.push_back(elem_to_json(hom.source, g));
    images.push_back(elem_to_json(hom.target, hom(g)));
  }
  return json{{"generators", gens}, {"images", images}};
}

RingHom ring_map_from_json(const Ring& ring, const json& j) {
  auto gens = ring.additive_generators();
  const json& g = j.at("generators");
  const json& im = j.at("images");
  if (g.size() != gens.size() || im.size() != gens.size())
    throw std::invalid_argument("ring map needs one image per additive generator");
  std::vector<Elem> images;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (elem_from_json(ring, g[k]) != gens[k]) throw std::invalid_argument("ring map generators out of order");
    images.push_back(elem_from_json(ring, im[k]));
  }
  return extend_additively(ring, images);
}

json automorphism_to_json(const AdjointAlgebra& alg, const StandardAutomorphism& aut) {
  using Kind = StandardAutomorphism::Kind;
  switch (aut.kind) {
    case Kind::Central: return json{{"kind", "central"}};
    case Kind::Ring: {
      json j = ring_map_to_json(aut.ring_map.front());
      j["kind"] = "ring";
      return j;
    }
    case Kind::Inner:
      return json{{"kind", "inner"}, {"conjugator", group_element_to_json(alg, aut.conjugator.front())}};
    case Kind::Graph: {
      const GraphData& d = aut.graph.front();
      json syms = json::array(), idem = json::array();
      for (const auto& c : d.components) {
        syms.push_back(c.realization.symmetry.permutation);
        idem.push_back(elem_to_json(d.ring, c.idempotent));
      }
      return json{{"kind", "graph"}, {"symmetries", syms}, {"idempotents", idem}};
    }
    case Kind::Compose: {
      json parts = json::array();
      for (const auto& p : aut.parts) parts.push_back(automorphism_to_json(alg, p));
      return json{{"kind", "compose"}, {"parts", parts}};
    }
  }
  return json{};
}

StandardAutomorphism automorphism_from_json(const AdjointAlgebra& alg, const Ring& ring, const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "central") return StandardAutomorphism::central();
  if (kind == "ring") return StandardAutomorphism::ring(ring_map_from_json(ring, j));
  if (kind == "inner") return StandardAutomorphism::inner(alg, group_element_from_json(alg, ring, j.at("conjugator")));
  if (kind == "graph") {
    std::vector<GraphAssignment> assignment;
    const json& syms = j.at("symmetries");
    const json& idem = j.at("idempotents");
    if (syms.size() != idem.size()) throw std::invalid_argument("graph needs one idempotent per symmetry");
    for (std::size_t k = 0; k < syms.size(); ++k)
      assignment.push_back({symmetry_index(alg.system(), syms[k].get<std::vector<int>>()), elem_from_json(ring, idem[k])});
    return StandardAutomorphism::graph_of(realize_graph(alg, ring, assignment));
  }
  if (kind == "compose") {
    const json& parts = j.at("parts");
    if (parts.empty()) return StandardAutomorphism::identity();
    StandardAutomorphism out = automorphism_from_json(alg, ring, parts.back());
    for (std::size_t k = parts.size() - 1; k-- > 0;) out = compose(automorphism_from_json(alg, ring, parts[k]), out);
    return out;
  }
  throw std::invalid_argument("unknown automorphism kind: " + kind);
}

json spec_to_json(const AdjointAlgebra& alg, const AutomorphismSpec& spec) {
  json images = json::array();
  for (const auto& e : spec.images)
    images.push_back(json{{"root", alg.system().root(e.root)},
                          {"param", elem_to_json(spec.ring, e.param)},
                          {"matrix", matrix_to_json(spec.ring, e.image.matrix())}});
  return json{{"system", spec.system}, {"ring", spec.ring.descriptor()}, {"images", images}};
}

AutomorphismSpec spec_from_json(const json& j) {
  try {
    RootSystem sys = parse_system(j.at("system").get<std::string>());
    Ring ring = Ring::parse(j.at("ring").get<std::string>());
    const int n = static_cast<int>(sys.size()) + sys.rank();
    AutomorphismSpec spec{sys.name(), ring, {}};
    for (const auto& e : j.at("images")) {
      int root = root_from_json(sys, e.at("root"));
      Elem t = elem_from_json(ring, e.at("param"));
      Matrix m = matrix_from_json(ring, e.at("matrix"), n);
      auto inv = inverse(ring, m);
      if (!inv)
        throw DecompositionError("precheck", "image is not invertible",
                                 json{{"relation", "invertibility"}, {"root", e.at("root")}, {"param", e.at("param")}});
      spec.images.push_back({root, t, GroupElement(ring, std::move(m), std::move(*inv))});
    }
    return spec;
  } catch (const DecompositionError&) {
    throw;
  } catch (const std::exception& e) {
    throw DecompositionError("precheck", std::string("malformed spec: ") + e.what());
  }
}

json certificate_to_json(const AdjointAlgebra& alg, const StandardCertificate& cert) {
  const Ring& ring = cert.ring;
  json syms = json::array(), idem = json::array(), signs = json::array();
  for (const auto& c : cert.graph.components) {
    syms.push_back(c.realization.symmetry.permutation);
    idem.push_back(elem_to_json(ring, c.idempotent));
    signs.push_back(c.realization.signs);
  }
  json table = json::array();
  for (Elem a = 0; a < ring.size(); ++a) table.push_back(json::array({elem_to_json(ring, a), elem_to_json(ring, cert.ring_map(a))}));
  json rho = ring_map_to_json(cert.ring_map);
  rho["table"] = table;
  json transport = json::array();
  for (const auto& t : cert.transport)
    transport.push_back(json{{"source", t.source.generators}, {"target", t.target.generators}, {"checked", t.checked}});
  return json{{"status", "certified"},
              {"system", cert.system},
              {"ring", ring.descriptor()},
              {"graph", json{{"symmetries", syms}, {"idempotents", idem}, {"signs", signs}}},
              {"conjugator", group_element_to_json(alg, cert.conjugator)},
              {"ring_map", rho},
              {"methods", cert.methods},
              {"kernel_transport", transport},
              {"replayed", cert.replayed}};
}

}  // namespace chev
