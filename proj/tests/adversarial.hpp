#pragma once

// Hand-built specs that are not automorphisms of the elementary group, or not
// well-formed at all. Each must be refused.

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chev/decomposer.hpp"
#include "chev/json_io.hpp"

namespace adversarial {

using nlohmann::json;

struct Case {
  std::string name;
  json spec;
};

inline chev::AutomorphismSpec identity_spec(const chev::AdjointAlgebra& alg, const chev::Ring& r) {
  return chev::spec_from_automorphism(alg, r, chev::StandardAutomorphism::identity());
}

// Replaces every image by f(root, param).
inline json rebuild(const chev::AdjointAlgebra& alg, const chev::Ring& r,
                    const std::function<chev::GroupElement(int, chev::Elem)>& f) {
  auto spec = identity_spec(alg, r);
  for (auto& e : spec.images) e.image = f(e.root, e.param);
  return chev::spec_to_json(alg, spec);
}

inline json conjugated(const chev::AdjointAlgebra& alg, const chev::Ring& r, const chev::Matrix& a) {
  chev::GroupElement g = chev::GroupElement::from_matrix(r, a);
  return rebuild(alg, r, [&](int root, chev::Elem t) { return g * chev::unipotent(alg, r, root, t) * g.inverse(); });
}

inline json matrix_json(const chev::Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols; ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

inline std::vector<Case> cases() {
  using chev::Elem;
  using chev::Ring;
  std::vector<Case> out;
  auto a2 = chev::build_algebra(chev::parse_system("A2"));
  auto b2 = chev::build_algebra(chev::parse_system("B2"));
  auto a3 = chev::build_algebra(chev::parse_system("A3"));
  Ring z5 = Ring::zmod(5), z4 = Ring::zmod(4), f4 = Ring::parse("F4"), z33 = Ring::parse("Z/3xZ/3");
  const int s1 = a2.system().simple_index(0), s2 = a2.system().simple_index(1);

  {
    json j = chev::spec_to_json(a2, identity_spec(a2, z5));
    j["images"][0]["matrix"] = matrix_json(chev::identity_matrix(z5, a2.dimension()));
    out.push_back({"identity image for x_alpha1(1)", j});
  }
  out.push_back({"parameter doubling on Z/4", rebuild(a2, z4, [&](int root, Elem t) {
                   return chev::unipotent(a2, z4, root, z4.mul(2, t));
                 })});
  out.push_back({"collapsing parameter map (a,b) -> (a,a) on Z/3xZ/3", rebuild(a2, z33, [&](int root, Elem t) {
                   auto p = z33.decode(t);
                   return chev::unipotent(a2, z33, root, z33.encode({p[0], p[0]}));
                 })});
  {
    auto gens = f4.additive_generators();
    auto swap = chev::extend_additively(f4, {gens[1], gens[0]});
    out.push_back({"additive but not multiplicative parameter map on F4", rebuild(a2, f4, [&](int root, Elem t) {
                     return chev::unipotent(a2, f4, root, swap(t));
                   })});
  }
  out.push_back({"simple root subgroups swapped", rebuild(a2, z5, [&](int root, Elem t) {
                   int target = root;
                   if (root == s1) target = s2;
                   else if (root == s2) target = s1;
                   else if (root == a2.system().negative(s1)) target = a2.system().negative(s2);
                   else if (root == a2.system().negative(s2)) target = a2.system().negative(s1);
                   return chev::unipotent(a2, z5, target, t);
                 })});
  out.push_back({"diagram swap without graph signs", rebuild(a2, z5, [&](int root, Elem t) {
                   return chev::unipotent(a2, z5, a2.system().apply_symmetry(a2.system().symmetries()[1], root), t);
                 })});
  {
    json j = chev::spec_to_json(a2, identity_spec(a2, z5));
    auto m = chev::mat_scale(z5, 2, chev::unipotent(a2, z5, s1, 1).matrix());
    for (auto& e : j["images"])
      if (e["root"] == json(a2.system().root(s1)) && e["param"] == 1) e["matrix"] = matrix_json(m);
    out.push_back({"scalar multiple 2 x_alpha1(1)", j});
  }
  {
    chev::Matrix a = chev::identity_matrix(z5, a2.dimension());
    a(0, 1) = 1;
    out.push_back({"conjugation by a transvection outside the normalizer (A2)", conjugated(a2, z5, a)});
  }
  {
    chev::Matrix a = chev::identity_matrix(z5, b2.dimension());
    a(2, 9) = 3;
    out.push_back({"conjugation by a transvection outside the normalizer (B2)", conjugated(b2, z5, a)});
  }
  {
    chev::Matrix a = chev::identity_matrix(z5, a2.dimension());
    a(0, 0) = 2;
    out.push_back({"conjugation by a diagonal matrix that is not a torus element", conjugated(a2, z5, a)});
  }
  {
    chev::Matrix a = chev::identity_matrix(z4, a3.dimension());
    a(0, 3) = 2;
    out.push_back({"conjugator trivial mod 2 but not normalizing over Z/4", conjugated(a3, z4, a)});
  }
  {
    json j = chev::spec_to_json(a2, identity_spec(a2, z5));
    chev::Matrix m = chev::identity_matrix(z5, a2.dimension());
    for (int i = 0; i < m.rows; ++i)
      for (int k = 0; k < m.cols; ++k) m(i, k) = (i == k) ? 1 : ((3 * i + 5 * k) % 7 == 0 ? 2 : 0);
    if (!chev::inverse(z5, m)) m = chev::identity_matrix(z5, a2.dimension());
    for (auto& e : j["images"])
      if (e["root"] == json(a2.system().root(a2.system().negative(s1))) && e["param"] == 1) e["matrix"] = matrix_json(m);
    out.push_back({"unstructured invertible matrix for x_-alpha1(1)", j});
  }
  {
    json j = chev::spec_to_json(a2, identity_spec(a2, z5));
    j["images"][2]["matrix"] = matrix_json(chev::Matrix(a2.dimension(), a2.dimension()));
    out.push_back({"zero matrix image", j});
  }
  {
    json j = chev::spec_to_json(a2, identity_spec(a2, z5));
    j["images"].erase(j["images"].begin() + 3);
    out.push_back({"missing generator image", j});
  }
  {
    json j = chev::spec_to_json(a2, identity_spec(a2, z5));
    j["images"][1]["matrix"] = matrix_json(chev::identity_matrix(z5, 9));
    out.push_back({"image of the wrong shape", j});
  }
  {
    json j = chev::spec_to_json(a2, identity_spec(a2, z5));
    j["ring"] = "Z/7";
    out.push_back({"images from Z/5 relabelled as Z/7", j});
  }
  {
    json j = chev::spec_to_json(a2, identity_spec(a2, z5));
    j["images"][0]["root"] = json::array({2, 1});
    out.push_back({"image attached to a non-root", j});
  }
  return out;
}

// Stage tag of the refusal, or empty when the spec was certified.
inline std::string refusal_stage(const json& spec) {
  try {
    auto parsed = chev::spec_from_json(spec);
    auto alg = chev::build_algebra(chev::parse_system(parsed.system));
    chev::certify(alg, parsed);
    return "";
  } catch (const chev::DecompositionError& e) {
    return e.stage();
  }
}

}  // namespace adversarial
