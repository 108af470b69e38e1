#pragma once

#include <json.hpp>

#include "chev/decomposer.hpp"

namespace chev {

/// Integers for Z, Z/n and table fields; arrays for product rings.
nlohmann::json elem_to_json(const Ring& ring, Elem a);
Elem elem_from_json(const Ring& ring, const nlohmann::json& j);

nlohmann::json root_system_to_json(const RootSystem& sys);
/// { system, dimension, basis, matrices: { "[1,0]": [[...]], ... } }.
nlohmann::json adjoint_to_json(const AdjointAlgebra& alg);

nlohmann::json group_element_to_json(const AdjointAlgebra& alg, const GroupElement& g);
/// Throws std::domain_error when the matrix is not invertible.
GroupElement group_element_from_json(const AdjointAlgebra& alg, const Ring& ring, const nlohmann::json& j);

/// Ring map given by its values on the additive generators.
nlohmann::json ring_map_to_json(const RingHom& hom);
RingHom ring_map_from_json(const Ring& ring, const nlohmann::json& j);

nlohmann::json automorphism_to_json(const AdjointAlgebra& alg, const StandardAutomorphism& aut);
StandardAutomorphism automorphism_from_json(const AdjointAlgebra& alg, const Ring& ring, const nlohmann::json& j);

nlohmann::json spec_to_json(const AdjointAlgebra& alg, const AutomorphismSpec& spec);
/// Parses a spec; invalid images raise DecompositionError at stage "precheck".
AutomorphismSpec spec_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const AdjointAlgebra& alg, const StandardCertificate& cert);

}  // namespace chev
