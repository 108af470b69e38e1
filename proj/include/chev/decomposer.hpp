#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chev/autos.hpp"
#include "chev/recover.hpp"

namespace chev {

/// Image of the generator x_root(param).
struct ImageEntry {
  int root = 0;
  Elem param = 0;
  GroupElement image;
};

/// An automorphism of E_ad(system, ring) given by images of generators over
/// the spanning parameter set.
struct AutomorphismSpec {
  std::string system;
  Ring ring;
  std::vector<ImageEntry> images;
};

/// {1} followed by the additive generators of the ring, without repeats.
std::vector<Elem> spanning_parameters(const Ring& ring);

/// A refusal raised by one stage of the pipeline, with a JSON witness.
class DecompositionError : public std::runtime_error {
 public:
  DecompositionError(std::string stage, const std::string& message, nlohmann::json witness = {});
  const std::string& stage() const { return stage_; }
  const nlohmann::json& witness() const { return witness_; }
  nlohmann::json to_json() const;

 private:
  std::string stage_;
  nlohmann::json witness_;
};

/// Images of x_alpha(a) for every root and every ring element, generated
/// additively from the spec.
class ImageTable {
 public:
  ImageTable(const AdjointAlgebra& alg, const AutomorphismSpec& spec);

  const GroupElement& at(int alpha, Elem a) const { return table_[alpha][a]; }
  /// Images of x_alpha(1), indexed by root.
  std::vector<GroupElement> unit_family() const;

 private:
  Elem one_;
  std::vector<std::vector<GroupElement>> table_;
};

/// Validates the spec against the defining relations of the elementary group:
/// invertibility, additivity of each root subgroup, injectivity on
/// parameters, the commutator formula and Weyl conjugation.
ImageTable precheck(const AdjointAlgebra& alg, const AutomorphismSpec& spec);

/// The spec reduced to one local factor of the ring.
struct FactorSpec {
  Ring ring;
  RingHom projection;
  Elem idempotent = 0;
  std::vector<GroupElement> family;  // images of x_alpha(1), indexed by root
};

std::vector<FactorSpec> split_local(const AdjointAlgebra& alg, const AutomorphismSpec& spec,
                                    const ImageTable& table);

/// Per-factor conjugator and diagram symmetry.
struct FactorMatch {
  int symmetry = 0;     // index into RootSystem::symmetries()
  Matrix intertwiner;   // M with M x_alpha(1) M^-1 = image of x_alpha(1)
  Matrix conjugator;    // Lambda_delta^-1 M
  Matrix conjugator_inverse;
  std::string method;
};

FactorMatch match_graph_and_conjugator(const AdjointAlgebra& alg, const FactorSpec& factor);

/// Value table of rho, read off the residual automorphism
/// x -> (Lambda g)^-1 phi(x) (Lambda g).
RingHom extract_ring_map(const AdjointAlgebra& alg, const AutomorphismSpec& spec, const ImageTable& table,
                         const GraphData& graph, const GroupElement& conjugator);

/// phi(N_I) lands in N_J, checked on x_alpha(a) for all roots and all a in I.
struct KernelTransport {
  IdealHandle source;
  IdealHandle target;
  int checked = 0;
};

std::vector<KernelTransport> kernel_transport(const AdjointAlgebra& alg, const Ring& ring,
                                              const ImageTable& table);

/// phi = graph o inner(conjugator) o ring(ring_map) on every supplied image.
struct StandardCertificate {
  std::string system;
  Ring ring;
  std::vector<GraphAssignment> assignment;
  GraphData graph;
  GroupElement conjugator;
  RingHom ring_map;
  std::vector<std::string> methods;
  std::vector<KernelTransport> transport;
  int replayed = 0;

  StandardAutomorphism automorphism(const AdjointAlgebra& alg) const;
};

/// Runs the full pipeline. Throws DecompositionError tagged with the
/// failing stage.
StandardCertificate certify(const AdjointAlgebra& alg, const AutomorphismSpec& spec);

/// Images of every generator of the spanning set under a standard
/// automorphism.
AutomorphismSpec spec_from_automorphism(const AdjointAlgebra& alg, const Ring& ring,
                                        const StandardAutomorphism& aut);

/// A random composition of ring, inner and graph automorphisms and its spec.
struct ForgedSpec {
  AutomorphismSpec spec;
  StandardAutomorphism automorphism;
};

ForgedSpec forge_random(const AdjointAlgebra& alg, const Ring& ring, std::uint64_t seed);

/// Deterministic reduction of a 64-bit draw to [0, bound).
std::uint64_t draw_below(std::uint64_t word, std::uint64_t bound);

}  // namespace chev
