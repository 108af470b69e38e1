#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chev/group.hpp"

namespace chev {

/// Raised when a conjugator does not normalize the elementary group.
class NormalizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Integer realization of one diagram symmetry on the adjoint module:
/// lambda X_alpha lambda^-1 = sign[alpha] X_{delta(alpha)}, sign = 1 on the
/// simple roots.
struct GraphRealization {
  DiagramSymmetry symmetry;
  IntMatrix lambda;
  IntMatrix lambda_inverse;
  std::vector<int> signs;  // per root
};

GraphRealization realize_symmetry(const AdjointAlgebra& alg, const DiagramSymmetry& symmetry);

/// Dimension over Z/p of the space of matrices intertwining X_alpha with
/// sign[alpha] X_{delta(alpha)} for all roots.
int intertwiner_dimension(const AdjointAlgebra& alg, const GraphRealization& graph, int prime);

struct GraphComponent {
  GraphRealization realization;
  Elem idempotent = 0;
};

/// Graph automorphism Lambda = sum e_i Lambda_i mixing diagram symmetries
/// across orthogonal idempotents.
struct GraphData {
  Ring ring;
  std::vector<GraphComponent> components;
  Matrix lambda;
  Matrix lambda_inverse;
};

/// Symmetry index (into RootSystem::symmetries()) paired with an idempotent.
struct GraphAssignment {
  int symmetry = 0;
  Elem idempotent = 0;
};

GraphData realize_graph(const AdjointAlgebra& alg, const Ring& ring,
                        const std::vector<GraphAssignment>& assignment);

/// A standard automorphism or a composition of them (applied right to left).
struct StandardAutomorphism {
  enum class Kind { Ring, Inner, Graph, Central, Compose };
  Kind kind = Kind::Central;
  std::vector<RingHom> ring_map;            // one entry for Kind::Ring
  std::vector<GroupElement> conjugator;     // one entry for Kind::Inner
  std::vector<GraphData> graph;             // one entry for Kind::Graph
  std::vector<StandardAutomorphism> parts;  // Kind::Compose

  static StandardAutomorphism ring(RingHom map);
  /// Throws NormalizationError unless g normalizes the adjoint Lie algebra
  /// (and with it the elementary group).
  static StandardAutomorphism inner(const AdjointAlgebra& alg, GroupElement g);
  static StandardAutomorphism graph_of(GraphData data);
  /// Central automorphisms act trivially on the elementary adjoint group of
  /// rank > 1.
  static StandardAutomorphism central();
  static StandardAutomorphism identity() { return central(); }
};

StandardAutomorphism compose(const StandardAutomorphism& a, const StandardAutomorphism& b);

GroupElement apply(const StandardAutomorphism& aut, const GroupElement& elem);

/// g X_alpha g^-1 lies in the ring span of the adjoint basis for every root.
bool normalizes_lie_algebra(const AdjointAlgebra& alg, const Ring& ring, const Matrix& g,
                            const Matrix& g_inverse);

/// Writes x_alpha(t) as a single commutator [x_beta(s), x_gamma(c)] when a
/// decomposition alpha = beta + gamma with a unit coefficient and no higher
/// terms exists. Returns false otherwise.
bool commutator_witness(const AdjointAlgebra& alg, const Ring& ring, int alpha, Elem t,
                        GroupElement* left = nullptr, GroupElement* right = nullptr);

}  // namespace chev
