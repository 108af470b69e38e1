#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace chev {

/// Coefficient vector of a root over the simple roots.
using Root = std::vector<int>;

/// Bijection of the simple roots preserving the Cartan matrix.
struct DiagramSymmetry {
  std::vector<int> permutation;  // simple root i -> permutation[i]
  bool is_identity() const;
};

/// An irreducible root system of rank > 1 with Bourbaki numbering.
///
/// Roots are stored as integer coefficient vectors over the simple roots.
/// The enumeration order is fixed: positive roots sorted by height, ties
/// broken by descending lexicographic order of the coefficient vector, each
/// positive root immediately followed by its negative.
class RootSystem {
 public:
  RootSystem(char kind, int rank);

  char kind() const { return kind_; }
  int rank() const { return rank_; }
  std::string name() const;

  std::size_t size() const { return roots_.size(); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int index) const { return roots_[index]; }

  /// Index of a root in the enumeration order, or -1 when not a root.
  int index_of(const Root& r) const;
  bool contains(const Root& r) const { return index_of(r) >= 0; }

  int negative(int index) const { return index ^ 1; }
  bool is_positive(int index) const { return (index & 1) == 0; }
  int simple_index(int i) const { return simple_[i]; }
  int height(int index) const;

  /// cartan()[i][j] = <alpha_j, alpha_i>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  /// Squared length in the normalization where the shortest roots have
  /// length 2.
  int length2(int index) const { return length2_[index]; }
  bool is_long(int index) const { return length2_[index] == max_length2_; }
  bool simply_laced() const;

  int inner(const Root& a, const Root& b) const;
  /// <beta, alpha> = 2 (beta, alpha) / (alpha, alpha).
  int pairing(int beta, int alpha) const;
  int pairing(const Root& beta, const Root& alpha) const;

  /// Maximal p, q with beta - p alpha, ..., beta + q alpha all roots.
  std::pair<int, int> root_chain(int beta, int alpha) const;

  /// s_alpha(beta) as a root index.
  int reflect(int alpha, int beta) const;

  /// Index of alpha + beta, or -1 if the sum is not a root.
  int sum_index(int alpha, int beta) const;

  /// Coroot of a root as integer coefficients over the simple coroots.
  std::vector<int> coroot(int index) const;

  /// Highest root index.
  int highest_root() const;

  const std::vector<DiagramSymmetry>& symmetries() const { return symmetries_; }

  /// Image of a root under a diagram symmetry.
  int apply_symmetry(const DiagramSymmetry& s, int index) const;

 private:
  char kind_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> simple_length2_;
  std::vector<Root> roots_;
  std::map<Root, int> index_;
  std::vector<int> simple_;
  std::vector<int> length2_;
  int max_length2_ = 2;
  std::vector<std::vector<int>> sums_;
  std::vector<DiagramSymmetry> symmetries_;

  void build_cartan();
  void enumerate();
  void find_symmetries();
};

RootSystem build_root_system(char kind, int rank);

/// Parses "A2", "G2", "D4", ...
RootSystem parse_system(const std::string& name);

}  // namespace chev
