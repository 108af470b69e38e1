#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace chev {

/// Element code. Integers for Z and Z/n, table index (polynomial
/// coefficients in base p) for explicit fields, mixed-radix code for products.
using Elem = std::int64_t;

/// A commutative ring with 1. Cheap to copy; the underlying tables are shared
/// and immutable.
class Ring {
 public:
  enum class Kind { Integers, ZMod, Field, Product };

  static Ring integers();
  static Ring zmod(std::int64_t n);
  /// Explicit table field with p^k <= 16 elements; k == 1 gives Z/p.
  static Ring field(int p, int k);
  static Ring product(std::vector<Ring> factors);
  /// "Z", "Z/6", "F4", "F5", "Z/3xZ/3".
  static Ring parse(const std::string& descriptor);

  Kind kind() const;
  std::string descriptor() const;
  bool finite() const { return kind() != Kind::Integers; }
  /// Number of elements; 0 for Z.
  std::int64_t size() const;
  std::int64_t modulus() const;  // n for Z/n, p for fields, 0 otherwise
  int field_degree() const;      // k for explicit fields
  const std::vector<Ring>& factors() const;

  Elem zero() const { return 0; }
  Elem one() const;
  Elem from_int(std::int64_t z) const;
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::int64_t e) const;
  bool is_unit(Elem a) const;
  /// Throws std::domain_error for non-units.
  Elem inverse(Elem a) const;
  bool is_valid(Elem a) const;

  bool has_half() const { return is_unit(from_int(2)); }
  bool has_third() const { return is_unit(from_int(3)); }

  /// Additive generators: {1} for Z/n and Z, the coefficient basis for
  /// explicit fields, unit vectors for products.
  std::vector<Elem> additive_generators() const;

  /// Local rings in which every ideal is a power of the maximal one: Z/p^k
  /// and explicit fields.
  bool is_chain_ring() const;
  int chain_length() const;
  int valuation(Elem a) const;
  /// q with q * b == a; requires valuation(b) <= valuation(a).
  Elem divide(Elem a, Elem b) const;
  /// p^e in Z/p^k; 1 or 0 in a field.
  Elem uniformizer_power(int e) const;

  /// Product ring codec.
  std::vector<Elem> decode(Elem a) const;
  Elem encode(const std::vector<Elem>& parts) const;

  bool operator==(const Ring& other) const { return descriptor() == other.descriptor(); }
  bool operator!=(const Ring& other) const { return !(*this == other); }

  struct Impl;

 private:
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Ideal of an atomic ring given by a generator d, or one generator per
/// factor for products. For Z/n the ideal (d) is normalized to (gcd(d, n)),
/// so (n) is the zero ideal. For explicit fields d == 0 is the zero ideal and
/// anything else the whole field.
struct IdealHandle {
  std::vector<std::int64_t> generators;

  static IdealHandle principal(std::int64_t d) { return IdealHandle{{d}}; }
};

bool ideal_is_proper(const Ring& ring, const IdealHandle& ideal);
bool ideal_is_maximal(const Ring& ring, const IdealHandle& ideal);
bool ideal_contains(const Ring& ring, const IdealHandle& ideal, Elem a);

/// Orthogonal idempotents summing to one.
struct IdempotentSystem {
  std::vector<Elem> idempotents;
};

bool is_idempotent_system(const Ring& ring, const IdempotentSystem& system);

/// A ring homomorphism. Finite sources carry a full value table; the
/// canonical map out of Z is represented by an empty table.
struct RingHom {
  Ring source;
  Ring target;
  std::vector<Elem> table;

  Elem operator()(Elem a) const { return table.empty() ? target.from_int(a) : table[a]; }
  bool is_identity() const;
};

RingHom identity_hom(const Ring& ring);
RingHom compose(const RingHom& outer, const RingHom& inner);

Ring ring_make(const std::string& descriptor);

/// Decomposition of a finite ring into local factors.
struct CrtSplit {
  Ring ring;
  std::vector<Ring> factors;
  IdempotentSystem idempotents;
  std::vector<RingHom> projections;

  std::vector<Elem> to_factors(Elem a) const;
  Elem from_factors(const std::vector<Elem>& parts) const;
};

/// Splits Z/n by CRT into Z/p^k factors; products are flattened into their
/// local factors; local rings split trivially.
CrtSplit crt_split(const Ring& ring);

/// Natural surjection R -> R/I. Throws for the whole ring.
RingHom residue_map(const Ring& ring, const IdealHandle& ideal);

/// Maximal ideals of a finite ring, in factor order.
std::vector<IdealHandle> maximal_ideals(const Ring& ring);

/// All ring automorphisms of a finite ring, identity first. Throws
/// std::domain_error for Z.
std::vector<RingHom> ring_automorphisms(const Ring& ring);

/// Checks that a value table is a ring automorphism.
bool is_ring_automorphism(const RingHom& map);

/// Extends values on additive_generators() additively to a full table.
/// Throws std::invalid_argument when the values are not additively
/// consistent.
RingHom extend_additively(const Ring& ring, const std::vector<Elem>& generator_images);

}  // namespace chev
