#include "chev/rings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace chev {

struct Ring::Impl {
  Kind kind = Kind::Integers;
  std::int64_t n = 0;  // modulus for Z/n, p for fields
  int k = 1;           // field degree, or exponent when Z/n is a prime power
  std::int64_t size = 0;
  std::int64_t prime = 0;  // residue characteristic for chain rings, 0 otherwise
  std::vector<Elem> add_table, mul_table, inv_table;
  std::vector<Ring> factors;
  std::vector<std::int64_t> radix;
  std::string descriptor;
};

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, new_t = 1, r = n, new_r = mod(a, n);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("element is not invertible");
  return mod(t, n);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

// Multiply polynomials with coefficients mod p, given as base-p codes, then
// reduce modulo a monic polynomial of degree k with low coefficients `low`.
Elem poly_mul(Elem a, Elem b, int p, int k, const std::vector<int>& low) {
  std::vector<int> ca(k), cb(k), prod(2 * k, 0);
  for (int i = 0; i < k; ++i) ca[i] = static_cast<int>(a % p), a /= p;
  for (int i = 0; i < k; ++i) cb[i] = static_cast<int>(b % p), b /= p;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  for (int d = 2 * k - 1; d >= k; --d) {
    int c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    // x^k = -sum low[i] x^i
    for (int i = 0; i < k; ++i) prod[d - k + i] = ((prod[d - k + i] - c * low[i]) % p + p) % p;
  }
  Elem out = 0;
  for (int i = k - 1; i >= 0; --i) out = out * p + prod[i];
  return out;
}

Elem poly_add(Elem a, Elem b, int p, int k) {
  Elem out = 0, scale = 1;
  for (int i = 0; i < k; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p, b /= p, scale *= p;
  }
  return out;
}

}  // namespace

Ring Ring::integers() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Integers;
  impl->descriptor = "Z";
  return Ring(impl);
}

Ring Ring::zmod(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("Z/n requires n >= 2");
  if (n > (std::int64_t{1} << 31)) throw std::invalid_argument("Z/n modulus too large");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::ZMod;
  impl->n = n;
  impl->size = n;
  auto f = factorize(n);
  if (f.size() == 1) impl->prime = f[0].first, impl->k = f[0].second;
  impl->descriptor = "Z/" + std::to_string(n);
  return Ring(impl);
}

Ring Ring::field(int p, int k) {
  if (!is_prime(p) || k < 1) throw std::invalid_argument("field order must be a prime power");
  if (k == 1) return zmod(p);
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > 16) throw std::invalid_argument("explicit field tables are limited to 16 elements");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Field;
  impl->n = p;
  impl->k = k;
  impl->size = q;
  impl->prime = p;
  impl->descriptor = "F" + std::to_string(q);
  impl->add_table.resize(q * q);
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b) impl->add_table[a * q + b] = poly_add(a, b, p, k);
  // First monic modulus, in code order, that makes every nonzero element a unit.
  for (Elem code = 0; code < q; ++code) {
    std::vector<int> low(k);
    Elem c = code;
    for (int i = 0; i < k; ++i) low[i] = static_cast<int>(c % p), c /= p;
    std::vector<Elem> mul(q * q), inv(q, -1);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) {
        mul[a * q + b] = poly_mul(a, b, p, k, low);
        if (mul[a * q + b] == 1) inv[a] = b;
      }
    if (std::count(inv.begin() + 1, inv.end(), -1) == 0) {
      impl->mul_table = std::move(mul);
      impl->inv_table = std::move(inv);
      break;
    }
  }
  return Ring(impl);
}

Ring Ring::product(std::vector<Ring> factors) {
  if (factors.size() < 2) throw std::invalid_argument("a product needs at least two factors");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Product;
  std::int64_t size = 1;
  for (const Ring& f : factors) {
    if (!f.finite()) throw std::invalid_argument("product factors must be finite");
    impl->radix.push_back(size);
    size *= f.size();
    if (size > (std::int64_t{1} << 24)) throw std::invalid_argument("product ring too large");
    if (!impl->descriptor.empty()) impl->descriptor += "x";
    impl->descriptor += f.descriptor();
  }
  impl->size = size;
  impl->factors = std::move(factors);
  return Ring(impl);
}

Ring Ring::parse(const std::string& d) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed ring descriptor '" + d + "'");
    return std::stoll(s);
  };
  if (d.find('x') != std::string::npos) {
    std::vector<Ring> parts;
    std::size_t start = 0;
    while (true) {
      auto pos = d.find('x', start);
      parts.push_back(parse(d.substr(start, pos - start)));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return product(std::move(parts));
  }
  if (d == "Z") return integers();
  if (d.rfind("Z/", 0) == 0) return zmod(parse_int(d.substr(2)));
  if (d.rfind("F", 0) == 0) {
    auto q = parse_int(d.substr(1));
    auto f = factorize(q);
    if (f.size() != 1) throw std::invalid_argument("field order must be a prime power: '" + d + "'");
    return field(static_cast<int>(f[0].first), f[0].second);
  }
  throw std::invalid_argument("malformed ring descriptor '" + d + "'");
}

Ring ring_make(const std::string& descriptor) { return Ring::parse(descriptor); }

Ring::Kind Ring::kind() const { return impl_->kind; }
std::string Ring::descriptor() const { return impl_->descriptor; }
std::int64_t Ring::size() const { return impl_->size; }
std::int64_t Ring::modulus() const { return impl_->n; }
int Ring::field_degree() const { return impl_->kind == Kind::Field ? impl_->k : 1; }
const std::vector<Ring>& Ring::factors() const { return impl_->factors; }

std::vector<Elem> Ring::decode(Elem a) const {
  std::vector<Elem> parts(impl_->factors.size());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    parts[j] = a % impl_->factors[j].size();
    a /= impl_->factors[j].size();
  }
  return parts;
}

Elem Ring::encode(const std::vector<Elem>& parts) const {
  Elem a = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) a += parts[j] * impl_->radix[j];
  return a;
}

Elem Ring::one() const {
  switch (impl_->kind) {
    case Kind::Product: {
      Elem a = 0;
      for (std::size_t j = 0; j < impl_->factors.size(); ++j) a += impl_->radix[j];
      return a;
    }
    default: return 1;
  }
}

Elem Ring::from_int(std::int64_t z) const {
  switch (impl_->kind) {
    case Kind::Integers: return z;
    case Kind::ZMod: return mod(z, impl_->n);
    case Kind::Field: return mod(z, impl_->n);
    case Kind::Product: {
      Elem a = 0;
      for (std::size_t j = 0; j < impl_->factors.size(); ++j)
        a += impl_->factors[j].from_int(z) * impl_->radix[j];
      return a;
    }
  }
  return 0;
}

Elem Ring::add(Elem a, Elem b) const {
  switch (impl_->kind) {
    case Kind::Integers: {
      Elem r;
      if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Z");
      return r;
    }
    case Kind::ZMod: {
      Elem r = a + b;
      return r >= impl_->n ? r - impl_->n : r;
    }
    case Kind::Field: return impl_->add_table[a * impl_->size + b];
    case Kind::Product: {
      Elem r = 0;
      for (std::size_t j = 0; j < impl_->factors.size(); ++j) {
        const Ring& f = impl_->factors[j];
        r += f.add(a % f.size(), b % f.size()) * impl_->radix[j];
        a /= f.size(), b /= f.size();
      }
      return r;
    }
  }
  return 0;
}

Elem Ring::neg(Elem a) const {
  switch (impl_->kind) {
    case Kind::Integers:
      if (a == INT64_MIN) throw std::overflow_error("integer overflow in Z");
      return -a;
    case Kind::ZMod: return a == 0 ? 0 : impl_->n - a;
    case Kind::Field: {
      Elem r = 0, scale = 1;
      const int p = static_cast<int>(impl_->n);
      for (int i = 0; i < impl_->k; ++i) {
        r += ((p - a % p) % p) * scale;
        a /= p, scale *= p;
      }
      return r;
    }
    case Kind::Product: {
      Elem r = 0;
      for (std::size_t j = 0; j < impl_->factors.size(); ++j) {
        const Ring& f = impl_->factors[j];
        r += f.neg(a % f.size()) * impl_->radix[j];
        a /= f.size();
      }
      return r;
    }
  }
  return 0;
}

Elem Ring::mul(Elem a, Elem b) const {
  switch (impl_->kind) {
    case Kind::Integers: {
      Elem r;
      if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Z");
      return r;
    }
    case Kind::ZMod: return (a * b) % impl_->n;
    case Kind::Field: return impl_->mul_table[a * impl_->size + b];
    case Kind::Product: {
      Elem r = 0;
      for (std::size_t j = 0; j < impl_->factors.size(); ++j) {
        const Ring& f = impl_->factors[j];
        r += f.mul(a % f.size(), b % f.size()) * impl_->radix[j];
        a /= f.size(), b /= f.size();
      }
      return r;
    }
  }
  return 0;
}

Elem Ring::pow(Elem a, std::int64_t e) const {
  Elem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool Ring::is_unit(Elem a) const {
  switch (impl_->kind) {
    case Kind::Integers: return a == 1 || a == -1;
    case Kind::ZMod: return std::gcd(a, impl_->n) == 1;
    case Kind::Field: return a != 0;
    case Kind::Product: {
      auto parts = decode(a);
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (!impl_->factors[j].is_unit(parts[j])) return false;
      return true;
    }
  }
  return false;
}

Elem Ring::inverse(Elem a) const {
  switch (impl_->kind) {
    case Kind::Integers:
      if (a == 1 || a == -1) return a;
      throw std::domain_error("element is not invertible");
    case Kind::ZMod: return inverse_mod(a, impl_->n);
    case Kind::Field:
      if (a == 0) throw std::domain_error("element is not invertible");
      return impl_->inv_table[a];
    case Kind::Product: {
      auto parts = decode(a);
      for (std::size_t j = 0; j < parts.size(); ++j) parts[j] = impl_->factors[j].inverse(parts[j]);
      return encode(parts);
    }
  }
  return 0;
}

bool Ring::is_valid(Elem a) const {
  if (impl_->kind == Kind::Integers) return true;
  return a >= 0 && a < impl_->size;
}

std::vector<Elem> Ring::additive_generators() const {
  switch (impl_->kind) {
    case Kind::Integers:
    case Kind::ZMod: return {1};
    case Kind::Field: {
      std::vector<Elem> g;
      Elem b = 1;
      for (int i = 0; i < impl_->k; ++i, b *= impl_->n) g.push_back(b);
      return g;
    }
    case Kind::Product: {
      std::vector<Elem> g;
      for (std::size_t j = 0; j < impl_->factors.size(); ++j)
        for (Elem x : impl_->factors[j].additive_generators()) g.push_back(x * impl_->radix[j]);
      return g;
    }
  }
  return {};
}

bool Ring::is_chain_ring() const {
  return (impl_->kind == Kind::ZMod || impl_->kind == Kind::Field) && impl_->prime != 0;
}

int Ring::chain_length() const {
  if (!is_chain_ring()) throw std::logic_error("not a chain ring");
  return impl_->kind == Kind::Field ? 1 : impl_->k;
}

int Ring::valuation(Elem a) const {
  if (impl_->kind == Kind::Field) return a == 0 ? 1 : 0;
  if (a == 0) return impl_->k;
  int v = 0;
  while (a % impl_->prime == 0) a /= impl_->prime, ++v;
  return v;
}

Elem Ring::divide(Elem a, Elem b) const {
  if (a == 0) return 0;
  if (impl_->kind == Kind::Field) return mul(a, inverse(b));
  int vb = valuation(b);
  if (valuation(a) < vb) throw std::domain_error("inexact division");
  Elem scale = 1;
  for (int i = 0; i < vb; ++i) scale *= impl_->prime;
  return mod((a / scale) * inverse_mod(b / scale, impl_->n), impl_->n);
}

Elem Ring::uniformizer_power(int e) const {
  if (impl_->kind == Kind::Field) return e == 0 ? 1 : 0;
  Elem r = 1;
  for (int i = 0; i < e; ++i) r = (r * impl_->prime) % impl_->n;
  return r;
}

// ---------------------------------------------------------------------------

bool is_idempotent_system(const Ring& ring, const IdempotentSystem& system) {
  Elem sum = ring.zero();
  const auto& e = system.idempotents;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (ring.mul(e[i], e[i]) != e[i]) return false;
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (ring.mul(e[i], e[j]) != ring.zero()) return false;
    sum = ring.add(sum, e[i]);
  }
  return sum == ring.one();
}

bool RingHom::is_identity() const {
  if (source != target) return false;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] != static_cast<Elem>(i)) return false;
  return true;
}

RingHom identity_hom(const Ring& ring) {
  RingHom h{ring, ring, {}};
  if (ring.finite()) {
    h.table.resize(ring.size());
    std::iota(h.table.begin(), h.table.end(), Elem{0});
  }
  return h;
}

RingHom compose(const RingHom& outer, const RingHom& inner) {
  if (inner.target != outer.source) throw std::invalid_argument("compose: ring mismatch");
  RingHom h{inner.source, outer.target, {}};
  if (!inner.source.finite())
    throw std::domain_error("composition of maps out of Z is not tabulated");
  h.table.resize(inner.source.size());
  for (Elem a = 0; a < inner.source.size(); ++a) h.table[a] = outer(inner(a));
  return h;
}

namespace {

// Normalized generator of an ideal in an atomic ring.
std::int64_t normalize_generator(const Ring& atom, std::int64_t d) {
  switch (atom.kind()) {
    case Ring::Kind::Integers: return d < 0 ? -d : d;
    case Ring::Kind::ZMod: return std::gcd(d, atom.modulus());
    case Ring::Kind::Field: return d == 0 ? 0 : 1;
    default: throw std::logic_error("not an atomic ring");
  }
}

bool atom_whole(const Ring& atom, std::int64_t d) { return normalize_generator(atom, d) == 1; }

std::vector<Ring> atoms_of(const Ring& ring) {
  if (ring.kind() == Ring::Kind::Product) return ring.factors();
  return {ring};
}

void check_ideal_shape(const Ring& ring, const IdealHandle& ideal) {
  if (ideal.generators.size() != atoms_of(ring).size())
    throw std::invalid_argument("ideal does not match the ring's factor structure");
}

}  // namespace

bool ideal_is_proper(const Ring& ring, const IdealHandle& ideal) {
  check_ideal_shape(ring, ideal);
  auto atoms = atoms_of(ring);
  for (std::size_t j = 0; j < atoms.size(); ++j)
    if (!atom_whole(atoms[j], ideal.generators[j])) return true;
  return false;
}

bool ideal_is_maximal(const Ring& ring, const IdealHandle& ideal) {
  check_ideal_shape(ring, ideal);
  auto atoms = atoms_of(ring);
  int proper = 0;
  bool maximal = false;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    auto d = normalize_generator(atoms[j], ideal.generators[j]);
    if (d == 1) continue;
    ++proper;
    maximal = atoms[j].kind() == Ring::Kind::Field ? true : is_prime(d);
  }
  return proper == 1 && maximal;
}

bool ideal_contains(const Ring& ring, const IdealHandle& ideal, Elem a) {
  check_ideal_shape(ring, ideal);
  auto atoms = atoms_of(ring);
  std::vector<Elem> parts = ring.kind() == Ring::Kind::Product ? ring.decode(a) : std::vector<Elem>{a};
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    auto d = normalize_generator(atoms[j], ideal.generators[j]);
    if (atoms[j].kind() == Ring::Kind::Field) {
      if (d == 0 && parts[j] != 0) return false;
    } else if (d == 0) {
      if (parts[j] != 0) return false;
    } else if (parts[j] % d != 0) {
      return false;
    }
  }
  return true;
}

RingHom residue_map(const Ring& ring, const IdealHandle& ideal) {
  if (!ideal_is_proper(ring, ideal)) throw std::invalid_argument("residue_map: ideal is the whole ring");
  auto atoms = atoms_of(ring);
  std::vector<Ring> targets;
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    auto d = normalize_generator(atoms[j], ideal.generators[j]);
    if (d == 1) continue;
    kept.push_back(j);
    if (atoms[j].kind() == Ring::Kind::Field || d == 0 ||
        (atoms[j].kind() == Ring::Kind::ZMod && d == atoms[j].modulus()))
      targets.push_back(atoms[j]);
    else
      targets.push_back(Ring::zmod(d));
  }
  Ring target = targets.size() == 1 ? targets[0] : Ring::product(targets);
  RingHom h{ring, target, {}};
  if (!ring.finite()) return h;  // canonical Z -> Z/d
  h.table.resize(ring.size());
  for (Elem a = 0; a < ring.size(); ++a) {
    std::vector<Elem> parts = ring.kind() == Ring::Kind::Product ? ring.decode(a) : std::vector<Elem>{a};
    std::vector<Elem> image;
    for (std::size_t t = 0; t < kept.size(); ++t) {
      Elem x = parts[kept[t]];
      image.push_back(targets[t] == atoms[kept[t]] ? x : targets[t].from_int(x));
    }
    h.table[a] = targets.size() == 1 ? image[0] : target.encode(image);
  }
  return h;
}

std::vector<IdealHandle> maximal_ideals(const Ring& ring) {
  if (!ring.finite()) throw std::domain_error("maximal ideals of Z are not enumerated");
  auto atoms = atoms_of(ring);
  std::vector<IdealHandle> out;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    std::vector<std::int64_t> primes;
    if (atoms[j].kind() == Ring::Kind::Field) {
      primes.push_back(0);
    } else {
      for (auto [p, e] : factorize(atoms[j].modulus())) primes.push_back(p);
    }
    for (auto p : primes) {
      IdealHandle I;
      for (std::size_t i = 0; i < atoms.size(); ++i) I.generators.push_back(i == j ? p : 1);
      out.push_back(I);
    }
  }
  return out;
}

std::vector<Elem> CrtSplit::to_factors(Elem a) const {
  std::vector<Elem> parts(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j) parts[j] = projections[j](a);
  return parts;
}

Elem CrtSplit::from_factors(const std::vector<Elem>& parts) const {
  // sum e_j * lift(parts[j]); Z/p^k factors lift through the integer value,
  // product factors through their coordinate, a field is its own factor.
  Elem a = ring.zero();
  for (std::size_t j = 0; j < factors.size(); ++j) {
    Elem lift = 0;
    if (ring.kind() == Ring::Kind::Product) {
      // Locate the preimage inside the coordinate of factor j.
      const auto& table = projections[j].table;
      for (Elem x = 0; x < ring.size(); ++x)
        if (table[x] == parts[j] && ring.mul(x, idempotents.idempotents[j]) == x) {
          lift = x;
          break;
        }
    } else if (ring.kind() == Ring::Kind::Field) {
      lift = parts[j];
    } else {
      lift = ring.from_int(parts[j]);
    }
    a = ring.add(a, ring.mul(idempotents.idempotents[j], lift));
  }
  return a;
}

CrtSplit crt_split(const Ring& ring) {
  CrtSplit s{ring, {}, {}, {}};
  switch (ring.kind()) {
    case Ring::Kind::Integers: throw std::domain_error("crt_split needs a finite ring");
    case Ring::Kind::Field:
      s.factors = {ring};
      s.idempotents.idempotents = {ring.one()};
      s.projections = {identity_hom(ring)};
      return s;
    case Ring::Kind::ZMod: {
      const std::int64_t n = ring.modulus();
      for (auto [p, e] : factorize(n)) {
        std::int64_t q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        Ring f = q == n ? ring : Ring::zmod(q);
        // e == 1 mod q, e == 0 mod n/q
        std::int64_t rest = n / q;
        Elem idem = (rest * inverse_mod(rest % q, q)) % n;
        if (q == n) idem = 1;
        s.factors.push_back(f);
        s.idempotents.idempotents.push_back(idem);
        RingHom proj{ring, f, std::vector<Elem>(n)};
        for (Elem a = 0; a < n; ++a) proj.table[a] = a % q;
        s.projections.push_back(std::move(proj));
      }
      return s;
    }
    case Ring::Kind::Product: {
      const auto& fs = ring.factors();
      for (std::size_t j = 0; j < fs.size(); ++j) {
        CrtSplit inner = crt_split(fs[j]);
        for (std::size_t t = 0; t < inner.factors.size(); ++t) {
          std::vector<Elem> parts(fs.size(), 0);
          parts[j] = inner.idempotents.idempotents[t];
          s.factors.push_back(inner.factors[t]);
          s.idempotents.idempotents.push_back(ring.encode(parts));
          RingHom proj{ring, inner.factors[t], std::vector<Elem>(ring.size())};
          for (Elem a = 0; a < ring.size(); ++a) proj.table[a] = inner.projections[t](ring.decode(a)[j]);
          s.projections.push_back(std::move(proj));
        }
      }
      return s;
    }
  }
  return s;
}

std::vector<RingHom> ring_automorphisms(const Ring& ring) {
  switch (ring.kind()) {
    case Ring::Kind::Integers: throw std::domain_error("enumeration unavailable for infinite rings");
    case Ring::Kind::ZMod: return {identity_hom(ring)};
    case Ring::Kind::Field: {
      std::vector<RingHom> out;
      for (int i = 0; i < ring.field_degree(); ++i) {
        RingHom h{ring, ring, std::vector<Elem>(ring.size())};
        std::int64_t e = 1;
        for (int j = 0; j < i; ++j) e *= ring.modulus();
        for (Elem a = 0; a < ring.size(); ++a) h.table[a] = ring.pow(a, e);
        out.push_back(std::move(h));
      }
      return out;
    }
    case Ring::Kind::Product: {
      const auto& fs = ring.factors();
      const std::size_t m = fs.size();
      std::vector<std::vector<RingHom>> per;
      for (const Ring& f : fs) per.push_back(ring_automorphisms(f));
      std::vector<std::size_t> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<RingHom> out;
      do {
        bool ok = true;
        for (std::size_t j = 0; j < m; ++j)
          if (fs[perm[j]] != fs[j]) ok = false;
        if (!ok) continue;
        std::vector<std::size_t> choice(m, 0);
        while (true) {
          RingHom h{ring, ring, std::vector<Elem>(ring.size())};
          for (Elem a = 0; a < ring.size(); ++a) {
            auto parts = ring.decode(a);
            std::vector<Elem> image(m);
            for (std::size_t j = 0; j < m; ++j) image[perm[j]] = per[j][choice[j]](parts[j]);
            h.table[a] = ring.encode(image);
          }
          out.push_back(std::move(h));
          std::size_t j = 0;
          while (j < m && ++choice[j] == per[j].size()) choice[j++] = 0;
          if (j == m) break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return out;
    }
  }
  return {};
}

bool is_ring_automorphism(const RingHom& map) {
  const Ring& r = map.source;
  if (map.target != r || !r.finite() || static_cast<std::int64_t>(map.table.size()) != r.size())
    return false;
  std::vector<char> hit(r.size(), 0);
  for (Elem a = 0; a < r.size(); ++a) {
    if (!r.is_valid(map.table[a]) || hit[map.table[a]]) return false;
    hit[map.table[a]] = 1;
  }
  if (map(r.one()) != r.one()) return false;
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b) {
      if (map(r.add(a, b)) != r.add(map(a), map(b))) return false;
      if (map(r.mul(a, b)) != r.mul(map(a), map(b))) return false;
    }
  return true;
}

RingHom extend_additively(const Ring& ring, const std::vector<Elem>& images) {
  auto gens = ring.additive_generators();
  if (images.size() != gens.size())
    throw std::invalid_argument("extend_additively: one image per additive generator expected");
  RingHom h{ring, ring, std::vector<Elem>(ring.size(), -1)};
  h.table[0] = 0;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Elem y = ring.add(x, gens[j]);
      Elem v = ring.add(h.table[x], images[j]);
      if (h.table[y] < 0) {
        h.table[y] = v;
        queue.push_back(y);
      } else if (h.table[y] != v) {
        throw std::invalid_argument("generator images are not additively consistent");
      }
    }
  }
  return h;
}

}  // namespace chev
