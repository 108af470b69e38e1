#include "chev/recover.hpp"

#include <stdexcept>

namespace chev {

const char* regime_name(RecoveryRegime regime) {
  switch (regime) {
    case RecoveryRegime::WithHalf: return "with-half";
    case RecoveryRegime::G2ShortWithSixth: return "g2-short-with-sixth";
    case RecoveryRegime::SimplyLacedNoHalf: return "simply-laced-no-half";
  }
  return "";
}

std::optional<RecoveryRegime> select_regime(const RootSystem& sys, const Ring& ring, int alpha) {
  if (sys.kind() == 'G' && !sys.is_long(alpha)) {
    if (ring.has_half() && ring.has_third()) return RecoveryRegime::G2ShortWithSixth;
    return std::nullopt;
  }
  if (ring.has_half()) return RecoveryRegime::WithHalf;
  if (sys.simply_laced() && sys.rank() >= 3) return RecoveryRegime::SimplyLacedNoHalf;
  return std::nullopt;
}

namespace {

Matrix shifted(const GroupElement& x) {
  const Ring& r = x.ring();
  return mat_sub(r, x.matrix(), identity_matrix(r, x.dimension()));
}

}  // namespace

Matrix recover_with_half(const AdjointAlgebra& alg, const GroupElement& x, int alpha) {
  const Ring& r = x.ring();
  if (!r.has_half()) throw std::domain_error("recover_with_half: 2 is not invertible in " + r.descriptor());
  if (alg.nilpotency_index(alpha) > 3)
    throw std::invalid_argument("recover_with_half: X_alpha^3 != 0 for this root");
  Matrix u = shifted(x);
  Elem half = r.inverse(r.from_int(2));
  return mat_sub(r, u, mat_scale(r, half, mat_mul(r, u, u)));
}

Matrix recover_g2_short(const AdjointAlgebra& alg, const GroupElement& x, int alpha) {
  const RootSystem& sys = alg.system();
  const Ring& r = x.ring();
  if (sys.kind() != 'G' || sys.is_long(alpha))
    throw std::invalid_argument("recover_g2_short: alpha must be a short root of G2");
  if (!r.has_half() || !r.has_third())
    throw std::domain_error("recover_g2_short: 2 and 3 must be invertible in " + r.descriptor());
  Elem half = r.inverse(r.from_int(2));
  Elem sixth = r.inverse(r.from_int(6));
  Matrix u = shifted(x);
  Matrix u2 = mat_mul(r, u, u);
  Matrix x3 = mat_mul(r, u2, u);
  Matrix x2_half = mat_sub(r, mat_scale(r, half, u2), mat_scale(r, half, x3));
  return mat_sub(r, mat_sub(r, u, x2_half), mat_scale(r, sixth, x3));
}

std::optional<std::pair<int, int>> decomposition_witness(const RootSystem& sys, int alpha) {
  for (int g = 0; g < static_cast<int>(sys.size()); ++g) {
    int b = sys.sum_index(alpha, sys.negative(g));
    if (b >= 0 && b != sys.negative(g)) return std::make_pair(g, b);
  }
  return std::nullopt;
}

int no_half_sign(const AdjointAlgebra& alg, int alpha) {
  auto w = decomposition_witness(alg.system(), alpha);
  if (!w) throw std::invalid_argument("no_half_sign: alpha is not a sum of two roots");
  const Ring z = Ring::integers();
  Matrix a = shifted(unipotent(alg, z, w->first, 1));
  Matrix b = shifted(unipotent(alg, z, w->second, 1));
  Matrix p = mat_mul(z, a, b);
  Matrix t = mat_mul(z, p, p);
  const IntMatrix& d = alg.divided_power(alpha, 2);
  for (int c : {1, -1})
    if (t == mat_scale(z, c, d)) return c;
  throw std::logic_error("no_half_sign: square is not +-X_alpha^2/2");
}

Matrix recover_no_half(const AdjointAlgebra& alg, const std::vector<GroupElement>& family, int alpha) {
  const RootSystem& sys = alg.system();
  if (!sys.simply_laced() || sys.rank() < 3)
    throw std::invalid_argument("recover_no_half: needs a simply-laced system of rank >= 3");
  if (family.size() != sys.size()) throw std::invalid_argument("recover_no_half: one image per root expected");
  auto w = decomposition_witness(sys, alpha);
  if (!w) throw std::invalid_argument("recover_no_half: alpha is not a sum of two roots");
  const Ring& r = family[alpha].ring();
  Matrix p = mat_mul(r, shifted(family[w->first]), shifted(family[w->second]));
  Matrix t = mat_mul(r, p, p);
  return mat_sub(r, shifted(family[alpha]), mat_scale(r, r.from_int(no_half_sign(alg, alpha)), t));
}

std::optional<std::vector<Matrix>> recover_all(const AdjointAlgebra& alg,
                                               const std::vector<GroupElement>& family) {
  const RootSystem& sys = alg.system();
  if (family.size() != sys.size()) throw std::invalid_argument("recover_all: one image per root expected");
  std::vector<Matrix> out;
  for (int a = 0; a < alg.num_roots(); ++a) {
    auto regime = select_regime(sys, family[a].ring(), a);
    if (!regime) return std::nullopt;
    switch (*regime) {
      case RecoveryRegime::WithHalf: out.push_back(recover_with_half(alg, family[a], a)); break;
      case RecoveryRegime::G2ShortWithSixth: out.push_back(recover_g2_short(alg, family[a], a)); break;
      case RecoveryRegime::SimplyLacedNoHalf: out.push_back(recover_no_half(alg, family, a)); break;
    }
  }
  return out;
}

}  // namespace chev
