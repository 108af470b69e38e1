#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chev/group.hpp"

namespace chev {

/// Which formula reconstructs X_alpha from the unipotent x_alpha(1).
enum class RecoveryRegime { WithHalf, G2ShortWithSixth, SimplyLacedNoHalf };

const char* regime_name(RecoveryRegime regime);

/// Regime applicable to (system, ring, alpha), if any. G2 short roots need
/// 1/2 and 1/3, other roots of non-simply-laced systems and A2 need 1/2,
/// simply-laced systems of rank >= 3 need nothing.
std::optional<RecoveryRegime> select_regime(const RootSystem& sys, const Ring& ring, int alpha);

/// X = U - U^2/2 with U = x - E. Requires 1/2 and X_alpha^3 = 0.
Matrix recover_with_half(const AdjointAlgebra& alg, const GroupElement& x, int alpha);

/// X^3 = U^3, X^2/2 = U^2/2 - X^3/2, X = U - X^2/2 - X^3/6 for a short G2
/// root. Requires 1/2 and 1/3.
Matrix recover_g2_short(const AdjointAlgebra& alg, const GroupElement& x, int alpha);

/// First pair (gamma, beta) in enumeration order with gamma + beta = alpha.
std::optional<std::pair<int, int>> decomposition_witness(const RootSystem& sys, int alpha);

/// Sign c with ((x_gamma(1) - E)(x_beta(1) - E))^2 = c X_alpha^2 / 2 over Z
/// for the witness pair of alpha.
int no_half_sign(const AdjointAlgebra& alg, int alpha);

/// X = U - c T with T = ((x_gamma(1) - E)(x_beta(1) - E))^2. The family holds
/// the images of x_beta(1) for every root, indexed by root. Works over any
/// ring for simply-laced systems of rank >= 3.
Matrix recover_no_half(const AdjointAlgebra& alg, const std::vector<GroupElement>& family, int alpha);

/// Recovers every X_alpha from the family of images of x_alpha(1), choosing
/// the regime per root. Empty when some root has no applicable regime.
std::optional<std::vector<Matrix>> recover_all(const AdjointAlgebra& alg,
                                               const std::vector<GroupElement>& family);

}  // namespace chev
