#pragma once

#include "loopdens/cyclotomic.hpp"
#include "loopdens/lattice.hpp"
#include "loopdens/polynomial.hpp"

namespace loopdens {

/// Coefficients of Phi(u) = (u-1)^{ml} (u-1/q)^{nl} through the explicit
/// binomial sum
///   phi_k = (-q)^{k-nl} * sum_s C(nl, k-s) C(ml, s) q^{-s},
/// s running over max(0, k-nl) .. min(k, ml). Monic of degree 2p.
Polynomial<CycNum> phi_coefficients(const LatticeParams& params);

/// Phi(u) built by repeated polynomial multiplication of the two linear
/// factors. Must agree with phi_coefficients exactly; kept as a permanent
/// cross-check of the sign conventions in the binomial sum.
Polynomial<CycNum> phi_product_form(const LatticeParams& params);

} // namespace loopdens
