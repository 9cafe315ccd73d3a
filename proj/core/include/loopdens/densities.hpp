#pragma once

#include "loopdens/bigcomplex.hpp"
#include "loopdens/lattice.hpp"
#include "loopdens/tq.hpp"

namespace loopdens {

enum class Backend { exact, floating };

struct DensityResult {
    LatticeParams params;
    Backend mode = Backend::exact;
    long digits = 0; // float backend working precision; 0 in exact mode

    // exact mode
    Rational nu_c_exact;
    Rational nu_nc_exact;
    Rational nu_exact;

    // float mode
    BigFloat nu_c_num;
    BigFloat nu_nc_num;
    BigFloat nu_num;

    double nu_c() const;
    double nu_nc() const;
    double nu() const;
    BigFloat nu_highprec(long digits_out) const;
};

/// Derivative kernel A(u0): the explicit-argument part of the q-derivative
/// of the T reconstruction, expressed through Q, P and their derivatives.
/// With q^{-3} = -1 folded in:
///   A(u) = u/(q-1/q) * { q^2 [ q Q'(q^2 u) P(u/q^2) + Q(q^2 u) P'(u/q^2) ]
///                      - q^{-2} [ q Q(u/q^2) P'(q^2 u) + Q'(u/q^2) P(q^2 u) ] }.
CycNum kernel_a(const ExactQP& pair, const CycNum& u0);
BigComplex kernel_a(const FloatQP& pair, const BigComplex& u0);

/// Bracket B(u0) = q^2 Q(q^2 u0) P(u0/q^2) + q^{-2} Q(u0/q^2) P(q^2 u0);
/// the twist-derivative kernel enters the densities only through this
/// combination, so no standalone i or sqrt(3) ever appears in exact mode.
CycNum kernel_bracket(const ExactQP& pair, const CycNum& u0);
BigComplex kernel_bracket(const FloatQP& pair, const BigComplex& u0);

/// Largest transfer-matrix eigenvalue reconstructed from T(u0) = Phi(-u0).
/// The vertex weights carry per-site square roots sqrt(u/q) and sqrt(u)
/// (principal branch), so the reconstruction keeps them separate:
///   Lambda(u) = T(u) sqrt(u/q)^{-ml} sqrt(u)^{-nl} i^L (-1)^p q^{nl-p}.
/// Collapsing them into a principal u^{p/2} would misplace the phase at
/// complex u (it agrees at u = 1).
BigComplex eigenvalue_from_t(const LatticeParams& params, const BigComplex& u0,
                             const BigComplex& t_value);

/// Full density computation: solves the Q/P systems on the requested
/// backend, evaluates the kernels at u = 1 and u = 1/q and assembles
///   nu_c  = (1/(m^2+n^2)) [ -(i sqrt3 q^{ln+1}/l) ( m A(1)/(2^{lm}(1+q)^{ln})
///             + n q^{lm} A(1/q)/(2^{ln}(1+q)^{lm}) ) + (m+n)^2/2 ]
///   nu_nc = -(1/(l(m^2+n^2))) [ m B(1)/T(1) + n B(1/q)/T(1/q) ]
/// with T(u) = Phi(-u), i sqrt3 = 2q-1. Results must come out real
/// (zero q-part exactly, or |Im| < 10^(-digits/2)); non_real_error
/// otherwise. Throws verification_error if a density leaves (0, 1).
DensityResult compute_density(const LatticeParams& params, Backend backend, long digits = 0);

} // namespace loopdens
