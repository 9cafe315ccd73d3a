#pragma once

#include <string>

#include "loopdens/lattice.hpp"
#include "loopdens/linalg.hpp"
#include "loopdens/phi.hpp"
#include "loopdens/polynomial.hpp"

namespace loopdens {

struct LinearSystem {
    Matrix<CycNum> matrix;
    std::vector<CycNum> rhs;
};

/// Coefficient system for the monic degree-p polynomial solutions of the
/// shifted functional equations at the stochastic point. Row k encodes
///   sum_r phi_r x_{3k+shift-r} (-1)^r = 0,  k = 0..p-1,
/// over the unknowns x_0..x_{p-1}; the known x_p = 1 contribution moves to
/// the right-hand side. shift = 1 yields the Q-system, shift = 2 the
/// P-system.
LinearSystem build_linear_system(const LatticeParams& params, int shift);

template <class F>
struct QPPair {
    LatticeParams params;
    Polynomial<F> q_poly;
    Polynomial<F> p_poly;
    long digits = 0; // 0 marks the exact backend
};

using ExactQP = QPPair<CycNum>;
using FloatQP = QPPair<BigComplex>;

/// Solve both systems exactly over Q(q), assemble monic polynomials and
/// verify the Wronskian and T identities before returning. Throws
/// singular_matrix_error or verification_error.
ExactQP solve_qp_exact(const LatticeParams& params);

/// Float backend with precision escalation; verification is algebraic
/// (Wronskian identity sampled at 2p+1 points), not residual-only.
FloatQP solve_qp_float(const LatticeParams& params, long digits);
FloatQP solve_qp_float(const LatticeParams& params, const PrecisionPolicy& policy);

/// Quantum Wronskian: Phi(u)(q - 1/q) = q Q(qu) P(u/q) - (1/q) Q(u/q) P(qu)
/// as an exact polynomial identity.
bool verify_wronskian(const ExactQP& pair);
/// Same identity sampled at 2p+1 points on a circle, relative error below
/// 10^(-digits/2).
bool verify_wronskian(const FloatQP& pair);

/// T-identity with T(u) = Phi(-u):
/// Phi(-u)(q - 1/q) = q^2 Q(q^2 u) P(u/q^2) - q^{-2} Q(u/q^2) P(q^2 u).
bool verify_t_identity(const ExactQP& pair);
bool verify_t_identity(const FloatQP& pair);

std::string qp_to_json(const ExactQP& pair);
std::string qp_to_json(const FloatQP& pair);

} // namespace loopdens
