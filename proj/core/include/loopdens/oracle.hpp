#pragma once

#include <cstdint>
#include <vector>

#include "loopdens/bigcomplex.hpp"
#include "loopdens/lattice.hpp"

namespace loopdens {

/// Brute-force verification path: inhomogeneous six-vertex transfer
/// matrices at generic q = e^{i theta} and twist phi, leading eigenvalue by
/// power iteration in the half-filled sector, densities by central finite
/// differences of the free energy. Independent of the Q/P machinery.
struct OracleConfig {
    LatticeParams params;
    long digits = 60;
    double fd_step = 1e-4;      // in [1e-6, 1e-2]
    long eig_tol_exponent = 40; // stop when Rayleigh quotients agree to 10^-exp
    long max_iter = 200000;

    bool valid() const {
        return params.sites() <= 14 && fd_step >= 1e-6 && fd_step <= 1e-2 && digits >= 16 &&
               eig_tol_exponent >= 1 && max_iter >= 1;
    }
};

struct VertexWeights {
    BigComplex a1, a2, b1, b2, c1, c2;
};

/// Six-vertex weights at spectral argument u with the e^{+-i phi/L} twist
/// phases attached to the a- and b-types; c-weights are untwisted.
VertexWeights vertex_weights(const BigComplex& u, const BigFloat& theta, const BigFloat& phi,
                             int sites);

/// Apply the row transfer matrix V(u) to a state of dimension 2^L by
/// carrying the two-dimensional auxiliary space across the sites (l groups
/// of m sites at argument u/q followed by n sites at argument u) and
/// tracing at the end. Cost O(L 2^L).
std::vector<BigComplex> transfer_apply(const LatticeParams& params, const BigComplex& u,
                                       const BigFloat& theta, const BigFloat& phi,
                                       const std::vector<BigComplex>& state);

/// Bitmasks of the p-up-arrow sector, ascending.
std::vector<std::uint32_t> sector_states(int sites, int up);

struct LeadingEigen {
    BigComplex lambda_at_inv_q; // Lambda(1/q)
    BigComplex lambda_at_one;   // Lambda(1)
    long iterations = 0;
};

/// Power iteration on [V(1/q)]^n [V(1)]^m restricted to the half-filled
/// sector; individual Lambda values are Rayleigh quotients of each V on
/// the converged vector. Throws non_convergence_error past max_iter.
LeadingEigen leading_eigenvalue(const LatticeParams& params, const BigFloat& theta,
                                const BigFloat& phi, long digits, long eig_tol_exponent,
                                long max_iter);

/// Per-site free energy at (theta, phi):
///   f = Re[ n log Lambda(1/q) + m log Lambda(1) ] / ((m^2+n^2) l)
///       - 2nm log(2 cos(theta/2)) / (m^2+n^2).
BigFloat oracle_free_energy(const LatticeParams& params, const BigFloat& theta,
                            const BigFloat& phi, long digits, long eig_tol_exponent,
                            long max_iter);

struct OracleDensities {
    BigFloat nu_c;
    BigFloat nu_nc;
};

/// Central differences of f in theta and phi with one step-halving
/// Richardson extrapolation; chain rule through the loop weights
/// w = 2cos(theta), v = 2cos(phi).
OracleDensities oracle_densities(const OracleConfig& config);

} // namespace loopdens
