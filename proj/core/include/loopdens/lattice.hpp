#pragma once

#include <string>

namespace loopdens {

/// Tilt integers (m, n) and circumference parameter l of the cylinder.
/// Constraints: m, n >= 0 and not both zero, gcd(m, n) = 1, l a positive
/// even integer. The lattice has L = l(m+n) sites per transfer-matrix row
/// and the ground-state sector holds p = L/2 up arrows. The tilt angle is
/// alpha = arctan(m/n).
struct LatticeParams {
    int m = 0;
    int n = 1;
    int l = 2;

    LatticeParams() = default;
    LatticeParams(int m_, int n_, int l_); // throws std::invalid_argument

    int sites() const { return l * (m + n); } // L
    int half_sites() const { return sites() / 2; } // p
    double alpha() const;
    double scaled_length_sq() const; // s^2 = l^2 (m^2 + n^2) / 2

    /// The construction assumes m <= n; m > n is accepted (the m<->n
    /// symmetry is tested, not assumed) but flagged so callers can warn.
    bool reversed_tilt() const { return m > n; }

    std::string str() const; // "(m,n,l)"
};

bool operator==(const LatticeParams& x, const LatticeParams& y);
inline bool operator!=(const LatticeParams& x, const LatticeParams& y) { return !(x == y); }

} // namespace loopdens
