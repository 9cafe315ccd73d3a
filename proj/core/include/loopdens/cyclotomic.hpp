#pragma once

#include "loopdens/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace loopdens {

class BigComplex;

/// Element a + b*q of the field Q(q), q = exp(i*pi/3). All arithmetic
/// reduces through the minimal polynomial q^2 = q - 1, so each field
/// element has exactly one (a, b) representation.
///
/// Useful identities, all consequences of q^2 = q - 1:
///   q^3 = -1, q^6 = 1, q^{-1} = 1 - q = conj(q), q^{-2} = -q,
///   i*sqrt(3) = 2q - 1, (1+q)^2 = 3q, (2-q)(1+q) = 3.
struct CycNum {
    Rational a;
    Rational b;

    CycNum() : a(0), b(0) {}
    CycNum(long v) : a(v), b(0) {} // NOLINT: implicit by design
    CycNum(Rational ra) : a(std::move(ra)), b(0) {}
    CycNum(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

    static CycNum q() { return {Rational(0), Rational(1)}; }
    static CycNum q_inv() { return {Rational(1), Rational(-1)}; } // 1 - q
    static CycNum i_sqrt3() { return {Rational(-1), Rational(2)}; } // 2q - 1
    static CycNum ratio(long num, long den);

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    /// Field norm N(a+bq) = a^2 + ab + b^2; equals |a+bq|^2 and vanishes
    /// only at zero.
    Rational norm() const;

    /// Complex conjugate: a + bq |-> (a+b) - bq, since conj(q) = 1 - q.
    CycNum conj() const { return {a + b, -b}; }

    CycNum inv() const; // throws division_by_zero_error at zero
    CycNum pow(long k) const;

    /// Returns a when b = 0; otherwise the value is not real and a
    /// non_real_error is thrown (an algebra bug upstream).
    Rational as_rational() const;

    /// Embedding into C with at least `digits` correct decimal digits:
    /// a + b*(1/2 + i*sqrt(3)/2).
    BigComplex to_complex(long digits) const;

    std::string str() const; // "a+b*q" with rationals as "num/den"
    static CycNum parse(std::string_view s); // exact round-trip of str()
};

CycNum operator+(const CycNum& x, const CycNum& y);
CycNum operator-(const CycNum& x, const CycNum& y);
CycNum operator-(const CycNum& x);
CycNum operator*(const CycNum& x, const CycNum& y);
CycNum operator/(const CycNum& x, const CycNum& y);
bool operator==(const CycNum& x, const CycNum& y);
inline bool operator!=(const CycNum& x, const CycNum& y) { return !(x == y); }

std::ostream& operator<<(std::ostream& os, const CycNum& x);

inline bool field_is_zero(const CycNum& x) { return x.is_zero(); }
inline CycNum field_scale_by_int(const CycNum& x, long k) { return CycNum(k) * x; }

} // namespace loopdens
