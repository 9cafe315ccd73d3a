#pragma once

#include <string>

#include "loopdens/bigfloat.hpp"

namespace loopdens {

/// Arbitrary-precision complex number; components share the BigFloat
/// precision rules. Square roots, logarithms and fractional powers use the
/// principal branch, argument in (-pi, pi].
class BigComplex {
public:
    BigFloat re;
    BigFloat im;

    BigComplex() = default;
    explicit BigComplex(long digits) : re(digits), im(digits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, long digits) : re(r, digits), im(i, digits) {}

    static BigComplex from_real(BigFloat r);
    static BigComplex polar(const BigFloat& r, const BigFloat& theta);
    static BigComplex i(long digits);

    long digits() const { return re.digits() > im.digits() ? re.digits() : im.digits(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex conj() const { return {re, -im}; }
    BigFloat norm_sq() const { return re * re + im * im; }
    BigFloat abs() const;
    BigFloat arg() const; // principal, (-pi, pi]
    BigComplex inv() const;
    BigComplex pow(long k) const;

    std::string str(long out_digits = 0) const; // "re" "+/-" "im i"

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
};

BigComplex operator+(const BigComplex& x, const BigComplex& y);
BigComplex operator-(const BigComplex& x, const BigComplex& y);
BigComplex operator-(const BigComplex& x);
BigComplex operator*(const BigComplex& x, const BigComplex& y);
BigComplex operator/(const BigComplex& x, const BigComplex& y);
BigComplex operator*(const BigFloat& s, const BigComplex& x);
bool operator==(const BigComplex& x, const BigComplex& y);
inline bool operator!=(const BigComplex& x, const BigComplex& y) { return !(x == y); }

BigComplex sqrt(const BigComplex& x); // principal
BigComplex log(const BigComplex& x);  // principal
BigComplex exp(const BigComplex& x);

inline bool field_is_zero(const BigComplex& x) { return x.is_zero(); }
inline BigComplex field_scale_by_int(const BigComplex& x, long k) {
    return BigFloat(k, x.digits()) * x;
}

} // namespace loopdens
