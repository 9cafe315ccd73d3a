#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "loopdens/rational.hpp"

namespace loopdens {

/// Arbitrary-precision real number on top of MPFR. Precision is tracked in
/// decimal digits (>= 16); binary working precision carries a small guard.
/// Binary operations produce results at the larger of the two operand
/// precisions. All roundings are to nearest.
class BigFloat {
public:
    static constexpr long min_digits = 16;

    BigFloat() : BigFloat(min_digits) {}
    explicit BigFloat(long digits);
    BigFloat(double v, long digits);
    BigFloat(long v, long digits);
    BigFloat(const Rational& v, long digits);

    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    long digits() const { return digits_; }

    double to_double() const;
    /// Decimal string "-d.ddd...e±XX"; out_digits = 0 prints the full
    /// working precision.
    std::string str(long out_digits = 0) const;
    static BigFloat from_string(std::string_view s, long digits);

    bool is_zero() const;
    int sign() const;
    int cmp(const BigFloat& o) const;

    static BigFloat pi(long digits);
    static BigFloat sqrt_ui(unsigned long x, long digits);
    static BigFloat pow10(long e, long digits); // 10^e

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    friend BigFloat operator+(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator-(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator-(const BigFloat& x);
    friend BigFloat operator*(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator/(const BigFloat& x, const BigFloat& y);

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat sqrt(const BigFloat& x);
    friend BigFloat log(const BigFloat& x);
    friend BigFloat exp(const BigFloat& x);
    friend BigFloat sin(const BigFloat& x);
    friend BigFloat cos(const BigFloat& x);
    friend BigFloat abs(const BigFloat& x);
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x);
    friend BigFloat pow_si(const BigFloat& x, long k);

private:
    static long bits_for(long digits);
    static BigFloat with_digits(long digits);

    mpfr_t v_;
    long digits_;
};

inline bool operator==(const BigFloat& x, const BigFloat& y) { return x.cmp(y) == 0; }
inline bool operator!=(const BigFloat& x, const BigFloat& y) { return x.cmp(y) != 0; }
inline bool operator<(const BigFloat& x, const BigFloat& y) { return x.cmp(y) < 0; }
inline bool operator<=(const BigFloat& x, const BigFloat& y) { return x.cmp(y) <= 0; }
inline bool operator>(const BigFloat& x, const BigFloat& y) { return x.cmp(y) > 0; }
inline bool operator>=(const BigFloat& x, const BigFloat& y) { return x.cmp(y) >= 0; }

} // namespace loopdens
