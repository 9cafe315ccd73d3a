#include "loopdens/bigcomplex.hpp"

namespace loopdens {

BigComplex BigComplex::from_real(BigFloat r) {
    long d = r.digits();
    return {std::move(r), BigFloat(d)};
}

BigComplex BigComplex::polar(const BigFloat& r, const BigFloat& theta) {
    return {r * cos(theta), r * sin(theta)};
}

BigComplex BigComplex::i(long digits) {
    return {BigFloat(digits), BigFloat(1L, digits)};
}

BigFloat BigComplex::abs() const {
    BigFloat out(digits());
    mpfr_hypot(out.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return out;
}

BigFloat BigComplex::arg() const {
    return atan2(im, re);
}

BigComplex BigComplex::inv() const {
    BigFloat n = norm_sq();
    return {re / n, -im / n};
}

BigComplex BigComplex::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    BigComplex base = *this;
    BigComplex acc(digits());
    acc.re = BigFloat(1L, digits());
    unsigned long e = static_cast<unsigned long>(k);
    while (e != 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

std::string BigComplex::str(long out_digits) const {
    std::string s = re.str(out_digits);
    s += im.sign() < 0 ? "-" : "+";
    s += abs(im).str(out_digits) + "i";
    return s;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    *this = *this * o;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    *this = *this / o;
    return *this;
}

BigComplex operator+(const BigComplex& x, const BigComplex& y) {
    return {x.re + y.re, x.im + y.im};
}

BigComplex operator-(const BigComplex& x, const BigComplex& y) {
    return {x.re - y.re, x.im - y.im};
}

BigComplex operator-(const BigComplex& x) {
    return {-x.re, -x.im};
}

BigComplex operator*(const BigComplex& x, const BigComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

BigComplex operator/(const BigComplex& x, const BigComplex& y) {
    BigFloat n = y.norm_sq();
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
}

BigComplex operator*(const BigFloat& s, const BigComplex& x) {
    return {s * x.re, s * x.im};
}

bool operator==(const BigComplex& x, const BigComplex& y) {
    return x.re == y.re && x.im == y.im;
}

BigComplex sqrt(const BigComplex& x) {
    if (x.is_zero()) return BigComplex(x.digits());
    BigFloat r = sqrt(x.abs());
    BigFloat half(0.5, x.digits());
    return BigComplex::polar(r, x.arg() * half);
}

BigComplex log(const BigComplex& x) {
    return {log(x.abs()), x.arg()};
}

BigComplex exp(const BigComplex& x) {
    return BigComplex::polar(exp(x.re), x.im);
}

} // namespace loopdens
