#include "loopdens/cyclotomic.hpp"

#include <ostream>

#include "loopdens/bigcomplex.hpp"
#include "loopdens/errors.hpp"

namespace loopdens {

CycNum CycNum::ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return CycNum(std::move(r));
}

Rational CycNum::norm() const {
    return a * a + a * b + b * b;
}

CycNum CycNum::inv() const {
    Rational n = norm();
    if (n == 0) throw division_by_zero_error("CycNum::inv of zero");
    return {(a + b) / n, -b / n};
}

CycNum CycNum::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    CycNum base = *this;
    CycNum acc(1L);
    unsigned long e = static_cast<unsigned long>(k);
    while (e != 0) {
        if (e & 1UL) acc = acc * base;
        base = base * base;
        e >>= 1UL;
    }
    return acc;
}

Rational CycNum::as_rational() const {
    if (b != 0) throw non_real_error("value has nonzero q-part: " + str());
    return a;
}

BigComplex CycNum::to_complex(long digits) const {
    BigFloat fa(a, digits);
    BigFloat fb(b, digits);
    BigFloat half(Rational(1, 2), digits);
    BigFloat s3 = BigFloat::sqrt_ui(3, digits);
    return {fa + fb * half, fb * s3 * half};
}

std::string CycNum::str() const {
    return rational_str(a) + "+" + rational_str(b) + "*q";
}

CycNum CycNum::parse(std::string_view s) {
    // format "<a>+<b>*q"; '+' cannot occur inside a rational, so the first
    // one is the separator.
    auto plus = s.find('+');
    if (plus == std::string_view::npos || s.size() < plus + 3 || s.substr(s.size() - 2) != "*q")
        throw parse_error("bad CycNum: " + std::string(s));
    Rational ra = parse_rational(s.substr(0, plus));
    Rational rb = parse_rational(s.substr(plus + 1, s.size() - plus - 3));
    return {std::move(ra), std::move(rb)};
}

CycNum operator+(const CycNum& x, const CycNum& y) {
    return {x.a + y.a, x.b + y.b};
}

CycNum operator-(const CycNum& x, const CycNum& y) {
    return {x.a - y.a, x.b - y.b};
}

CycNum operator-(const CycNum& x) {
    return {-x.a, -x.b};
}

CycNum operator*(const CycNum& x, const CycNum& y) {
    // (a+bq)(c+dq) = ac + (ad+bc) q + bd q^2 = (ac - bd) + (ad + bc + bd) q
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}

CycNum operator/(const CycNum& x, const CycNum& y) {
    return x * y.inv();
}

bool operator==(const CycNum& x, const CycNum& y) {
    return x.a == y.a && x.b == y.b;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) {
    return os << x.str();
}

} // namespace loopdens
