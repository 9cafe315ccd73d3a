#include "loopdens/bigfloat.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "loopdens/errors.hpp"

namespace loopdens {

namespace {
constexpr double log2_10 = 3.321928094887362;
}

long BigFloat::bits_for(long digits) {
    if (digits < min_digits) digits = min_digits;
    return static_cast<long>(std::ceil(static_cast<double>(digits) * log2_10)) + 32;
}

BigFloat::BigFloat(long digits) : digits_(digits < min_digits ? min_digits : digits) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, long digits) : BigFloat(digits) {
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v, long digits) : BigFloat(digits) {
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& v, long digits) : BigFloat(digits) {
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
    }
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

double BigFloat::to_double() const {
    return mpfr_get_d(v_, MPFR_RNDN);
}

std::string BigFloat::str(long out_digits) const {
    if (out_digits <= 0) out_digits = digits_;
    if (mpfr_zero_p(v_)) return "0";
    if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(out_digits), v_, MPFR_RNDN);
    std::string ds(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!ds.empty() && ds[0] == '-') {
        sign = "-";
        ds.erase(0, 1);
    }
    // mantissa 0.ddd * 10^e -> d.dd...e(e-1)
    std::string out = sign + ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(e - 1);
    return out;
}

BigFloat BigFloat::from_string(std::string_view s, long digits) {
    BigFloat out(digits);
    if (mpfr_set_str(out.v_, std::string(s).c_str(), 10, MPFR_RNDN) != 0)
        throw parse_error("bad float literal: " + std::string(s));
    return out;
}

bool BigFloat::is_zero() const {
    return mpfr_zero_p(v_) != 0;
}

int BigFloat::sign() const {
    return mpfr_sgn(v_);
}

int BigFloat::cmp(const BigFloat& o) const {
    return mpfr_cmp(v_, o.v_);
}

BigFloat BigFloat::pi(long digits) {
    BigFloat out(digits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sqrt_ui(unsigned long x, long digits) {
    BigFloat out(digits);
    mpfr_sqrt_ui(out.v_, x, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow10(long e, long digits) {
    BigFloat out(digits);
    mpfr_ui_pow_ui(out.v_, 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(out.v_, 1, out.v_, MPFR_RNDN);
    return out;
}

namespace {
inline long max_digits(const BigFloat& x, const BigFloat& y) {
    return x.digits() > y.digits() ? x.digits() : y.digits();
}
} // namespace

BigFloat operator+(const BigFloat& x, const BigFloat& y) {
    BigFloat out(max_digits(x, y));
    mpfr_add(out.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& x, const BigFloat& y) {
    BigFloat out(max_digits(x, y));
    mpfr_sub(out.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& x) {
    BigFloat out(x.digits());
    mpfr_neg(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator*(const BigFloat& x, const BigFloat& y) {
    BigFloat out(max_digits(x, y));
    mpfr_mul(out.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat& x, const BigFloat& y) {
    BigFloat out(max_digits(x, y));
    mpfr_div(out.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    if (o.digits_ > digits_) return *this = *this + o;
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    if (o.digits_ > digits_) return *this = *this - o;
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    if (o.digits_ > digits_) return *this = *this * o;
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    if (o.digits_ > digits_) return *this = *this / o;
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat out(x.digits());
    mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat log(const BigFloat& x) {
    BigFloat out(x.digits());
    mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat exp(const BigFloat& x) {
    BigFloat out(x.digits());
    mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat sin(const BigFloat& x) {
    BigFloat out(x.digits());
    mpfr_sin(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat cos(const BigFloat& x) {
    BigFloat out(x.digits());
    mpfr_cos(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat& x) {
    BigFloat out(x.digits());
    mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat out(max_digits(x, y));
    mpfr_atan2(out.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat pow_si(const BigFloat& x, long k) {
    BigFloat out(x.digits());
    mpfr_pow_si(out.raw(), x.raw(), k, MPFR_RNDN);
    return out;
}

} // namespace loopdens
