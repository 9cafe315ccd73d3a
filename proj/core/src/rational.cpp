#include "loopdens/rational.hpp"

#include "loopdens/errors.hpp"

namespace loopdens {

std::string rational_str(const Rational& r) {
    return r.get_str();
}

Rational parse_rational(std::string_view s) {
    if (s.empty()) throw parse_error("empty rational");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), std::string(s).c_str(), 10) != 0)
        throw parse_error("bad rational: " + std::string(s));
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw parse_error("zero denominator: " + std::string(s));
    r.canonicalize();
    return r;
}

Rational rational_pow(const Rational& r, long k) {
    if (k == 0) return Rational(1);
    if (r == 0 && k < 0) throw division_by_zero_error("0^negative");
    bool invert = k < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(r.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(r.get_mpq_t()), e);
    out.canonicalize();
    if (invert) out = Rational(1) / out;
    return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    if (k > n) return out; // 0
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace loopdens
