#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace loopdens {

/// Dense univariate polynomial over a coefficient field F (CycNum or
/// BigComplex). coeffs()[k] multiplies u^k. Canonical form: trailing zero
/// coefficients are trimmed; the zero polynomial is the empty vector and
/// has degree -1.
///
/// F must provide +, -, *, field_is_zero(F) and field_scale_by_int(F, long).
template <class F>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(F v) { return Polynomial(std::vector<F>{std::move(v)}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }

    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F{}; }
    const F& leading() const { return c_.back(); }

    /// Horner evaluation.
    F eval(const F& x) const {
        F acc{};
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> d;
        d.reserve(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            d.push_back(field_scale_by_int(c_[k], static_cast<long>(k)));
        return Polynomial(std::move(d));
    }

    /// u |-> p(c*u): coefficient k becomes c^k * coeffs[k].
    Polynomial arg_scale(const F& c) const {
        std::vector<F> out(c_);
        if (out.size() > 1) {
            F power = c;
            out[1] = power * out[1];
            for (std::size_t k = 2; k < out.size(); ++k) {
                power = power * c;
                out[k] = power * out[k];
            }
        }
        return Polynomial(std::move(out));
    }

    /// c * p(u).
    Polynomial scaled(const F& c) const {
        std::vector<F> out(c_);
        for (auto& v : out) v = c * v;
        return Polynomial(std::move(out));
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<F> out(std::max(c_.size(), o.c_.size()), F{});
        for (std::size_t k = 0; k < c_.size(); ++k) out[k] = out[k] + c_[k];
        for (std::size_t k = 0; k < o.c_.size(); ++k) out[k] = out[k] + o.c_[k];
        return Polynomial(std::move(out));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<F> out(std::max(c_.size(), o.c_.size()), F{});
        for (std::size_t k = 0; k < c_.size(); ++k) out[k] = out[k] + c_[k];
        for (std::size_t k = 0; k < o.c_.size(); ++k) out[k] = out[k] - o.c_[k];
        return Polynomial(std::move(out));
    }

    /// Schoolbook product; degrees in this artifact stay small enough that
    /// coefficient size, not operation count, dominates.
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<F> out(c_.size() + o.c_.size() - 1, F{});
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] = out[i + j] + c_[i] * o.c_[j];
        return Polynomial(std::move(out));
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    void trim() {
        while (!c_.empty() && field_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
};

} // namespace loopdens
