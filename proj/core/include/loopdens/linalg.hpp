#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "loopdens/bigcomplex.hpp"
#include "loopdens/cyclotomic.hpp"

namespace loopdens {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> d_;
};

/// Exact Gaussian elimination over Q(q) with largest-norm pivoting (the
/// norm form a^2+ab+b^2 is |.|^2 on CycNum). Throws singular_matrix_error
/// when no nonzero pivot exists.
std::vector<CycNum> solve_linear_exact(Matrix<CycNum> a, std::vector<CycNum> b);

/// Dense complex solve at the given working precision with row pivoting by
/// maximum modulus. Postcondition: inf-norm residual below
/// 10^(-digits/2) relative to |b|, else verification_error. A pivot whose
/// modulus falls below 10^(-digits+8) relative to the largest initial
/// entry raises singular_matrix_error.
std::vector<BigComplex> solve_linear_float(Matrix<BigComplex> a, std::vector<BigComplex> b,
                                           long digits);

struct PrecisionPolicy {
    long initial_digits = 128;
    long max_digits = 8192;
    double escalation_factor = 2.0;
    long target_residual_exponent = 64;

    bool valid() const {
        return initial_digits >= 1 && initial_digits <= max_digits && escalation_factor > 1.0 &&
               target_residual_exponent >= 1;
    }

    /// Default sizing for the Q/P coefficient systems: start at
    /// max(128, 8p, requested); Q/P coefficient magnitudes grow roughly
    /// exponentially in p (a few decimal digits per unit of l).
    static PrecisionPolicy for_system(int p, long requested_digits);
};

struct FloatSystem {
    Matrix<BigComplex> a;
    std::vector<BigComplex> b;
};

struct EscalationOutcome {
    std::vector<BigComplex> solution;
    long used_digits = 0;
};

/// Repeatedly build and solve the system at increasing precision
/// (multiplying digits by the escalation factor) until `verify` accepts
/// the solution; throws precision_exhausted_error past max_digits.
EscalationOutcome solve_with_escalation(
    const std::function<FloatSystem(long digits)>& build, const PrecisionPolicy& policy,
    const std::function<bool(const std::vector<BigComplex>&, long digits)>& verify);

} // namespace loopdens
