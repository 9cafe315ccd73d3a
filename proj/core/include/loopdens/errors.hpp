#pragma once

#include <stdexcept>

namespace loopdens {

struct division_by_zero_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised when a quantity that must be a real rational carries a nonzero
// q-part (exact mode) or an imaginary part above tolerance (float mode).
struct non_real_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct singular_matrix_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precision_exhausted_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solved Q/P pair failed its defining functional identities.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct non_convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct rank_deficiency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace loopdens
