#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace repzeta {

using Int = mpz_class;
using Rat = mpq_class;

// Internal-consistency check: these fire only on broken formulas, never on
// bad user input.
inline void ensure(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("internal check failed: ") + what);
}

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SubstitutionSingular : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotExpandable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binomial(long a, long b) {
    if (b < 0 || b > a) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

} // namespace repzeta
