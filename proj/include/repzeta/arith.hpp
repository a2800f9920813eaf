#pragma once

#include "repzeta/schemes.hpp"

namespace repzeta {

// Initial segment r~_1..r~_B of the Dirichlet coefficients of a global zeta
// function over Q; multiplicative with r~_1 = 1.
struct DirichletCoeffs {
    std::vector<Int> coeffs; // coeffs[n-1] = r~_n
    long bound() const { return static_cast<long>(coeffs.size()); }
    const Int& at(long n) const { return coeffs[static_cast<size_t>(n - 1)]; }
    bool multiplicative() const; // checked on all coprime pairs with product <= bound
};

// Jordan totient J_b(n); J_1 is Euler's phi.
Int jordan_totient(int b, long n);

// Dirichlet convolution of the functions n -> n^a J_b(n) over the listed
// (a, b) pairs, up to `bound`. The empty list yields the convolution identity.
DirichletCoeffs dirichlet_from_quotients(const std::vector<std::pair<int, int>>& pairs,
                                         long bound);

// Assembles r~_n multiplicatively from the local Euler factors at all p <= bound.
DirichletCoeffs global_coeffs_from_local(const GroupScheme& g, long bound);

// (a, b) pairs of the zeta-quotient factors zeta(s-a-b)/zeta(s-a). For family
// H only the (0, n) head factor converts; the remaining factors live in 2s
// and are reported separately (their support is on squares), so global
// assembly for H goes through the local route.
struct QuotientPairs {
    std::vector<std::pair<int, int>> convolvable;
    // (c, d) for factors zeta(2s - c)/zeta(2s - d), family H only.
    std::vector<std::pair<int, int>> doubled;
};
QuotientPairs quotient_pairs(const GroupScheme& g);

// Euler phi table 1..bound by an independent sieve.
std::vector<Int> euler_phi_table(long bound);

std::vector<long> primes_up_to(long bound);

} // namespace repzeta
