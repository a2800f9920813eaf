#pragma once

#include <set>
#include <utility>
#include <vector>

#include "repzeta/qseries.hpp"

namespace repzeta {

enum class Family { F, G, H };

const char* family_name(Family f);

// Descriptor of one of the three group-scheme families: F_{n,delta}, G_n,
// H_n.  delta is meaningful only for family F.
struct GroupScheme {
    Family family;
    int n;
    int delta; // 0 or 1; forced to 0 for G and H

    GroupScheme(Family fam, int n_, int delta_ = 0);

    int m() const { return n / 2; }
    int epsilon() const { return n - 2 * m(); }

    // Z-rank of the derived Lie lattice: C(2n+delta,2), n^2, C(n+1,2).
    long d_rank() const;
    // Abscissa of convergence of the global zeta function.
    long alpha() const;
    // Number of coordinates of the commutator-matrix variable vector (= d_rank).
    long coordinate_count() const { return d_rank(); }
    // Size of the commutator matrix: 2n+delta for F, 2n for G and H.
    int matrix_size() const;

    std::string label() const; // "F(2,1)", "G(3)", "H(2)"
};

// Local Euler factor as a rational function in (q, t), t standing for q^{-s}.
struct LocalZeta {
    RatFun value;
};

// f_{G,I}: polynomial in X for families F and G (asserted), rational for H.
RatFun f_poly(const GroupScheme& g, const SubsetIndex& idx);

// Exponent a(G,i) for i in [n-1]_0.
long a_exp(const GroupScheme& g, int i);

// Sum over all 2^n subsets of f_{G,I}(q^{-1}) prod_{i in I} gp(q^{a(G,i)} t^{n-i}).
LocalZeta local_zeta_additive(const GroupScheme& g);

// Closed product form:
//   F: (t;q^2)_n / (q^{2(n+delta)-1} t; q^2)_n
//   G: (t;q)_n / (q^n t; q)_n
//   H: (1-t)/(1-q^n t) * (q^2 t^2; q^2)_m / (q^{2(m+eps)+1} t^2; q^2)_m
LocalZeta local_zeta_multiplicative(const GroupScheme& g);

// Z(1/q, 1/t) == q^{d_rank} * Z(q, t).
bool check_functional_equation(const GroupScheme& g);

// H_n reduces to F_{m,eps} under t -> q^2 t^2 (the shift s -> 2s - 2):
//   zeta_{H_n} = (1-t)/(1-q^n t) * zeta_{F_{m,eps}}|_{t -> q^2 t^2}.
bool check_H_reduction(int n);

// Real parts of the local poles, as exact rationals a/b.
using PoleSet = std::set<std::pair<long, long>>;
PoleSet pole_set(const GroupScheme& g);
// Cross-check: { a/b : (1 - q^a t^b) divides the canonical denominator }.
PoleSet pole_set_from_denominator(const GroupScheme& g);
std::pair<long, long> reduced_fraction(long num, long den);

// Series coefficients of the multiplicative local factor at q = q_value.
std::vector<Int> local_coefficients(const GroupScheme& g, long q_value, int order);

// Extract {a/b} from the denominator of any (q,t)- or (q,u)-rational function
// by trial division with factors 1 - q^a * v^b; the leftover must be a
// monomial. sign_of_a < 0 scans negative a (Igusa habitat).
PoleSet poles_from_factors(const Poly& den, Var v, int sign_of_a);

} // namespace repzeta
