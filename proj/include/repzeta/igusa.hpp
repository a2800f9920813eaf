#pragma once

#include "repzeta/counting.hpp"

namespace repzeta {

// Prehomogeneous vector space whose relative invariant drives the local
// integral: antisymmetric matrices with the Pfaffian, or square/symmetric
// matrices with the determinant.
struct PvsKind {
    enum class Tag { AltPfaffian, MatDet, SymDet } tag;
    int size; // 2n for AltPfaffian, n otherwise

    static PvsKind alt_pfaffian(int size);
    static PvsKind mat_det(int n) { return {Tag::MatDet, n}; }
    static PvsKind sym_det(int n) { return {Tag::SymDet, n}; }

    int ambient_dimension() const;
    std::string label() const;
};

// Closed form of the local integral as a rational function in (q, u),
// u standing for q^{-s}.
RatFun igusa_closed(const PvsKind& kind);

// Exact measure of {x : v_p(f(x)) = k}, counted at modulus p^{k+1}.
Rat igusa_coeff_oracle(const PvsKind& kind, long p, int k, int jobs = 1);

// Pfaffian by first-row expansion; asserts antisymmetry and Pf^2 = det.
Int pfaffian(const IntMat& m);
Int determinant(const IntMat& m);

// SymDet(2n) equals ((1 - q^{-2n-1} u)/(1 - q^{-1} u)) * AltPfaffian(2n)
// under u -> q^{-2} u^2 (the shift s -> 2s + 2).
bool verify_sym_alt_relation(int n);

// Real parts of the poles, read off denominator factors 1 - q^{-a} u^b.
PoleSet pvs_pole_set(const PvsKind& kind);

// pole_set(g) - alpha(g) coincides with the pole set of the matched space
// (F <-> AltPfaffian(2n), G <-> MatDet(n), H <-> SymDet(n)).
bool verify_pole_translation(const GroupScheme& g);
PvsKind matched_pvs(const GroupScheme& g);

// The candidate real parts a(H_n,i)/(n-i) - alpha(H_n) exhaust the zeros
// -(i+2)/2 of the symmetric determinant's Bernstein-Sato polynomial.
bool verify_bs_candidates(int n);

} // namespace repzeta
