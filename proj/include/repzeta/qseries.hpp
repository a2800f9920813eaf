#pragma once

#include <vector>

#include "repzeta/ratfun.hpp"

namespace repzeta {

// Subset I = {i_1 < ... < i_l} of [n-1]_0 with the boundary conventions
// i_0 = 0 and i_{l+1} = n (so i_1 = n when I is empty).
struct SubsetIndex {
    int n;
    std::vector<int> elements;

    SubsetIndex(int n_, std::vector<int> elems);

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int i) const;
    // i_j with the boundary conventions; valid for j in [l+1]_0.
    int ith(int j) const;
    int i1() const { return elements.empty() ? n : elements.front(); }
    // mu_j = i_{j+1} - i_j for j in [l]_0.
    int mu(int j) const { return ith(j + 1) - ith(j); }

    static std::vector<SubsetIndex> all(int n);
    std::string label() const; // "{0,2}" or "{}"
};

// Gaussian polynomial (a choose b)_var. Throws DomainError for a < b.
Poly gaussian_binomial(int a, int b, Var var);

// (n over i_l)(i_l over i_{l-1})...(i_2 over i_1) in `var`; 1 for I empty.
Poly q_multinomial(const SubsetIndex& idx, Var var);

// prod_{i=0}^{k-1} (1 - base * step^i).
RatFun pochhammer(const RatFun& base, Var step_var, int k);
// Same with the step variable raised to `step_exp` (e.g. (x; X^2)_k).
RatFun pochhammer(const RatFun& base, Var step_var, int step_exp, int k);
Poly pochhammer_poly(const Poly& base, const Poly& step, int k);

enum class IdentityKind { q_binomial, binomial_A, multinomial_B, typeH };

// Expands both sides of the named identity as rational functions in the free
// variables and compares by cross-multiplication. Subset sums are exhaustive,
// so n is capped at 8.
bool verify_identity(IdentityKind kind, int n);

const char* identity_name(IdentityKind kind);

} // namespace repzeta
