#pragma once

#include <map>
#include <vector>

#include "repzeta/poly.hpp"

namespace repzeta {

// Normalized quotient of two Polys. Canonical form: the common monomial
// factor of num/den is cancelled, the integer content of the pair is 1, and
// the graded-lex minimal term of the denominator is positive. Rational
// functions are deliberately NOT reduced by multivariate gcd; equality is the
// cross-multiplication test.
class RatFun {
public:
    RatFun() : num_(0), den_(1) {}
    RatFun(const Poly& p) : num_(p), den_(1) {} // NOLINT: implicit lift
    RatFun(const Int& c) : num_(c), den_(1) {}  // NOLINT
    RatFun(long c) : num_(Int(c)), den_(1) {}
    RatFun(int c) : num_(Int(c)), den_(1) {}
    RatFun(Poly num, Poly den);

    static RatFun variable(Var v, int exponent = 1);
    // x / (1 - x), the geometric-progression shorthand.
    static RatFun gp(const RatFun& x);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }
    // The numerator, asserting the denominator is 1.
    Poly as_poly() const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun pow(int e) const; // negative exponents invert

    // Cross-multiplication equality: a/b == c/d iff a*d == c*b.
    bool equals(const RatFun& o) const;
    bool operator==(const RatFun& o) const { return equals(o); }
    bool operator!=(const RatFun& o) const { return !equals(o); }

    // Identical canonical representation (stronger than equals()).
    bool same_representation(const RatFun& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    // Simultaneous substitution of variables by rational functions.
    // Unbound variables are left alone. Throws SubstitutionSingular if a
    // denominator vanishes under composition.
    RatFun substitute(const std::map<Var, RatFun>& bindings) const;

    // Power-series coefficients c_0..c_order in `v`; each coefficient is a
    // RatFun in the remaining variables. Requires the denominator's order-0
    // coefficient in `v` to be a nonzero monomial; otherwise NotExpandable.
    std::vector<RatFun> series_coeffs(Var v, int order) const;

    Rat eval_rat(const std::array<Rat, kNumVars>& point) const;

private:
    void normalize();
    Poly num_, den_;
};

inline bool rat_equal(const RatFun& a, const RatFun& b) { return a.equals(b); }

// One summand of a fraction sum: num / prod(factor^mult). Keeping the
// denominator factored lets big symbolic sums (the 2^n subset sums) go over
// an explicit common denominator instead of pairwise cross-multiplication.
struct Fraction {
    Poly num;
    std::map<Poly, int> den_factors;

    Fraction(Poly n = Poly(0)) : num(std::move(n)) {}
    void multiply_den(const Poly& factor, int mult = 1);
    void multiply(const RatFun& f); // folds f.den in as a single factor
};

RatFun sum_fractions(const std::vector<Fraction>& terms);

} // namespace repzeta
