#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "repzeta/numbers.hpp"

namespace repzeta {

// Fixed variable alphabet. Everything in this project lives in
// Z[q, t, X, Y, Z, u]; negative powers are handled one level up, in RatFun.
enum class Var : int { q = 0, t = 1, X = 2, Y = 3, Z = 4, u = 5 };

inline constexpr int kNumVars = 6;
inline constexpr const char* kVarNames[kNumVars] = {"q", "t", "X", "Y", "Z", "u"};

std::optional<Var> var_from_name(const std::string& name);

// Exponent vector over the fixed alphabet.
using Monomial = std::array<int, kNumVars>;

inline Monomial monomial_one() { return Monomial{0, 0, 0, 0, 0, 0}; }

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Graded-lexicographic order, q < t < X < Y < Z < u.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// Exact multivariate polynomial with arbitrary-precision integer
// coefficients. Invariant: no stored coefficient is zero, all exponents are
// nonnegative. Immutable in spirit; arithmetic returns fresh values.
class Poly {
public:
    using TermMap = std::map<Monomial, Int, GradedLex>;

    Poly() = default;
    Poly(const Int& c); // NOLINT: implicit constant conversion is intended
    Poly(long c) : Poly(Int(c)) {}
    Poly(int c) : Poly(Int(c)) {}

    static Poly variable(Var v, int exponent = 1);
    static Poly monomial(const Int& coeff, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // Single-term polynomial (the units once monomials are inverted in RatFun).
    bool is_monomial() const { return terms_.size() == 1; }

    const TermMap& terms() const { return terms_; }
    Int coeff(const Monomial& m) const;
    int degree_in(Var v) const;
    int total_degree() const;
    bool uses_var(Var v) const;

    // Componentwise minimum exponent over all terms (zero polynomial -> all 0).
    Monomial monomial_content() const;
    // Gcd of all coefficients, sign matching the graded-lex minimal term; 0 for the zero poly.
    Int content() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Arbitrary strict order, used only for keying containers.
    bool operator<(const Poly& o) const;

    Poly pow(int e) const;

    // Exact division; nullopt if the divisor does not divide exactly.
    std::optional<Poly> divided_by(const Poly& divisor) const;
    // Divide by a monomial with exponents <= monomial_content().
    Poly shift_down(const Monomial& m) const;

    // Collect coefficients of var^0..var^deg; entries are polynomials in the
    // remaining variables.
    std::vector<Poly> coeffs_in(Var v) const;

    Rat eval_rat(const std::array<Rat, kNumVars>& point) const;

private:
    void add_term(const Monomial& m, const Int& c);
    TermMap terms_;
};

inline Poly operator*(const Poly& a, const Int& c) { return a * Poly(c); }

// Random polynomial for property tests: `nterms` terms, exponents < max_exp
// in the given variables, coefficients in [-9, 9].
Poly random_poly(unsigned seed, int nterms, int max_exp, const std::vector<Var>& vars);

} // namespace repzeta
