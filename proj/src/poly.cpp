#include "repzeta/poly.hpp"

#include <algorithm>
#include <random>

namespace repzeta {

std::optional<Var> var_from_name(const std::string& name) {
    for (int i = 0; i < kNumVars; ++i)
        if (name == kVarNames[i]) return static_cast<Var>(i);
    return std::nullopt;
}

Poly::Poly(const Int& c) {
    if (c != 0) terms_[monomial_one()] = c;
}

Poly Poly::variable(Var v, int exponent) {
    ensure(exponent >= 0, "Poly exponents are nonnegative");
    Monomial m = monomial_one();
    m[static_cast<int>(v)] = exponent;
    return monomial(1, m);
}

Poly Poly::monomial(const Int& coeff, const Monomial& m) {
    Poly p;
    if (coeff != 0) {
        for (int e : m) ensure(e >= 0, "Poly exponents are nonnegative");
        p.terms_[m] = coeff;
    }
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == monomial_one() &&
           terms_.begin()->second == 1;
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == monomial_one());
}

Int Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

int Poly::degree_in(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
    return d;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, repzeta::total_degree(m));
    return d;
}

bool Poly::uses_var(Var v) const {
    for (const auto& [m, c] : terms_)
        if (m[static_cast<int>(v)] != 0) return true;
    return false;
}

Monomial Poly::monomial_content() const {
    if (terms_.empty()) return monomial_one();
    Monomial r = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < kNumVars; ++i) r[i] = std::min(r[i], m[i]);
    return r;
}

Int Poly::content() const {
    if (terms_.empty()) return 0;
    Int g = 0;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (terms_.begin()->second < 0) g = -g;
    return g;
}

void Poly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (int i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

bool Poly::operator<(const Poly& o) const {
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
        [](const auto& a, const auto& b) {
            if (GradedLex{}(a.first, b.first)) return true;
            if (GradedLex{}(b.first, a.first)) return false;
            return a.second < b.second;
        });
}

Poly Poly::pow(int e) const {
    ensure(e >= 0, "Poly::pow wants a nonnegative exponent");
    Poly r(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::optional<Poly> Poly::divided_by(const Poly& divisor) const {
    ensure(!divisor.is_zero(), "division by the zero polynomial");
    Poly rem = *this;
    Poly quot;
    const auto& lead = *divisor.terms_.rbegin(); // graded-lex maximal term
    while (!rem.is_zero()) {
        const auto& top = *rem.terms_.rbegin();
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) {
            m[i] = top.first[i] - lead.first[i];
            if (m[i] < 0) return std::nullopt;
        }
        Int c = top.second / lead.second;
        if (c * lead.second != top.second) return std::nullopt;
        Poly piece = Poly::monomial(c, m);
        quot += piece;
        rem -= piece * divisor;
    }
    return quot;
}

Poly Poly::shift_down(const Monomial& m) const {
    Poly r;
    for (const auto& [mm, c] : terms_) {
        Monomial s;
        for (int i = 0; i < kNumVars; ++i) {
            s[i] = mm[i] - m[i];
            ensure(s[i] >= 0, "shift_down below the monomial content");
        }
        r.terms_[s] = c;
    }
    return r;
}

std::vector<Poly> Poly::coeffs_in(Var v) const {
    std::vector<Poly> out(static_cast<size_t>(degree_in(v)) + 1);
    for (const auto& [m, c] : terms_) {
        Monomial s = m;
        int e = s[static_cast<int>(v)];
        s[static_cast<int>(v)] = 0;
        out[static_cast<size_t>(e)] += Poly::monomial(c, s);
    }
    return out;
}

Rat Poly::eval_rat(const std::array<Rat, kNumVars>& point) const {
    Rat acc = 0;
    for (const auto& [m, c] : terms_) {
        Rat term(c);
        for (int i = 0; i < kNumVars; ++i) {
            for (int e = 0; e < m[i]; ++e) term *= point[i];
        }
        acc += term;
    }
    return acc;
}

Poly random_poly(unsigned seed, int nterms, int max_exp, const std::vector<Var>& vars) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> expo(0, max_exp - 1);
    Poly p;
    for (int k = 0; k < nterms; ++k) {
        Monomial m = monomial_one();
        for (Var v : vars) m[static_cast<int>(v)] = expo(rng);
        p += Poly::monomial(coeff(rng), m);
    }
    return p;
}

} // namespace repzeta
