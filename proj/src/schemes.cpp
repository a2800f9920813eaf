#include "repzeta/schemes.hpp"

#include <numeric>

namespace repzeta {

const char* family_name(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::G: return "G";
        case Family::H: return "H";
    }
    return "?";
}

GroupScheme::GroupScheme(Family fam, int n_, int delta_) : family(fam), n(n_), delta(delta_) {
    if (n < 0) throw DomainError("GroupScheme needs n >= 0");
    if (delta != 0 && delta != 1) throw DomainError("delta must be 0 or 1");
    if (family != Family::F && delta != 0) throw DomainError("delta applies to family F only");
}

long GroupScheme::d_rank() const {
    switch (family) {
        case Family::F: return (2L * n + delta) * (2L * n + delta - 1) / 2;
        case Family::G: return 1L * n * n;
        case Family::H: return 1L * n * (n + 1) / 2;
    }
    return 0;
}

long GroupScheme::alpha() const {
    switch (family) {
        case Family::F: return 2L * (2 * n + delta - 1);
        case Family::G: return 2L * n;
        case Family::H: return n + 1L;
    }
    return 0;
}

int GroupScheme::matrix_size() const {
    return family == Family::F ? 2 * n + delta : 2 * n;
}

std::string GroupScheme::label() const {
    std::string s = family_name(family);
    s += "(" + std::to_string(n);
    if (family == Family::F) s += "," + std::to_string(delta);
    return s + ")";
}

RatFun f_poly(const GroupScheme& g, const SubsetIndex& idx) {
    if (idx.n != g.n) throw DomainError("subset index size does not match the scheme rank");
    const int i1 = idx.i1();
    switch (g.family) {
        case Family::F: {
            Poly binom = q_multinomial(idx, Var::X);
            // binom(n, I)_{X^2}
            Poly binom2(0);
            for (const auto& [m, c] : binom.terms()) {
                Monomial mm = m;
                mm[static_cast<int>(Var::X)] *= 2;
                binom2 += Poly::monomial(c, mm);
            }
            RatFun poch = pochhammer(RatFun::variable(Var::X, 2 * (i1 + g.delta) + 1),
                                     Var::X, 2, g.n - i1);
            RatFun r = RatFun(binom2) * poch;
            ensure(r.is_poly(), "f_poly is a polynomial for family F");
            return r;
        }
        case Family::G: {
            RatFun r = RatFun(q_multinomial(idx, Var::X)) *
                       pochhammer(RatFun::variable(Var::X, i1 + 1), Var::X, 1, g.n - i1);
            ensure(r.is_poly(), "f_poly is a polynomial for family G");
            return r;
        }
        case Family::H: {
            RatFun r = pochhammer(RatFun::variable(Var::X, i1 + 1), Var::X, 1, g.n - i1);
            for (int j = 1; j <= idx.size(); ++j) {
                int k = idx.mu(j) / 2;
                r /= pochhammer(RatFun::variable(Var::X, 2), Var::X, 2, k);
            }
            return r;
        }
    }
    throw DomainError("unknown family");
}

long a_exp(const GroupScheme& g, int i) {
    if (i < 0 || i > g.n - 1) throw DomainError("a_exp index out of [n-1]_0");
    auto choose2 = [](long k) { return k * (k - 1) / 2; };
    switch (g.family) {
        case Family::F: return choose2(2L * g.n + g.delta) - choose2(2L * i + g.delta);
        case Family::G: return 1L * g.n * g.n - 1L * i * i;
        case Family::H: return choose2(g.n + 1L) - choose2(i + 1L);
    }
    return 0;
}

namespace {

// q^a t^b
Poly qt_monomial(long a, long b) {
    Monomial m = monomial_one();
    m[static_cast<int>(Var::q)] = static_cast<int>(a);
    m[static_cast<int>(Var::t)] = static_cast<int>(b);
    return Poly::monomial(1, m);
}

} // namespace

LocalZeta local_zeta_additive(const GroupScheme& g) {
    const RatFun qinv = RatFun::variable(Var::q, -1);
    std::vector<Fraction> terms;
    for (const auto& I : SubsetIndex::all(g.n)) {
        Fraction f{Poly(1)};
        f.multiply(f_poly(g, I).substitute({{Var::X, qinv}}));
        for (int i : I.elements) {
            Poly arg = qt_monomial(a_exp(g, i), g.n - i);
            f.num *= arg;
            f.multiply_den(Poly(1) - arg);
        }
        terms.push_back(std::move(f));
    }
    return LocalZeta{sum_fractions(terms)};
}

LocalZeta local_zeta_multiplicative(const GroupScheme& g) {
    auto qt_poch = [](long a, long b, long qstep, int k) {
        // (q^a t^b ; q^qstep)_k as a polynomial product
        Poly r(1);
        for (int i = 0; i < k; ++i) r *= Poly(1) - qt_monomial(a + qstep * i, b);
        return r;
    };
    switch (g.family) {
        case Family::F:
            return LocalZeta{RatFun(qt_poch(0, 1, 2, g.n),
                                    qt_poch(2L * (g.n + g.delta) - 1, 1, 2, g.n))};
        case Family::G:
            return LocalZeta{RatFun(qt_poch(0, 1, 1, g.n), qt_poch(g.n, 1, 1, g.n))};
        case Family::H: {
            const int m = g.m(), eps = g.epsilon();
            RatFun head(Poly(1) - qt_monomial(0, 1), Poly(1) - qt_monomial(g.n, 1));
            RatFun tail(qt_poch(2, 2, 2, m), qt_poch(2L * (m + eps) + 1, 2, 2, m));
            return LocalZeta{head * tail};
        }
    }
    throw DomainError("unknown family");
}

bool check_functional_equation(const GroupScheme& g) {
    RatFun z = local_zeta_multiplicative(g).value;
    RatFun flipped = z.substitute({{Var::q, RatFun::variable(Var::q, -1)},
                                   {Var::t, RatFun::variable(Var::t, -1)}});
    RatFun scaled = RatFun(Poly::variable(Var::q, static_cast<int>(g.d_rank()))) * z;
    return rat_equal(flipped, scaled);
}

bool check_H_reduction(int n) {
    if (n < 1) throw DomainError("check_H_reduction needs n >= 1");
    GroupScheme h(Family::H, n);
    GroupScheme f(Family::F, h.m(), h.epsilon());
    RatFun lhs = local_zeta_multiplicative(h).value;
    RatFun shifted = local_zeta_multiplicative(f).value.substitute(
        {{Var::t, RatFun(qt_monomial(2, 2))}});
    RatFun head(Poly(1) - qt_monomial(0, 1), Poly(1) - qt_monomial(n, 1));
    return rat_equal(lhs, head * shifted);
}

std::pair<long, long> reduced_fraction(long num, long den) {
    ensure(den != 0, "fraction denominator is zero");
    long g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {num, den};
}

PoleSet pole_set(const GroupScheme& g) {
    PoleSet out;
    switch (g.family) {
        case Family::F:
            for (int i = 0; i < g.n; ++i) out.insert({2L * (g.n + i + g.delta) - 1, 1});
            break;
        case Family::G:
            for (int i = 0; i < g.n; ++i) out.insert({g.n + i, 1});
            break;
        case Family::H:
            out.insert({g.n, 1});
            for (int i = 0; i < g.m(); ++i)
                out.insert(reduced_fraction(2L * (g.m() + i + g.epsilon()) + 1, 2));
            break;
    }
    return out;
}

PoleSet poles_from_factors(const Poly& den, Var v, int sign_of_a) {
    Poly rest = den;
    PoleSet out;
    const int max_a = rest.degree_in(Var::q) + 1;
    const int max_b = rest.degree_in(v) + 1;
    for (int b = 1; b <= max_b; ++b) {
        for (int a = 0; a <= max_a; ++a) {
            Monomial m = monomial_one();
            m[static_cast<int>(Var::q)] = a;
            m[static_cast<int>(v)] = b;
            Poly factor = Poly(1) - Poly::monomial(1, m);
            for (;;) {
                auto quot = rest.divided_by(factor);
                if (!quot) break;
                rest = *quot;
                out.insert(reduced_fraction(sign_of_a * a, b));
            }
        }
    }
    ensure(rest.is_monomial(), "denominator is a product of 1 - q^a v^b factors up to a monomial");
    return out;
}

PoleSet pole_set_from_denominator(const GroupScheme& g) {
    return poles_from_factors(local_zeta_multiplicative(g).value.den(), Var::t, +1);
}

std::vector<Int> local_coefficients(const GroupScheme& g, long q_value, int order) {
    if (q_value < 2) throw DomainError("local_coefficients needs q >= 2");
    RatFun z = local_zeta_multiplicative(g).value;
    std::array<Rat, kNumVars> point;
    point.fill(Rat(0));
    point[static_cast<int>(Var::q)] = Rat(q_value);

    // Specialize q, then long-divide the t-series with integer arithmetic.
    auto eval_q = [&](const Poly& p) {
        std::vector<Poly> by_t = p.coeffs_in(Var::t);
        std::vector<Int> out;
        out.reserve(by_t.size());
        for (const Poly& c : by_t) {
            Rat v = c.eval_rat(point);
            ensure(v.get_den() == 1, "integral specialization");
            out.push_back(v.get_num());
        }
        return out;
    };
    std::vector<Int> num = eval_q(z.num());
    std::vector<Int> den = eval_q(z.den());
    ensure(!den.empty() && den[0] != 0, "unit constant term after specialization");

    std::vector<Int> coeffs;
    coeffs.reserve(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        Int acc = k < static_cast<int>(num.size()) ? num[static_cast<size_t>(k)] : Int(0);
        for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
            acc -= den[static_cast<size_t>(j)] * coeffs[static_cast<size_t>(k - j)];
        Int c = acc / den[0];
        ensure(c * den[0] == acc, "series coefficients are integral");
        coeffs.push_back(c);
    }
    ensure(coeffs[0] == 1, "trivial twist-isoclass contributes 1");
    return coeffs;
}

} // namespace repzeta
