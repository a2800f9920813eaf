#include "repzeta/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace repzeta {

SubsetIndex::SubsetIndex(int n_, std::vector<int> elems) : n(n_), elements(std::move(elems)) {
    if (n < 0) throw DomainError("SubsetIndex needs n >= 0");
    std::sort(elements.begin(), elements.end());
    for (size_t k = 0; k < elements.size(); ++k) {
        if (elements[k] < 0 || elements[k] > n - 1)
            throw DomainError("SubsetIndex elements must lie in [n-1]_0");
        if (k > 0 && elements[k] == elements[k - 1])
            throw DomainError("SubsetIndex elements must be distinct");
    }
}

bool SubsetIndex::contains(int i) const {
    return std::binary_search(elements.begin(), elements.end(), i);
}

int SubsetIndex::ith(int j) const {
    if (j == 0) return 0;
    if (j == size() + 1) return n;
    ensure(j >= 1 && j <= size(), "subset position out of range");
    return elements[static_cast<size_t>(j - 1)];
}

std::vector<SubsetIndex> SubsetIndex::all(int n) {
    std::vector<SubsetIndex> out;
    out.reserve(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) elems.push_back(i);
        out.emplace_back(n, std::move(elems));
    }
    return out;
}

std::string SubsetIndex::label() const {
    std::ostringstream out;
    out << "{";
    for (size_t k = 0; k < elements.size(); ++k) {
        if (k) out << ",";
        out << elements[k];
    }
    out << "}";
    return out.str();
}

namespace {

Poly q_factorial(int k, Var var) {
    Poly r(1);
    for (int i = 1; i <= k; ++i) r *= Poly(1) - Poly::variable(var, i);
    return r;
}

} // namespace

Poly gaussian_binomial(int a, int b, Var var) {
    if (b < 0 || a < b) throw DomainError("gaussian_binomial needs 0 <= b <= a");
    Poly num = q_factorial(a, var);
    Poly den = q_factorial(a - b, var) * q_factorial(b, var);
    auto quot = num.divided_by(den);
    ensure(quot.has_value(), "Gaussian binomial division is exact");
    return *quot;
}

Poly q_multinomial(const SubsetIndex& idx, Var var) {
    Poly r(1);
    for (int j = 1; j <= idx.size(); ++j)
        r *= gaussian_binomial(idx.ith(j + 1), idx.ith(j), var);
    return r;
}

RatFun pochhammer(const RatFun& base, Var step_var, int k) {
    return pochhammer(base, step_var, 1, k);
}

RatFun pochhammer(const RatFun& base, Var step_var, int step_exp, int k) {
    RatFun step = RatFun::variable(step_var, step_exp);
    RatFun r(1);
    RatFun shifted = base;
    for (int i = 0; i < k; ++i) {
        r *= RatFun(1) - shifted;
        shifted *= step;
    }
    return r;
}

Poly pochhammer_poly(const Poly& base, const Poly& step, int k) {
    Poly r(1);
    Poly shifted = base;
    for (int i = 0; i < k; ++i) {
        r *= Poly(1) - shifted;
        shifted *= step;
    }
    return r;
}

namespace {

const RatFun kXinv = RatFun::variable(Var::X, -1);

// Monomial (X^i Z)^(n-i), the argument of every geometric-progression factor.
Poly gp_argument(int n, int i) {
    Monomial m = monomial_one();
    m[static_cast<int>(Var::X)] = i * (n - i);
    m[static_cast<int>(Var::Z)] = n - i;
    return Poly::monomial(1, m);
}

// Sum over subsets of coeff(I) * prod_{i in I} gp(arg(i)), assembled over the
// explicit common denominator prod_i (1 - arg(i)).
RatFun subset_gp_sum(int n, bool include_zero,
                     const std::function<RatFun(const SubsetIndex&)>& coeff,
                     const std::function<Poly(int)>& arg) {
    std::vector<Fraction> terms;
    for (const auto& I : SubsetIndex::all(n)) {
        if (!include_zero && I.contains(0)) continue;
        Fraction f{Poly(1)};
        f.multiply(coeff(I));
        for (int i : I.elements) {
            f.num *= arg(i);
            f.multiply_den(Poly(1) - arg(i));
        }
        terms.push_back(std::move(f));
    }
    return sum_fractions(terms);
}

bool check_q_binomial(int n) {
    // (ZY; X)_n = sum_j binom(n,j)_X Z^j (Z; X)_{n-j} (Y; X)_j
    Poly X = Poly::variable(Var::X), Y = Poly::variable(Var::Y), Z = Poly::variable(Var::Z);
    Poly lhs = pochhammer_poly(Z * Y, X, n);
    Poly rhs(0);
    for (int j = 0; j <= n; ++j) {
        rhs += gaussian_binomial(n, j, Var::X) * Z.pow(j) *
               pochhammer_poly(Z, X, n - j) * pochhammer_poly(Y, X, j);
    }
    return lhs == rhs;
}

bool check_binomial_A(int n) {
    // Both gp-forms of the sum over I in [n-1] equal (1 - Z^n)/(Z; X)_n.
    auto coeff = [&](const SubsetIndex& I) {
        return RatFun(q_multinomial(I, Var::X)).substitute({{Var::X, kXinv}});
    };
    RatFun lhs1 = subset_gp_sum(n, false, coeff, [&](int i) { return gp_argument(n, i); });
    RatFun lhs2 = subset_gp_sum(n, false, coeff, [&](int i) { return gp_argument(n, n - i); });
    RatFun rhs = (RatFun(1) - RatFun(Poly::variable(Var::Z, n))) /
                 pochhammer(RatFun::variable(Var::Z), Var::X, n);
    return rat_equal(lhs1, rhs) && rat_equal(lhs2, rhs);
}

bool check_multinomial_B(int n) {
    // sum_I binom(n,I)_{X^-1} (Y X^{-i_1-1}; X^-1)_{n-i_1} prod gp((X^i Z)^{n-i})
    //   = (X^{-n} Y Z; X)_n / (Z; X)_n
    auto coeff = [&](const SubsetIndex& I) {
        RatFun c = RatFun(q_multinomial(I, Var::X)).substitute({{Var::X, kXinv}});
        RatFun base = RatFun::variable(Var::Y) * RatFun::variable(Var::X, -(I.i1() + 1));
        return c * pochhammer(base, Var::X, -1, n - I.i1());
    };
    RatFun lhs = subset_gp_sum(n, true, coeff, [&](int i) { return gp_argument(n, i); });
    RatFun rhs_num = pochhammer(
        RatFun::variable(Var::X, -n) * RatFun::variable(Var::Y) * RatFun::variable(Var::Z),
        Var::X, n);
    RatFun rhs_den = pochhammer(RatFun::variable(Var::Z), Var::X, n);
    return rat_equal(lhs, rhs_num / rhs_den);
}

bool check_typeH(int n) {
    const int m = n / 2, eps = n - 2 * m;
    auto coeff = [&](const SubsetIndex& I) {
        RatFun c(1);
        for (int j = 1; j <= I.size(); ++j) {
            int k = I.mu(j) / 2;
            // (X^-4; X^-4)_k^{-1}, folded in factor by factor
            for (int i = 1; i <= k; ++i)
                c /= RatFun(1) - RatFun::variable(Var::X, -4 * i);
        }
        RatFun base = RatFun::variable(Var::X, -2 * (I.i1() + 1));
        return c * pochhammer(base, Var::X, -2, n - I.i1());
    };
    RatFun lhs = subset_gp_sum(n, true, coeff, [&](int i) { return gp_argument(n, i); });

    RatFun Z = RatFun::variable(Var::Z);
    RatFun rhs = (RatFun(1) - RatFun::variable(Var::X, -n - 1) * Z) /
                 (RatFun(1) - RatFun::variable(Var::X, n - 1) * Z);
    rhs *= pochhammer(RatFun::variable(Var::X, 2 * (1 - n)) * Z * Z, Var::X, 4, m);
    // Denominator base X^{2 eps} Z^2: the exponent follows from the identity's
    // origin (the type-H-to-F reduction evaluated at X = q^{1/2},
    // Z = q^{(n+1)/2 - s}), and the odd-n cases only balance with it.
    rhs /= pochhammer(RatFun::variable(Var::X, 2 * eps) * Z * Z, Var::X, 4, m);
    return rat_equal(lhs, rhs);
}

} // namespace

bool verify_identity(IdentityKind kind, int n) {
    if (n < 1 || n > 8) throw DomainError("verify_identity supports 1 <= n <= 8");
    switch (kind) {
        case IdentityKind::q_binomial: return check_q_binomial(n);
        case IdentityKind::binomial_A: return check_binomial_A(n);
        case IdentityKind::multinomial_B: return check_multinomial_B(n);
        case IdentityKind::typeH: return check_typeH(n);
    }
    throw DomainError("unknown identity kind");
}

const char* identity_name(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::q_binomial: return "q_binomial";
        case IdentityKind::binomial_A: return "binomial_A";
        case IdentityKind::multinomial_B: return "multinomial_B";
        case IdentityKind::typeH: return "typeH";
    }
    return "?";
}

} // namespace repzeta
