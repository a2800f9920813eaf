#include "repzeta/ratfun.hpp"

#include <algorithm>

namespace repzeta {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    ensure(!den_.is_zero(), "RatFun denominator must be nonzero");
    normalize();
}

void RatFun::normalize() {
    ensure(!den_.is_zero(), "RatFun denominator must be nonzero");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    // Cancel the common monomial factor.
    Monomial mn = num_.monomial_content();
    Monomial md = den_.monomial_content();
    Monomial common;
    bool any = false;
    for (int i = 0; i < kNumVars; ++i) {
        common[i] = std::min(mn[i], md[i]);
        any = any || common[i] > 0;
    }
    if (any) {
        num_ = num_.shift_down(common);
        den_ = den_.shift_down(common);
    }
    // Integer content of the pair.
    Int cn = num_.content();
    Int cd = den_.content();
    if (cn < 0) cn = -cn;
    if (cd < 0) cd = -cd;
    Int g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    // Sign convention: graded-lex minimal denominator term positive.
    if (den_.terms().begin()->second < 0) g = -g;
    if (g != 1) {
        auto qn = num_.divided_by(Poly(g));
        auto qd = den_.divided_by(Poly(g));
        ensure(qn && qd, "content division is exact");
        num_ = *qn;
        den_ = *qd;
    }
}

RatFun RatFun::variable(Var v, int exponent) {
    if (exponent >= 0) return RatFun(Poly::variable(v, exponent));
    return RatFun(Poly(1), Poly::variable(v, -exponent));
}

RatFun RatFun::gp(const RatFun& x) { return x / (RatFun(1) - x); }

Poly RatFun::as_poly() const {
    ensure(den_.is_one(), "RatFun is not a polynomial");
    return num_;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    ensure(!b.is_zero(), "division by the zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::pow(int e) const {
    if (e < 0) {
        ensure(!is_zero(), "cannot invert zero");
        return RatFun(den_.pow(-e), num_.pow(-e));
    }
    return RatFun(num_.pow(e), den_.pow(e));
}

bool RatFun::equals(const RatFun& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

namespace {

RatFun eval_poly_at(const Poly& p, const std::array<RatFun, kNumVars>& point,
                    const std::array<bool, kNumVars>& bound) {
    // Term-by-term composition with memoized powers per variable.
    std::array<std::vector<RatFun>, kNumVars> powers;
    for (int i = 0; i < kNumVars; ++i) powers[i].push_back(RatFun(1));
    auto power = [&](int i, int e) -> const RatFun& {
        auto& cache = powers[static_cast<size_t>(i)];
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * point[static_cast<size_t>(i)]);
        return cache[static_cast<size_t>(e)];
    };
    RatFun acc(0);
    for (const auto& [m, c] : p.terms()) {
        RatFun term{Poly(c)};
        Monomial passthrough = monomial_one();
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (bound[static_cast<size_t>(i)])
                term *= power(i, m[i]);
            else
                passthrough[static_cast<size_t>(i)] = m[i];
        }
        term *= RatFun(Poly::monomial(1, passthrough));
        acc += term;
    }
    return acc;
}

} // namespace

RatFun RatFun::substitute(const std::map<Var, RatFun>& bindings) const {
    std::array<RatFun, kNumVars> point;
    std::array<bool, kNumVars> bound{};
    for (const auto& [v, val] : bindings) {
        point[static_cast<size_t>(static_cast<int>(v))] = val;
        bound[static_cast<size_t>(static_cast<int>(v))] = true;
    }
    RatFun top = eval_poly_at(num_, point, bound);
    RatFun bottom = eval_poly_at(den_, point, bound);
    if (bottom.is_zero())
        throw SubstitutionSingular("denominator vanishes under substitution");
    return top / bottom;
}

std::vector<RatFun> RatFun::series_coeffs(Var v, int order) const {
    ensure(order >= 0, "series order must be nonnegative");
    std::vector<Poly> n = num_.coeffs_in(v);
    std::vector<Poly> d = den_.coeffs_in(v);
    if (d[0].is_zero() || !d[0].is_monomial())
        throw NotExpandable("denominator constant term is not a unit in the expansion variable");
    RatFun lead_inv = RatFun(Poly(1), d[0]);
    std::vector<RatFun> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        RatFun acc = k < static_cast<int>(n.size()) ? RatFun(n[static_cast<size_t>(k)]) : RatFun(0);
        for (int j = 1; j <= k && j < static_cast<int>(d.size()); ++j)
            acc -= RatFun(d[static_cast<size_t>(j)]) * out[static_cast<size_t>(k - j)];
        out.push_back(acc * lead_inv);
    }
    return out;
}

Rat RatFun::eval_rat(const std::array<Rat, kNumVars>& point) const {
    Rat bottom = den_.eval_rat(point);
    ensure(bottom != 0, "evaluation point is a pole of the denominator");
    return num_.eval_rat(point) / bottom;
}

void Fraction::multiply_den(const Poly& factor, int mult) {
    ensure(!factor.is_zero(), "zero denominator factor");
    if (factor.is_one()) return;
    den_factors[factor] += mult;
}

void Fraction::multiply(const RatFun& f) {
    num *= f.num();
    multiply_den(f.den());
}

RatFun sum_fractions(const std::vector<Fraction>& terms) {
    std::map<Poly, int> common;
    for (const auto& t : terms)
        for (const auto& [f, m] : t.den_factors) {
            auto& slot = common[f];
            slot = std::max(slot, m);
        }
    Poly total(0);
    for (const auto& t : terms) {
        if (t.num.is_zero()) continue;
        Poly scaled = t.num;
        for (const auto& [f, m] : common) {
            auto it = t.den_factors.find(f);
            int have = it == t.den_factors.end() ? 0 : it->second;
            for (int k = have; k < m; ++k) scaled *= f;
        }
        total += scaled;
    }
    Poly den(1);
    for (const auto& [f, m] : common)
        for (int k = 0; k < m; ++k) den *= f;
    return RatFun(total, den);
}

} // namespace repzeta
