#include "repzeta/igusa.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace repzeta {

PvsKind PvsKind::alt_pfaffian(int size) {
    if (size < 2 || size % 2 != 0) throw DomainError("AltPfaffian wants a positive even size");
    return {Tag::AltPfaffian, size};
}

int PvsKind::ambient_dimension() const {
    switch (tag) {
        case Tag::AltPfaffian: return size * (size - 1) / 2;
        case Tag::MatDet: return size * size;
        case Tag::SymDet: return size * (size + 1) / 2;
    }
    return 0;
}

std::string PvsKind::label() const {
    switch (tag) {
        case Tag::AltPfaffian: return "AltPfaffian(" + std::to_string(size) + ")";
        case Tag::MatDet: return "MatDet(" + std::to_string(size) + ")";
        case Tag::SymDet: return "SymDet(" + std::to_string(size) + ")";
    }
    return "?";
}

namespace {

RatFun q_pow(int e) { return RatFun::variable(Var::q, e); }
const RatFun kU = RatFun::variable(Var::u);

} // namespace

RatFun igusa_closed(const PvsKind& kind) {
    RatFun r(1);
    switch (kind.tag) {
        case PvsKind::Tag::AltPfaffian: {
            const int n = kind.size / 2;
            for (int i = 0; i < n; ++i)
                r *= (RatFun(1) - q_pow(-1 - 2 * i)) / (RatFun(1) - q_pow(-1 - 2 * i) * kU);
            return r;
        }
        case PvsKind::Tag::MatDet: {
            for (int i = 0; i < kind.size; ++i)
                r *= (RatFun(1) - q_pow(-1 - i)) / (RatFun(1) - q_pow(-1 - i) * kU);
            return r;
        }
        case PvsKind::Tag::SymDet: {
            const int n = kind.size, m = n / 2, eps = n - 2 * m;
            RatFun head_num = eps == 1 ? RatFun(1) - q_pow(-n)
                                       : RatFun(1) - q_pow(-n - 1) * kU;
            r = head_num / (RatFun(1) - q_pow(-1) * kU);
            for (int i = 0; i < m; ++i)
                r *= (RatFun(1) - q_pow(-1 - 2 * i)) /
                     (RatFun(1) - q_pow(-3 - 2 * i) * kU * kU);
            return r;
        }
    }
    throw DomainError("unknown PVS kind");
}

namespace {

// The relative invariant expanded as a signed sum of coordinate products,
// indices referring to the same coordinate layout the oracle enumerates.
struct InvariantTerm {
    int sign;
    std::vector<int> coords;
};

int alt_index(int s, int i, int j) { // i < j, lex over pairs
    return i * s - i * (i + 1) / 2 + (j - i - 1);
}

int sym_index(int n, int i, int j) { // i <= j, upper triangle row-major
    return i * n - i * (i - 1) / 2 + (j - i);
}

void matchings(std::vector<int>& free_idx, int s, int sign, std::vector<int>& picked,
               std::vector<InvariantTerm>& out) {
    if (free_idx.empty()) {
        out.push_back({sign, picked});
        return;
    }
    int i0 = free_idx[0];
    for (size_t jpos = 1; jpos < free_idx.size(); ++jpos) {
        int j = free_idx[static_cast<size_t>(jpos)];
        std::vector<int> rest;
        for (size_t k = 1; k < free_idx.size(); ++k)
            if (k != jpos) rest.push_back(free_idx[k]);
        picked.push_back(alt_index(s, i0, j));
        int flip = (static_cast<int>(jpos) - 1) % 2 == 0 ? 1 : -1;
        matchings(rest, s, sign * flip, picked, out);
        picked.pop_back();
    }
}

std::vector<InvariantTerm> invariant_terms(const PvsKind& kind) {
    std::vector<InvariantTerm> out;
    const int n = kind.size;
    if (kind.tag == PvsKind::Tag::AltPfaffian) {
        std::vector<int> idx(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
        std::vector<int> picked;
        matchings(idx, n, 1, picked, out);
        return out;
    }
    // Determinant as the signed permutation sum.
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        InvariantTerm term{inv % 2 == 0 ? 1 : -1, {}};
        for (int i = 0; i < n; ++i) {
            int j = perm[static_cast<size_t>(i)];
            term.coords.push_back(kind.tag == PvsKind::Tag::MatDet
                                      ? i * n + j
                                      : sym_index(n, std::min(i, j), std::max(i, j)));
        }
        out.push_back(std::move(term));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

long long power_within(long long base, int exp, unsigned long long limit) {
    unsigned long long total = 1;
    for (int i = 0; i < exp; ++i) {
        total *= static_cast<unsigned long long>(base);
        if (total > limit) throw ResourceLimit("oracle enumeration exceeds the resource bound");
    }
    return static_cast<long long>(total);
}

} // namespace

Rat igusa_coeff_oracle(const PvsKind& kind, long p, int k, int jobs) {
    if (p < 2 || k < 0) throw DomainError("igusa_coeff_oracle wants p >= 2, k >= 0");
    const int D = kind.ambient_dimension();
    const long long modulus = power_within(p, k + 1, 600'000'000ull);
    const long long total = power_within(modulus, D, 600'000'000ull);
    const std::vector<InvariantTerm> terms = invariant_terms(kind);

    auto count_range = [&](long long lo, long long hi) {
        std::vector<long long> digits(static_cast<size_t>(D), 0);
        long long rem = lo;
        for (int d = 0; d < D; ++d) {
            digits[static_cast<size_t>(d)] = rem % modulus;
            rem /= modulus;
        }
        long long hits = 0;
        for (long long idx = lo; idx < hi; ++idx) {
            long long value = 0;
            for (const auto& term : terms) {
                long long prod = term.sign;
                for (int c : term.coords) prod *= digits[static_cast<size_t>(c)];
                value += prod;
            }
            long long residue = value % modulus;
            if (residue < 0) residue += modulus;
            if (residue != 0) {
                int v = 0;
                while (residue % p == 0) {
                    residue /= p;
                    ++v;
                }
                if (v == k) ++hits;
            }
            // odometer increment
            for (int d = 0; d < D; ++d) {
                if (++digits[static_cast<size_t>(d)] < modulus) break;
                digits[static_cast<size_t>(d)] = 0;
            }
        }
        return hits;
    };

    jobs = std::max(1, jobs);
    long long hits = 0;
    if (jobs == 1 || total < 65536) {
        hits = count_range(0, total);
    } else {
        std::vector<long long> partial(static_cast<size_t>(jobs), 0);
        std::vector<std::thread> workers;
        long long chunk = (total + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            long long lo = j * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back(
                [&, j, lo, hi] { partial[static_cast<size_t>(j)] = count_range(lo, hi); });
        }
        for (auto& w : workers) w.join();
        for (long long h : partial) hits += h;
    }

    Rat measure(Int(static_cast<long>(hits)),
                int_pow(Int(p), static_cast<unsigned long>(k + 1) * static_cast<unsigned long>(D)));
    measure.canonicalize();
    return measure;
}

Int determinant(const IntMat& m) {
    ensure(m.rows == m.cols, "determinant wants a square matrix");
    const int n = m.rows;
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMat minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Int piece = m.at(0, j) * determinant(minor);
        acc += (j % 2 == 0) ? piece : -piece;
    }
    return acc;
}

Int pfaffian(const IntMat& m) {
    ensure(m.rows == m.cols, "pfaffian wants a square matrix");
    const int n = m.rows;
    if (n % 2 != 0) throw DomainError("pfaffian wants an even-size matrix");
    if (n > 6) throw DomainError("pfaffian supports sizes up to 6");
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (m.at(r, c) != -m.at(c, r)) throw DomainError("pfaffian wants an antisymmetric matrix");

    // First-row expansion.
    std::function<Int(std::vector<int>)> pf = [&](std::vector<int> rows) -> Int {
        if (rows.empty()) return 1;
        Int acc = 0;
        int i0 = rows[0];
        for (size_t jpos = 1; jpos < rows.size(); ++jpos) {
            int j = rows[jpos];
            if (m.at(i0, j) == 0) continue;
            std::vector<int> rest;
            for (size_t t = 1; t < rows.size(); ++t)
                if (t != jpos) rest.push_back(rows[t]);
            Int piece = m.at(i0, j) * pf(rest);
            acc += ((jpos - 1) % 2 == 0) ? piece : -piece;
        }
        return acc;
    };
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    Int result = pf(all);
    ensure(result * result == determinant(m), "Pf^2 = det");
    return result;
}

bool verify_sym_alt_relation(int n) {
    if (n < 1) throw DomainError("verify_sym_alt_relation needs n >= 1");
    RatFun lhs = igusa_closed(PvsKind::sym_det(2 * n));
    RatFun shifted = igusa_closed(PvsKind::alt_pfaffian(2 * n))
                         .substitute({{Var::u, q_pow(-2) * kU * kU}});
    RatFun head = (RatFun(1) - q_pow(-2 * n - 1) * kU) / (RatFun(1) - q_pow(-1) * kU);
    return rat_equal(lhs, head * shifted);
}

PoleSet pvs_pole_set(const PvsKind& kind) {
    // Cleared denominator factors have the shape q^a - u^b (pole at -a/b),
    // possibly sign-flipped by normalization.
    Poly rest = igusa_closed(kind).den();
    PoleSet out;
    const int max_a = rest.degree_in(Var::q) + 1;
    const int max_b = rest.degree_in(Var::u) + 1;
    for (int b = 1; b <= max_b; ++b) {
        for (int a = 0; a <= max_a; ++a) {
            Monomial mq = monomial_one(), mu = monomial_one();
            mq[static_cast<int>(Var::q)] = a;
            mu[static_cast<int>(Var::u)] = b;
            Poly factor = Poly::monomial(1, mq) - Poly::monomial(1, mu);
            for (int sign : {1, -1}) {
                Poly f = sign > 0 ? factor : -factor;
                for (;;) {
                    auto quot = rest.divided_by(f);
                    if (!quot) break;
                    rest = *quot;
                    out.insert(reduced_fraction(-a, b));
                }
            }
        }
    }
    ensure(rest.is_monomial(), "denominator is a product of q^a - u^b factors up to a monomial");
    return out;
}

PvsKind matched_pvs(const GroupScheme& g) {
    switch (g.family) {
        case Family::F: return PvsKind::alt_pfaffian(2 * g.n);
        case Family::G: return PvsKind::mat_det(g.n);
        case Family::H: return PvsKind::sym_det(g.n);
    }
    throw DomainError("unknown family");
}

bool verify_pole_translation(const GroupScheme& g) {
    PoleSet translated;
    for (const auto& [num, den] : pole_set(g))
        translated.insert(reduced_fraction(num - g.alpha() * den, den));
    return translated == pvs_pole_set(matched_pvs(g));
}

bool verify_bs_candidates(int n) {
    GroupScheme h(Family::H, n);
    PoleSet candidates, zeros;
    for (int i = 0; i < n; ++i) {
        candidates.insert(reduced_fraction(a_exp(h, i) - h.alpha() * (n - i), n - i));
        zeros.insert(reduced_fraction(-(i + 2), 2));
    }
    return candidates == zeros;
}

} // namespace repzeta
