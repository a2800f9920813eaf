#include "repzeta/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "repzeta/io.hpp"

namespace repzeta {

SignedPerm::SignedPerm(std::vector<int> w) : window(std::move(w)) {
    const int n = static_cast<int>(window.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int a : window) {
        int v = std::abs(a);
        ensure(v >= 1 && v <= n && !seen[static_cast<size_t>(v)],
               "window must be a signed permutation of [n]");
        seen[static_cast<size_t>(v)] = true;
    }
}

int SignedPerm::apply(int x) const {
    if (x == 0) return 0;
    int v = window[static_cast<size_t>(std::abs(x) - 1)];
    return x > 0 ? v : -v;
}

SignedPerm SignedPerm::times_generator(int i) const {
    std::vector<int> w = window;
    if (i == 0)
        w[0] = -w[0];
    else
        std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
    return SignedPerm(std::move(w));
}

std::string SignedPerm::label() const {
    std::ostringstream out;
    out << "[";
    for (size_t k = 0; k < window.size(); ++k) {
        if (k) out << ",";
        out << window[k];
    }
    out << "]";
    return out.str();
}

std::vector<SignedPerm> enumerate_signed_perms(int n) {
    if (n < 1 || n > 7) throw ResourceLimit("enumerate_signed_perms supports 1 <= n <= 7");
    std::vector<int> base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    std::vector<SignedPerm> out;
    out.reserve((1u << n) * 5040u);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> w = base;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) w[static_cast<size_t>(i)] = -w[static_cast<size_t>(i)];
            out.emplace_back(std::move(w));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

StatRecord stats(const SignedPerm& w) {
    const int n = w.n();
    StatRecord r;
    for (int i = 0; i < n; ++i) {
        int a = w.window[static_cast<size_t>(i)];
        if (a < 0) {
            ++r.neg;
            r.length += -a;
        }
        for (int j = i + 1; j < n; ++j)
            if (a > w.window[static_cast<size_t>(j)]) ++r.length;
    }
    if (w.window[0] < 0) r.descents.push_back(0);
    for (int i = 1; i < n; ++i)
        if (w.window[static_cast<size_t>(i - 1)] > w.window[static_cast<size_t>(i)])
            r.descents.push_back(i);
    for (int i : r.descents) {
        r.sigma += 1L * n * n - 1L * i * i;
        r.rmaj += n - i;
    }
    long pairs = 0;
    for (int x = -n; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (((x - y) & 1) && w.apply(x) > w.apply(y)) ++pairs;
    ensure(pairs % 2 == 0, "opposite-parity inversion count is even");
    r.L = pairs / 2;
    return r;
}

std::map<SignedPerm, long> length_oracle_bfs(int n) {
    if (n < 1 || n > 4) throw ResourceLimit("length_oracle_bfs supports 1 <= n <= 4");
    std::vector<int> id(static_cast<size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    std::map<SignedPerm, long> dist;
    std::deque<SignedPerm> queue;
    SignedPerm e(id);
    dist[e] = 0;
    queue.push_back(e);
    while (!queue.empty()) {
        SignedPerm w = queue.front();
        queue.pop_front();
        long d = dist[w];
        for (int i = 0; i < n; ++i) {
            SignedPerm next = w.times_generator(i);
            if (dist.emplace(next, d + 1).second) queue.push_back(next);
        }
    }
    return dist;
}

RatFun descent_class_sum(int n, const SubsetIndex& I,
                         const std::function<RatFun(const StatRecord&)>& weight) {
    ensure(I.n == n, "descent class index must live in [n-1]_0");
    RatFun acc(0);
    for (const SignedPerm& w : enumerate_signed_perms(n)) {
        StatRecord s = stats(w);
        bool inside = std::all_of(s.descents.begin(), s.descents.end(),
                                  [&](int i) { return I.contains(i); });
        if (inside) acc += weight(s);
    }
    return acc;
}

bool verify_reiner(int n, const SubsetIndex& I) {
    if (n > 7) throw ResourceLimit("verify_reiner supports n <= 7");
    RatFun lhs = descent_class_sum(n, I, [](const StatRecord& s) {
        return RatFun(Poly::variable(Var::X, static_cast<int>(s.length)) *
                      Poly::variable(Var::Y, static_cast<int>(s.neg)));
    });
    RatFun base = -RatFun::variable(Var::Y) * RatFun::variable(Var::X, I.i1() + 1);
    RatFun rhs = RatFun(q_multinomial(I, Var::X)) * pochhammer(base, Var::X, n - I.i1());
    return rat_equal(lhs, rhs);
}

bool verify_f_formulas(int n, int delta, const SubsetIndex& I) {
    if (delta != 0 && delta != 1) throw DomainError("delta must be 0 or 1");
    RatFun lhs_F = descent_class_sum(n, I, [&](const StatRecord& s) {
        RatFun x = RatFun::variable(Var::X, static_cast<int>(2 * s.length + (2 * delta - 1) * s.neg));
        return (s.neg % 2) ? -x : x;
    });
    RatFun lhs_G = descent_class_sum(n, I, [](const StatRecord& s) {
        RatFun x = RatFun::variable(Var::X, static_cast<int>(s.length));
        return (s.neg % 2) ? -x : x;
    });
    return rat_equal(lhs_F, f_poly(GroupScheme(Family::F, n, delta), I)) &&
           rat_equal(lhs_G, f_poly(GroupScheme(Family::G, n), I));
}

std::map<std::string, ConjectureEntry> conjecture_L_report(int n) {
    GroupScheme h(Family::H, n);
    std::map<std::string, ConjectureEntry> out;
    for (const auto& I : SubsetIndex::all(n)) {
        RatFun rhs = descent_class_sum(n, I, [](const StatRecord& s) {
            RatFun x = RatFun::variable(Var::X, static_cast<int>(s.L));
            return (s.length % 2) ? -x : x;
        });
        RatFun lhs = f_poly(h, I);
        ConjectureEntry entry;
        entry.match = rat_equal(lhs, rhs);
        bool all_even = std::all_of(I.elements.begin(), I.elements.end(),
                                    [](int i) { return i % 2 == 0; });
        entry.proved_case = (I.size() == 1 && I.elements[0] == 0) ||
                            I.size() == n ||
                            (n % 2 == 0 && all_even);
        entry.lhs = to_string(lhs);
        entry.rhs = to_string(rhs);
        out.emplace(I.label(), std::move(entry));
    }
    return out;
}

bool verify_joint_distribution_B(int n) {
    if (n > 7) throw ResourceLimit("verify_joint_distribution_B supports n <= 7");
    RatFun lhs(0);
    for (const SignedPerm& w : enumerate_signed_perms(n)) {
        StatRecord s = stats(w);
        lhs += RatFun::variable(Var::X, static_cast<int>(s.sigma - s.length)) *
               RatFun::variable(Var::Y, static_cast<int>(s.neg)) *
               RatFun::variable(Var::Z, static_cast<int>(s.rmaj));
    }
    ensure(lhs.is_poly(), "B_n joint distribution is a polynomial");
    RatFun rhs(1);
    const RatFun Y = RatFun::variable(Var::Y), Z = RatFun::variable(Var::Z);
    for (int i = 0; i < n; ++i) {
        RatFun xz = RatFun::variable(Var::X, n + i) * Z;
        rhs *= (RatFun(1) + RatFun::variable(Var::X, i) * Y * Z) *
               (RatFun(1) - xz.pow(n - i)) / (RatFun(1) - xz);
    }
    return rat_equal(lhs, rhs);
}

bool verify_Sn_distribution(int n) {
    if (n < 1 || n > 8) throw ResourceLimit("verify_Sn_distribution supports 1 <= n <= 8");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    RatFun lhs_maj(0), lhs_rmaj(0);
    do {
        long inv = 0, sigma = 0, maj = 0, rmaj = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        for (int i = 1; i < n; ++i) {
            if (perm[static_cast<size_t>(i - 1)] > perm[static_cast<size_t>(i)]) {
                sigma += 1L * i * (n - i);
                maj += i;
                rmaj += n - i;
            }
        }
        RatFun x = RatFun::variable(Var::X, static_cast<int>(sigma - inv));
        lhs_maj += x * RatFun::variable(Var::Z, static_cast<int>(maj));
        lhs_rmaj += x * RatFun::variable(Var::Z, static_cast<int>(rmaj));
    } while (std::next_permutation(perm.begin(), perm.end()));

    RatFun rhs(1);
    for (int i = 0; i < n; ++i) {
        RatFun xz = RatFun::variable(Var::X, i) * RatFun::variable(Var::Z);
        rhs *= (RatFun(1) - xz.pow(n - i)) / (RatFun(1) - xz);
    }
    return rat_equal(lhs_maj, rhs) && rat_equal(lhs_rmaj, rhs);
}

MatchReport verify_distribution_L(int n) {
    if (n < 1 || n > 5) throw ResourceLimit("verify_distribution_L supports 1 <= n <= 5");
    const int m = n / 2, eps = n - 2 * m;
    // Half-integer powers of the book variable are rendered with X standing
    // for its square root: exponent sigma + rmaj - 2L in X.
    RatFun lhs(0);
    for (const SignedPerm& w : enumerate_signed_perms(n)) {
        StatRecord s = stats(w);
        if ((s.sigma + s.rmaj) % 2 != 0) return MatchReport::mismatch; // parity violation
        RatFun term = RatFun::variable(Var::X, static_cast<int>(s.sigma + s.rmaj - 2 * s.L)) *
                      RatFun::variable(Var::Z, static_cast<int>(s.rmaj));
        lhs += (s.length % 2) ? -term : term;
    }
    const RatFun Z = RatFun::variable(Var::Z);
    RatFun rhs = RatFun(1) - Z;
    rhs *= pochhammer(RatFun::variable(Var::X, 4) * Z * Z, Var::X, 4, m);
    rhs /= pochhammer(RatFun::variable(Var::X, 4 * (m + eps) + 2) * Z * Z, Var::X, 4, m);
    for (int i = 0; i <= n - 2; ++i) {
        RatFun xz = RatFun::variable(Var::X, n + i + 1) * Z;
        rhs *= RatFun(1) - xz.pow(n - i);
    }
    return rat_equal(lhs, rhs) ? MatchReport::match : MatchReport::mismatch;
}

bool verify_poincare_B(int n) {
    Poly lhs(0);
    for (const SignedPerm& w : enumerate_signed_perms(n))
        lhs += Poly::variable(Var::X, static_cast<int>(stats(w).length));
    RatFun rhs(1);
    for (int i = 1; i <= n; ++i)
        rhs *= (RatFun(1) - RatFun::variable(Var::X, 2 * i)) /
               (RatFun(1) - RatFun::variable(Var::X));
    return rat_equal(RatFun(lhs), rhs);
}

} // namespace repzeta
