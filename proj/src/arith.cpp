#include "repzeta/arith.hpp"

#include <numeric>

namespace repzeta {

bool DirichletCoeffs::multiplicative() const {
    const long B = bound();
    if (B >= 1 && at(1) != 1) return false;
    for (long m = 2; m * 2 <= B; ++m)
        for (long n = 2; m * n <= B; ++n) {
            if (std::gcd(m, n) != 1) continue;
            if (at(m * n) != at(m) * at(n)) return false;
        }
    return true;
}

Int jordan_totient(int b, long n) {
    if (b < 1 || n < 1) throw DomainError("jordan_totient wants b >= 1, n >= 1");
    // Multiplicative with J_b(p^e) = p^{eb} - p^{(e-1)b}.
    Int result = 1;
    long rest = n;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        result *= int_pow(Int(p), static_cast<unsigned long>(e * b)) -
                  int_pow(Int(p), static_cast<unsigned long>((e - 1) * b));
    }
    if (rest > 1) result *= int_pow(Int(rest), static_cast<unsigned long>(b)) - 1;
    return result;
}

DirichletCoeffs dirichlet_from_quotients(const std::vector<std::pair<int, int>>& pairs,
                                         long bound) {
    if (bound < 1) throw DomainError("bound must be positive");
    std::vector<Int> acc(static_cast<size_t>(bound), 0);
    acc[0] = 1; // convolution identity
    for (const auto& [a, b] : pairs) {
        std::vector<Int> factor(static_cast<size_t>(bound));
        for (long n = 1; n <= bound; ++n)
            factor[static_cast<size_t>(n - 1)] =
                int_pow(Int(n), static_cast<unsigned long>(a)) * jordan_totient(b, n);
        std::vector<Int> next(static_cast<size_t>(bound), 0);
        for (long m = 1; m <= bound; ++m) {
            if (acc[static_cast<size_t>(m - 1)] == 0) continue;
            for (long n = 1; m * n <= bound; ++n)
                next[static_cast<size_t>(m * n - 1)] +=
                    acc[static_cast<size_t>(m - 1)] * factor[static_cast<size_t>(n - 1)];
        }
        acc = std::move(next);
    }
    return DirichletCoeffs{std::move(acc)};
}

std::vector<long> primes_up_to(long bound) {
    std::vector<bool> sieve(static_cast<size_t>(std::max(bound + 1, 2L)), true);
    std::vector<long> primes;
    for (long p = 2; p <= bound; ++p) {
        if (!sieve[static_cast<size_t>(p)]) continue;
        primes.push_back(p);
        for (long m = p * p; m <= bound; m += p) sieve[static_cast<size_t>(m)] = false;
    }
    return primes;
}

DirichletCoeffs global_coeffs_from_local(const GroupScheme& g, long bound) {
    if (bound < 1 || bound > 100000) throw DomainError("bound must lie in [1, 10^5]");
    std::vector<Int> coeffs(static_cast<size_t>(bound), 0);
    coeffs[0] = 1;
    for (long p : primes_up_to(bound)) {
        int order = 0;
        long pk = 1;
        while (pk <= bound / p) {
            pk *= p;
            ++order;
        }
        std::vector<Int> local = local_coefficients(g, p, order);
        // Fold the p-part into every index divisible by p.
        for (long n = bound; n >= 1; --n) {
            long rest = n;
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            if (e > 0 && coeffs[static_cast<size_t>(rest - 1)] != 0)
                coeffs[static_cast<size_t>(n - 1)] =
                    coeffs[static_cast<size_t>(rest - 1)] * local[static_cast<size_t>(e)];
        }
    }
    return DirichletCoeffs{std::move(coeffs)};
}

QuotientPairs quotient_pairs(const GroupScheme& g) {
    QuotientPairs out;
    switch (g.family) {
        case Family::F:
            // zeta(s - 2(n+i+delta) + 1)/zeta(s - 2i): a = 2i, b = 2(n+delta) - 1
            for (int i = 0; i < g.n; ++i)
                out.convolvable.emplace_back(2 * i, 2 * (g.n + g.delta) - 1);
            break;
        case Family::G:
            // zeta(s - n - i)/zeta(s - i): a = i, b = n
            for (int i = 0; i < g.n; ++i) out.convolvable.emplace_back(i, g.n);
            break;
        case Family::H:
            out.convolvable.emplace_back(0, g.n);
            for (int i = 0; i < g.m(); ++i)
                out.doubled.emplace_back(2 * (g.m() + i + g.epsilon()) + 1, 2 * (i + 1));
            break;
    }
    return out;
}

std::vector<Int> euler_phi_table(long bound) {
    std::vector<long> phi(static_cast<size_t>(bound) + 1);
    for (long n = 0; n <= bound; ++n) phi[static_cast<size_t>(n)] = n;
    for (long p = 2; p <= bound; ++p) {
        if (phi[static_cast<size_t>(p)] != p) continue; // composite
        for (long m = p; m <= bound; m += p)
            phi[static_cast<size_t>(m)] -= phi[static_cast<size_t>(m)] / p;
    }
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(bound));
    for (long n = 1; n <= bound; ++n) out.emplace_back(phi[static_cast<size_t>(n)]);
    return out;
}

} // namespace repzeta
