#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "repzeta/schemes.hpp"

namespace repzeta {

// Signed permutation in window form [a_1,...,a_n]: w(i) = a_i, extended to
// [-n, n] by w(-i) = -w(i), w(0) = 0.
struct SignedPerm {
    std::vector<int> window;

    explicit SignedPerm(std::vector<int> w);
    int n() const { return static_cast<int>(window.size()); }
    int apply(int x) const; // action on [-n, n]
    SignedPerm times_generator(int i) const; // right multiplication by s_i
    bool operator<(const SignedPerm& o) const { return window < o.window; }
    bool operator==(const SignedPerm& o) const { return window == o.window; }
    std::string label() const; // "[2,-1]"
};

struct StatRecord {
    long length = 0;
    long neg = 0;
    std::vector<int> descents; // subset of [n-1]_0
    long sigma = 0;            // sum over descents of n^2 - i^2
    long rmaj = 0;             // sum over descents of n - i
    long L = 0;                // half the opposite-parity inversion count
};

// Whole hyperoctahedral group B_n, 2^n n! elements. Capped at n = 7.
std::vector<SignedPerm> enumerate_signed_perms(int n);

StatRecord stats(const SignedPerm& w);

// Cayley-graph distances from the identity under s_0, ..., s_{n-1};
// independent oracle for the window length formula.
std::map<SignedPerm, long> length_oracle_bfs(int n);

// Sum of weight(w) over the descent class {w : D(w) subseteq I}.
RatFun descent_class_sum(int n, const SubsetIndex& I,
                         const std::function<RatFun(const StatRecord&)>& weight);

// Descent-class generating function for X^l Y^neg; equals
// binom(n,I)_X * (-Y X^{i_1+1}; X)_{n-i_1}.
bool verify_reiner(int n, const SubsetIndex& I);

// f_{F_{n,delta},I}(X) = sum (-1)^neg X^{2l + (2 delta - 1) neg} and
// f_{G_n,I}(X) = sum (-1)^neg X^l over the descent class.
bool verify_f_formulas(int n, int delta, const SubsetIndex& I);

struct ConjectureEntry {
    bool match = false;
    bool proved_case = false; // the cases known unconditionally
    std::string lhs;          // f_{H_n,I}
    std::string rhs;          // signed L-weighted descent-class sum
};
// Compare f_{H_n,I} against sum (-1)^l X^L over descent classes, for all I.
std::map<std::string, ConjectureEntry> conjecture_L_report(int n);

// Joint distribution of (sigma - l, neg, rmaj) over B_n against the closed
// product form.
bool verify_joint_distribution_B(int n);

// S_n distributions of (sigma - l, maj) and (sigma - l, rmaj).
bool verify_Sn_distribution(int n);

enum class MatchReport { match, mismatch };
// Signed distribution of ((sigma+rmaj)/2 - L, rmaj) against the closed form;
// evaluated in the half-power variable internally.
MatchReport verify_distribution_L(int n);

// Poincare polynomial of B_n: prod_{i=1}^{n} (1 - X^{2i})/(1 - X).
bool verify_poincare_B(int n);

} // namespace repzeta
