#include <doctest.h>

#include <random>

#include "repzeta/counting.hpp"

using namespace repzeta;

TEST_CASE("closed rank counts at the anchors") {
    CHECK(rank_count_closed(MatrixSpaceKind::mat(2), 1, 2) == 9);
    CHECK(rank_count_closed(MatrixSpaceKind::sym(2), 0, 2) == 4);
    CHECK(rank_count_closed(MatrixSpaceKind::alt(4), 1, 2) == 35);
    CHECK_THROWS_AS(rank_count_closed(MatrixSpaceKind::mat(2), 3, 2), DomainError);
}

TEST_CASE("enumerated rank counts at the anchors") {
    auto sym2 = rank_count_enumerate(MatrixSpaceKind::sym(2), 2);
    CHECK(sym2 == std::map<int, long>{{0, 1}, {1, 3}, {2, 4}});
    auto mat1 = rank_count_enumerate(MatrixSpaceKind::mat(1), 3);
    CHECK(mat1 == std::map<int, long>{{0, 1}, {1, 2}});
    auto alt2 = rank_count_enumerate(MatrixSpaceKind::alt(2), 2);
    CHECK(alt2 == std::map<int, long>{{0, 1}, {2, 1}});
}

TEST_CASE("closed rank counts sum to the space size") {
    for (int q : {2, 3}) {
        for (const auto& space :
             {MatrixSpaceKind::alt(4), MatrixSpaceKind::alt(6), MatrixSpaceKind::mat(3),
              MatrixSpaceKind::sym(3), MatrixSpaceKind::alt(5)}) {
            Int total = 0;
            for (int i = 0; i <= space.n(); ++i) total += rank_count_closed(space, i, q);
            CAPTURE(space.label());
            CHECK(total == int_pow(Int(q), static_cast<unsigned long>(space.free_coordinates())));
        }
    }
}

TEST_CASE("closed equals enumerated, including GF(4)") {
    for (int q : {2, 3, 4}) {
        for (const auto& space :
             {MatrixSpaceKind::alt(2), MatrixSpaceKind::alt(4), MatrixSpaceKind::mat(1),
              MatrixSpaceKind::mat(2), MatrixSpaceKind::sym(1), MatrixSpaceKind::sym(2),
              MatrixSpaceKind::sym(3)}) {
            CAPTURE(space.label());
            CAPTURE(q);
            auto table = rank_count_enumerate(space, q);
            for (int i = 0; i <= space.n(); ++i) {
                int rank = space.tag == MatrixSpaceKind::Tag::Alt ? 2 * (space.n() - i)
                                                                  : space.n() - i;
                long enumerated = table.count(rank) ? table.at(rank) : 0;
                CHECK(rank_count_closed(space, i, q) == enumerated);
            }
        }
    }
}

TEST_CASE("commutator matrices") {
    auto expect_2x2 = [](const SmallMat& m, long long c) {
        CHECK(m.rows == 2);
        CHECK(m.at(0, 0) == 0);
        CHECK(m.at(0, 1) == c);
        CHECK(m.at(1, 0) == -c);
        CHECK(m.at(1, 1) == 0);
    };
    expect_2x2(commutator_matrix(GroupScheme(Family::G, 1), std::vector<long long>{7}), 7);
    expect_2x2(commutator_matrix(GroupScheme(Family::F, 1, 0), std::vector<long long>{7}), 7);
    expect_2x2(commutator_matrix(GroupScheme(Family::H, 1), std::vector<long long>{7}), 7);

    // H_2: S = [[a, b], [b, c]] sits in the antidiagonal block
    SmallMat h2 = commutator_matrix(GroupScheme(Family::H, 2), std::vector<long long>{1, 2, 3});
    CHECK(h2.at(0, 2) == 1);
    CHECK(h2.at(0, 3) == 2);
    CHECK(h2.at(1, 2) == 2);
    CHECK(h2.at(1, 3) == 3);
    CHECK(h2.at(2, 0) == -1);
    CHECK(h2.at(3, 1) == -3);
    CHECK_THROWS_AS(commutator_matrix(GroupScheme(Family::H, 2), std::vector<long long>{1}),
                    DomainError);
}

TEST_CASE("capped divisor types at the anchors") {
    SmallMat zero(2, 2);
    CHECK(capped_divisor_valuations(zero, 2, 3) == std::vector<int>{3, 3});
    CHECK(nu_type(zero, 2, 3) == std::vector<int>{3});

    SmallMat unit(2, 2);
    unit.at(0, 1) = 1;
    unit.at(1, 0) = -1;
    CHECK(capped_divisor_valuations(unit, 2, 2) == std::vector<int>{0, 0});
    CHECK(nu_type(unit, 2, 2) == std::vector<int>{0});

    SmallMat twice(2, 2);
    twice.at(0, 1) = 2;
    twice.at(1, 0) = -2;
    CHECK(capped_divisor_valuations(twice, 2, 2) == std::vector<int>{1, 1});
    CHECK(nu_type(twice, 2, 2) == std::vector<int>{1});
}

namespace {

IntMat random_unimodular(std::mt19937& rng, int size) {
    IntMat m(size, size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1;
    std::uniform_int_distribution<int> pick(0, size - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int step = 0; step < 12; ++step) {
        int r1 = pick(rng), r2 = pick(rng);
        if (r1 == r2) continue;
        int c = coeff(rng);
        for (int j = 0; j < size; ++j) m.at(r1, j) += Int(c) * m.at(r2, j);
    }
    return m;
}

IntMat multiply(const IntMat& a, const IntMat& b) {
    IntMat out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k)
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    return out;
}

} // namespace

TEST_CASE("divisor type is invariant under unimodular multiplication") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 10; ++trial) {
        IntMat m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = entry(rng);
        auto reference = capped_divisor_valuations(m, 2, 3);
        for (int conj = 0; conj < 10; ++conj) {
            IntMat left = random_unimodular(rng, 4);
            IntMat right = random_unimodular(rng, 4);
            CHECK(capped_divisor_valuations(multiply(multiply(left, m), right), 2, 3) == reference);
        }
    }
}

TEST_CASE("type profiles") {
    // mu_l zeros first, then the partial sums r_{i_l}, r_{i_l}+r_{i_{l-1}}, ...
    CHECK(type_profile(SubsetIndex(1, {0}), {1}) == std::vector<int>{0});
    CHECK(type_profile(SubsetIndex(2, {1}), {2}) == std::vector<int>{0, 2});
    CHECK(type_profile(SubsetIndex(2, {0}), {2}) == std::vector<int>{0, 0});
    CHECK(type_profile(SubsetIndex(2, {0, 1}), {1, 1}) == std::vector<int>{0, 1});
    CHECK(type_profile(SubsetIndex(3, {0, 2}), {2, 1}) == std::vector<int>{0, 1, 1});
    CHECK(type_profile(SubsetIndex(3, {1, 2}), {2, 1}) == std::vector<int>{0, 1, 3});
    CHECK_THROWS_AS(type_profile(SubsetIndex(2, {0}), {0}), DomainError);
}

TEST_CASE("closed and enumerated type counts agree at the anchors") {
    // G_1, I = {0}, r = (1): the profile is (0), satisfied by the one
    // primitive class mod 2.
    GroupScheme g1(Family::G, 1);
    SubsetIndex I0(1, {0});
    CHECK(count_type_enumerate(g1, I0, {1}, 2) == 1);
    CHECK(count_type_closed(g1, I0, {1}, 2) == 1);
    CHECK(count_type_enumerate(GroupScheme(Family::H, 1), SubsetIndex(1, {}), {}, 2) == 1);

    GroupScheme f20(Family::F, 2, 0);
    SubsetIndex I1(2, {1});
    CHECK(count_type_closed(f20, I1, {1}, 2) == count_type_enumerate(f20, I1, {1}, 2));
}

TEST_CASE("closed equals enumerated for every admissible profile at n <= 2") {
    for (int n = 1; n <= 2; ++n) {
        std::vector<GroupScheme> schemes = {GroupScheme(Family::F, n, 0),
                                            GroupScheme(Family::G, n), GroupScheme(Family::H, n)};
        for (const auto& g : schemes) {
            for (long p : {2L, 3L}) {
                for (const auto& I : SubsetIndex::all(n)) {
                    if (I.size() == 0) continue;
                    // all r_I with total N <= 2
                    std::vector<std::vector<int>> choices;
                    if (I.size() == 1) choices = {{1}, {2}};
                    else choices = {{1, 1}};
                    for (const auto& r : choices) {
                        CAPTURE(g.label());
                        CAPTURE(p);
                        CAPTURE(I.label());
                        CHECK(count_type_closed(g, I, r, p) ==
                              Int(count_type_enumerate(g, I, r, p)));
                    }
                }
            }
        }
    }
}

TEST_CASE("truncated zeta oracle matches the closed local factor") {
    GroupScheme g1(Family::G, 1);
    auto oracle = local_zeta_truncation_oracle(g1, 2, 1);
    CHECK(oracle == std::vector<long>{1, 1});
    for (const auto& g : {GroupScheme(Family::G, 2), GroupScheme(Family::H, 2)}) {
        for (long p : {2L, 3L}) {
            CAPTURE(g.label());
            CAPTURE(p);
            auto counts = local_zeta_truncation_oracle(g, p, 2);
            auto closed = local_coefficients(g, p, 2);
            for (int k = 0; k <= 2; ++k) CHECK(Int(counts[static_cast<size_t>(k)]) == closed[static_cast<size_t>(k)]);
        }
    }
}

TEST_CASE("resource bounds fire") {
    CHECK_THROWS_AS(rank_count_enumerate(MatrixSpaceKind::mat(5), 3), ResourceLimit);
    CHECK_THROWS_AS(count_type_enumerate(GroupScheme(Family::F, 2, 1), SubsetIndex(2, {1}), {2}, 3),
                    ResourceLimit);
}
