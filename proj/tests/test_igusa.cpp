#include <doctest.h>

#include <random>

#include "repzeta/igusa.hpp"
#include "repzeta/io.hpp"

using namespace repzeta;

TEST_CASE("closed integrals at the anchors") {
    CHECK(rat_equal(igusa_closed(PvsKind::mat_det(1)), parse_ratfun("(q - 1)/(q - u)")));
    CHECK(rat_equal(igusa_closed(PvsKind::sym_det(1)), igusa_closed(PvsKind::mat_det(1))));
    CHECK(rat_equal(igusa_closed(PvsKind::alt_pfaffian(2)), parse_ratfun("(q - 1)/(q - u)")));
    CHECK_THROWS_AS(PvsKind::alt_pfaffian(3), DomainError);
}

TEST_CASE("oracle measures at the anchors") {
    CHECK(igusa_coeff_oracle(PvsKind::mat_det(1), 2, 0) == Rat(1, 2));
    CHECK(igusa_coeff_oracle(PvsKind::mat_det(2), 2, 0) == Rat(3, 8)); // 6 invertible / 16
    CHECK(igusa_coeff_oracle(PvsKind::sym_det(2), 3, 0) == Rat(2, 3));
}

TEST_CASE("oracle matches the closed series coefficients") {
    struct Case {
        PvsKind kind;
        std::vector<long> primes;
    };
    const std::vector<Case> cases = {
        {PvsKind::alt_pfaffian(2), {2, 3}}, {PvsKind::mat_det(1), {2, 3}},
        {PvsKind::mat_det(2), {2, 3}},      {PvsKind::sym_det(1), {3}},
        {PvsKind::sym_det(2), {3}},
    };
    for (const auto& c : cases) {
        for (long p : c.primes) {
            std::array<Rat, kNumVars> point;
            point.fill(Rat(0));
            point[static_cast<int>(Var::q)] = Rat(p);
            auto series = igusa_closed(c.kind).series_coeffs(Var::u, 2);
            for (int k = 0; k <= 2; ++k) {
                CAPTURE(c.kind.label());
                CAPTURE(p);
                CAPTURE(k);
                CHECK(igusa_coeff_oracle(c.kind, p, k) ==
                      series[static_cast<size_t>(k)].eval_rat(point));
            }
        }
    }
}

TEST_CASE("u = 0 specializes to the full-rank measure") {
    struct Pairing {
        PvsKind kind;
        MatrixSpaceKind space;
    };
    const std::vector<Pairing> pairs = {
        {PvsKind::alt_pfaffian(2), MatrixSpaceKind::alt(2)},
        {PvsKind::alt_pfaffian(4), MatrixSpaceKind::alt(4)},
        {PvsKind::mat_det(1), MatrixSpaceKind::mat(1)},
        {PvsKind::mat_det(2), MatrixSpaceKind::mat(2)},
        {PvsKind::sym_det(1), MatrixSpaceKind::sym(1)},
        {PvsKind::sym_det(2), MatrixSpaceKind::sym(2)},
    };
    for (const auto& pairing : pairs) {
        for (long q : {2L, 3L}) {
            std::array<Rat, kNumVars> point;
            point.fill(Rat(0));
            point[static_cast<int>(Var::q)] = Rat(q);
            Rat at_zero = igusa_closed(pairing.kind).series_coeffs(Var::u, 0)[0].eval_rat(point);
            Rat full_rank(rank_count_closed(pairing.space, 0, q),
                          int_pow(Int(q), static_cast<unsigned long>(
                                              pairing.space.free_coordinates())));
            full_rank.canonicalize();
            CAPTURE(pairing.kind.label());
            CHECK(at_zero == full_rank);
        }
    }
}

TEST_CASE("pfaffian") {
    IntMat base(2, 2);
    base.at(0, 1) = 3;
    base.at(1, 0) = -3;
    CHECK(pfaffian(base) == 3);

    IntMat zero(4, 4);
    CHECK(pfaffian(zero) == 0);

    // 4x4 generic pattern: y12*y34 - y13*y24 + y14*y23
    IntMat m(4, 4);
    const long vals[4][4] = {{0, 2, 3, 5}, {-2, 0, 7, 11}, {-3, -7, 0, 13}, {-5, -11, -13, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = vals[i][j];
    CHECK(pfaffian(m) == Int(2 * 13 - 3 * 11 + 5 * 7));

    IntMat odd(3, 3);
    CHECK_THROWS_AS(pfaffian(odd), DomainError);
    IntMat not_anti(2, 2);
    not_anti.at(0, 1) = 1;
    CHECK_THROWS_AS(pfaffian(not_anti), DomainError);
}

TEST_CASE("pfaffian squares to the determinant on random matrices") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        int size = 2 * (1 + trial % 3);
        IntMat m(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) {
                int v = entry(rng);
                m.at(i, j) = v;
                m.at(j, i) = -v;
            }
        CHECK(pfaffian(m) * pfaffian(m) == determinant(m)); // also asserted per call
    }
}

TEST_CASE("symmetric-antisymmetric shift relation") {
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(verify_sym_alt_relation(n));
    }
}

TEST_CASE("pole sets of the local integrals") {
    CHECK(pvs_pole_set(PvsKind::mat_det(2)) == PoleSet{{-1, 1}, {-2, 1}});
    CHECK(pvs_pole_set(PvsKind::alt_pfaffian(4)) == PoleSet{{-1, 1}, {-3, 1}});
    CHECK(pvs_pole_set(PvsKind::sym_det(2)) == PoleSet{{-1, 1}, {-3, 2}});
}

TEST_CASE("pole translation by the abscissa") {
    CHECK(verify_pole_translation(GroupScheme(Family::G, 2)));
    CHECK(verify_pole_translation(GroupScheme(Family::H, 2)));
    CHECK(verify_pole_translation(GroupScheme(Family::F, 2, 0)));
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g :
             {GroupScheme(Family::F, n, 0), GroupScheme(Family::F, n, 1), GroupScheme(Family::G, n),
              GroupScheme(Family::H, n)}) {
            CAPTURE(g.label());
            CHECK(verify_pole_translation(g));
        }
    }
}

TEST_CASE("Bernstein-Sato candidate sets") {
    CHECK(verify_bs_candidates(1));
    CHECK(verify_bs_candidates(2));
    CHECK(verify_bs_candidates(4));
}

TEST_CASE("oracle resource bound fires") {
    CHECK_THROWS_AS(igusa_coeff_oracle(PvsKind::mat_det(3), 5, 2), ResourceLimit);
}
