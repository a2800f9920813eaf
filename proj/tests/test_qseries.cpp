#include <doctest.h>

#include "repzeta/io.hpp"
#include "repzeta/qseries.hpp"

using namespace repzeta;

TEST_CASE("gaussian binomial basics") {
    CHECK(gaussian_binomial(2, 1, Var::X) == parse_poly("1 + X"));
    CHECK(gaussian_binomial(4, 2, Var::X) == parse_poly("1 + X + 2*X^2 + X^3 + X^4"));
    for (int n = 0; n <= 5; ++n) CHECK(gaussian_binomial(n, 0, Var::X) == Poly(1));
    CHECK_THROWS_AS(gaussian_binomial(1, 2, Var::X), DomainError);
}

TEST_CASE("gaussian binomial symmetry and specialization") {
    std::array<Rat, kNumVars> at_one;
    at_one.fill(Rat(0));
    at_one[static_cast<int>(Var::X)] = Rat(1);
    for (int a = 0; a <= 8; ++a) {
        for (int b = 0; b <= a; ++b) {
            CHECK(gaussian_binomial(a, b, Var::X) == gaussian_binomial(a, a - b, Var::X));
            CHECK(gaussian_binomial(a, b, Var::X).eval_rat(at_one) == Rat(binomial(a, b)));
        }
    }
}

TEST_CASE("binomial inversion identity") {
    // binom(n,j)_X = binom(n,j)_{X^-1} X^{j(n-j)}
    const RatFun xinv = RatFun::variable(Var::X, -1);
    for (int n = 1; n <= 8; ++n) {
        for (int j = 0; j <= n; ++j) {
            RatFun lhs{gaussian_binomial(n, j, Var::X)};
            RatFun rhs = lhs.substitute({{Var::X, xinv}}) *
                         RatFun(Poly::variable(Var::X, j * (n - j)));
            CHECK(rat_equal(lhs, rhs));
        }
    }
}

TEST_CASE("q-multinomial") {
    CHECK(q_multinomial(SubsetIndex(2, {1}), Var::X) == parse_poly("1 + X"));
    CHECK(q_multinomial(SubsetIndex(3, {}), Var::X) == Poly(1));
    CHECK(q_multinomial(SubsetIndex(2, {0}), Var::X) == Poly(1));
    CHECK(q_multinomial(SubsetIndex(3, {1, 2}), Var::X) ==
          gaussian_binomial(3, 2, Var::X) * gaussian_binomial(2, 1, Var::X));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(RatFun::variable(Var::X), Var::Y, 0).same_representation(RatFun(1)));
    CHECK(rat_equal(pochhammer(RatFun::variable(Var::X), Var::Y, 1), parse_ratfun("1 - X")));
    RatFun p = pochhammer(parse_ratfun("1/q"), Var::q, -1, 2);
    CHECK(rat_equal(p, parse_ratfun("(1 - 1/q)*(1 - 1/q^2)")));
    CHECK(rat_equal(pochhammer(RatFun::variable(Var::X), Var::Y, 3),
                    parse_ratfun("(1 - X)*(1 - X*Y)*(1 - X*Y^2)")));
}

TEST_CASE("subset index conventions") {
    SubsetIndex empty(3, {});
    CHECK(empty.i1() == 3);
    SubsetIndex I(4, {1, 3});
    CHECK(I.i1() == 1);
    CHECK(I.mu(0) == 1); // i_1 - i_0
    CHECK(I.mu(1) == 2); // i_2 - i_1
    CHECK(I.mu(2) == 1); // i_3(=n) - i_2
    CHECK_THROWS_AS(SubsetIndex(2, {2}), DomainError);
    CHECK(SubsetIndex::all(3).size() == 8);
}

TEST_CASE("named identities, smallest hand-checkable cases") {
    CHECK(verify_identity(IdentityKind::multinomial_B, 1));
    CHECK(verify_identity(IdentityKind::q_binomial, 2));
    CHECK(verify_identity(IdentityKind::typeH, 2));
    CHECK(verify_identity(IdentityKind::binomial_A, 3));
}

TEST_CASE("all identities up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(verify_identity(IdentityKind::q_binomial, n));
        CHECK(verify_identity(IdentityKind::binomial_A, n));
        CHECK(verify_identity(IdentityKind::multinomial_B, n));
        CHECK(verify_identity(IdentityKind::typeH, n));
    }
}

TEST_CASE("identity verification range") {
    CHECK(verify_identity(IdentityKind::q_binomial, 8));
    CHECK(verify_identity(IdentityKind::binomial_A, 6));
    CHECK_THROWS_AS(verify_identity(IdentityKind::q_binomial, 9), DomainError);
    CHECK_THROWS_AS(verify_identity(IdentityKind::typeH, 0), DomainError);
}
