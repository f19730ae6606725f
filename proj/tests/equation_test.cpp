#include <doctest.h>

#include "sixcube/equation.hpp"
#include "test_support.hpp"

using namespace sixcube;
using namespace sixcube::testsupport;

TEST_CASE("substitute reproduces the worked points") {
    const auto fam = family_ex1();
    const auto par = par_ex1();

    // (u,v) = (1,-11), the generator's image
    auto sol = substitute(fam, par, Rational(1), Rational(-11));
    CHECK(sol.x == std::vector<Rational>{Rational(1)});
    CHECK(sol.y == std::vector<Rational>{Rational(-10)});
    CHECK(sol.X == std::vector<Rational>{Rational(3)});
    CHECK(sol.Y == std::vector<Rational>{Rational(-12)});

    // u = 0 forces x = X = h and y = Y = C*v
    sol = substitute(fam, par, Rational(0), Rational(8));
    CHECK(sol.x == std::vector<Rational>{Rational(2)});
    CHECK(sol.y == std::vector<Rational>{Rational(8)});
    CHECK(sol.X == std::vector<Rational>{Rational(2)});
    CHECK(sol.Y == std::vector<Rational>{Rational(8)});

    // direct evaluation of the four linear forms; scaling by t = 18 must give
    // the known integer identity (15, -408, 33, -1380)
    sol = substitute(family_ex2(), par_ex2(), Rational(1, 2), Rational(-149, 54));
    CHECK(sol.x == std::vector<Rational>{Rational(5, 6)});
    CHECK(sol.y == std::vector<Rational>{Rational(-34, 27)});
    CHECK(sol.X == std::vector<Rational>{Rational(11, 6)});
    CHECK(sol.Y == std::vector<Rational>{Rational(-115, 27)});
    const auto scaled = scale_solution(family_ex2(), sol, Rational(18));
    CHECK(scaled.x == std::vector<Rational>{Rational(15)});
    CHECK(scaled.y == std::vector<Rational>{Rational(-408)});
    CHECK(scaled.X == std::vector<Rational>{Rational(33)});
    CHECK(scaled.Y == std::vector<Rational>{Rational(-1380)});
}

TEST_CASE("substitute uses the MINUS variant's linear forms") {
    EquationFamily fam = family_ex1();
    fam.sign = Sign::Minus;
    Parameterization par = par_ex1();
    par.h = Rational(-2);
    const auto sol = substitute(fam, par, Rational(1), Rational(-11));
    CHECK(sol.x == std::vector<Rational>{Rational(-1)});
    CHECK(sol.y == std::vector<Rational>{Rational(12)});
    CHECK(sol.X == std::vector<Rational>{Rational(-3)});
    CHECK(sol.Y == std::vector<Rational>{Rational(-10)});
    CHECK(residual(fam, sol).is_zero());
}

TEST_CASE("residual is the exact defect of the identity") {
    const auto fam = family_ex1();
    // 1^6 + 12^3 = 3^6 + 10^3, the 1729 identity
    CHECK(residual(fam, make_solution({Rational(1)}, {Rational(12)}, {Rational(3)},
                                      {Rational(10)}))
              .is_zero());
    // 1 + 1728 - 729 - 1331
    CHECK(residual(fam, make_solution({Rational(1)}, {Rational(12)}, {Rational(3)},
                                      {Rational(11)})) == Rational(-331));
    // termwise cancellation
    CHECK(residual(fam, make_solution({Rational(7, 5)}, {Rational(-3, 2)}, {Rational(7, 5)},
                                      {Rational(-3, 2)}))
              .is_zero());
}

TEST_CASE("residual rejects mismatched dimensions") {
    const auto fam = family_ex1();
    RationalSolution sol = make_solution({Rational(1), Rational(2)}, {Rational(1)},
                                         {Rational(1), Rational(2)}, {Rational(1)});
    CHECK_THROWS_AS(residual(fam, sol), DimensionMismatch);
}

TEST_CASE("scale_solution follows the (t, t^2) weighting") {
    const auto fam = family_ex1();
    const auto sol =
        make_solution({Rational(1)}, {Rational(-10)}, {Rational(3)}, {Rational(-12)});
    REQUIRE(residual(fam, sol).is_zero());

    const auto doubled = scale_solution(fam, sol, Rational(2));
    CHECK(doubled.x == std::vector<Rational>{Rational(2)});
    CHECK(doubled.y == std::vector<Rational>{Rational(-40)});
    CHECK(doubled.X == std::vector<Rational>{Rational(6)});
    CHECK(doubled.Y == std::vector<Rational>{Rational(-48)});
    CHECK(residual(fam, doubled).is_zero());

    const auto same = scale_solution(fam, sol, Rational(1));
    CHECK(same.x == sol.x);
    CHECK(same.y == sol.y);

    CHECK_THROWS_AS(scale_solution(fam, sol, Rational(0)), DivisionByZero);
}

TEST_CASE("residual scales by exactly t^6") {
    testsupport::Rng rng(424242);
    for (int i = 0; i < 50; ++i) {
        const EquationFamily fam = rng.family(3, 5);
        RationalSolution sol;
        for (std::size_t j = 0; j < fam.n(); ++j) {
            sol.x.push_back(rng.rational(9, 5));
            sol.X.push_back(rng.rational(9, 5));
        }
        for (std::size_t j = 0; j < fam.m(); ++j) {
            sol.y.push_back(rng.rational(9, 5));
            sol.Y.push_back(rng.rational(9, 5));
        }
        const Rational t = rng.nonzero_rational(7, 4);
        const Rational before = residual(fam, sol);
        const Rational after = residual(fam, scale_solution(fam, sol, t));
        CHECK(after == before * t.pow(6));
    }
}

TEST_CASE("family and parameterization validation") {
    EquationFamily fam = family_ex1();
    fam.b[0] = 0;
    CHECK_THROWS_AS(fam.validate(), DimensionMismatch);
    fam = family_ex1();
    CHECK_NOTHROW(fam.validate());

    Parameterization par = par_ex1();
    par.h = Rational(0);
    CHECK_THROWS_AS(par.validate(fam), DegenerateH);

    par = par_ex1();
    par.B[0] = Rational(0);  // sum b_i*B_i*C_i^2 = 0
    CHECK_THROWS_AS(par.validate(fam), ZeroDenominator);
}
