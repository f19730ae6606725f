#include <doctest.h>

#include "sixcube/group_law.hpp"
#include "sixcube/transform.hpp"
#include "test_support.hpp"

using namespace sixcube;
using namespace sixcube::testsupport;

namespace {

WeierstrassCurve curve_ex1() {
    return to_weierstrass(build_quartic(family_ex1(), par_ex1())).curve;
}

const CurvePoint P1 = CurvePoint::affine(Rational(-48), Rational(80));

}  // namespace

TEST_CASE("negate") {
    const auto curve = curve_ex1();
    CHECK(negate(curve, P1) == CurvePoint::affine(Rational(-48), Rational(-80)));
    CHECK(negate(curve, CurvePoint::infinity()).is_infinity());
    // a1 = a3 = 0 here, so negation just flips y
    const auto curve2 = to_weierstrass(build_quartic(family_ex2(), par_ex2())).curve;
    CHECK(negate(curve2, CurvePoint::affine(Rational(-1792, 243), Rational(3328, 2187))) ==
          CurvePoint::affine(Rational(-1792, 243), Rational(-3328, 2187)));
}

TEST_CASE("add reproduces the known multiples") {
    const auto curve = curve_ex1();
    const auto dbl = add(curve, P1, P1);
    CHECK(dbl == CurvePoint::affine(Rational(68), Rational(-660)));
    CHECK(add(curve, P1, negate(curve, P1)).is_infinity());
    CHECK(add(curve, P1, dbl) ==
          CurvePoint::affine(Rational(-27168, 841), Rational(490880, 24389)));
    CHECK_THROWS_AS(add(curve, P1, CurvePoint::affine(Rational(1), Rational(1))),
                    PointNotOnCurve);
}

TEST_CASE("multiply reproduces the known multiples") {
    const auto curve = curve_ex1();
    CHECK(multiply(curve, P1, 4L) ==
          CurvePoint::affine(Rational(1139524, 27225), Rational(1180380068, 4492125)));
    CHECK(multiply(curve, P1, 0L).is_infinity());
    CHECK(multiply(curve, P1, -3L) == negate(curve, multiply(curve, P1, 3L)));

    const auto curve3b = to_weierstrass(build_quartic(family_ex3(), par_ex3b())).curve;
    const auto gen3b = CurvePoint::affine(Rational(-77, 2), Rational(42));
    CHECK(multiply(curve3b, gen3b, 2L) ==
          CurvePoint::affine(Rational(2009, 18), Rational(-36260, 27)));
}

TEST_CASE("two-torsion points double to infinity") {
    const auto curve = curve_ex1();
    // x^3 + 53x^2 - 1024x - 54272 = (x+53)(x-32)(x+32)
    for (long r : {-53L, 32L, -32L}) {
        const auto T = CurvePoint::checked(curve, Rational(r), Rational(0));
        CHECK(add(curve, T, T).is_infinity());
    }
}

TEST_CASE("group axioms, sampled on the four worked curves") {
    struct Case {
        WeierstrassCurve curve;
        CurvePoint generator;
    };
    const std::vector<Case> cases = {
        {curve_ex1(), P1},
        {to_weierstrass(build_quartic(family_ex2(), par_ex2())).curve,
         CurvePoint::affine(Rational(-1792, 243), Rational(3328, 2187))},
        {to_weierstrass(build_quartic(family_ex3(), par_ex3a())).curve,
         CurvePoint::affine(Rational(752, 2401), Rational(240, 16807))},
        {to_weierstrass(build_quartic(family_ex3(), par_ex3b())).curve,
         CurvePoint::affine(Rational(-77, 2), Rational(42))},
    };
    for (const auto& c : cases) {
        REQUIRE(c.curve.contains(c.generator));
        REQUIRE(!c.curve.discriminant().is_zero());

        std::vector<CurvePoint> pts;
        for (long k = -5; k <= 5; ++k) pts.push_back(multiply(c.curve, c.generator, k));

        // closure and commutativity over the sample
        for (const auto& P : pts)
            for (const auto& Q : pts) {
                const auto S = add(c.curve, P, Q);
                CHECK(c.curve.contains(S));
                CHECK(S == add(c.curve, Q, P));
            }
        // associativity over the sample (spot pattern: (P+Q)+R = P+(Q+R))
        for (std::size_t i = 0; i < pts.size(); i += 2)
            for (std::size_t j = 0; j < pts.size(); j += 2)
                for (std::size_t k = 0; k < pts.size(); k += 2) {
                    const auto lhs = add(c.curve, add(c.curve, pts[i], pts[j]), pts[k]);
                    const auto rhs = add(c.curve, pts[i], add(c.curve, pts[j], pts[k]));
                    CHECK(lhs == rhs);
                }
        // negation is involutive
        for (const auto& P : pts) CHECK(negate(c.curve, negate(c.curve, P)) == P);
        // multiply is a homomorphism for |j|, |k| <= 6
        for (long j = -6; j <= 6; ++j)
            for (long k = -6; k <= 6; ++k) {
                const auto lhs = multiply(c.curve, c.generator, j + k);
                const auto rhs = add(c.curve, multiply(c.curve, c.generator, j),
                                     multiply(c.curve, c.generator, k));
                CHECK(lhs == rhs);
            }
    }
}
