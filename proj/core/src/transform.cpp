#include "sixcube/transform.hpp"

namespace sixcube {

TransformContext to_weierstrass(const QuarticModel& model) {
    if (model.q.is_zero()) throw DegenerateH("transformation requires q != 0");
    const Rational& a = model.A4;
    const Rational& b = model.A3;
    const Rational& c = model.A2;
    const Rational& d = model.A1;
    const Rational& q = model.q;

    WeierstrassCurve curve;
    curve.a1 = d / q;
    curve.a2 = c - d * d / (Rational(4) * q * q);
    curve.a3 = Rational(2) * q * b;
    curve.a4 = Rational(-4) * q * q * a;
    curve.a6 = curve.a2 * curve.a4;

    TransformContext ctx{model, curve, curve.discriminant()};
    if (ctx.discriminant.is_zero())
        throw SingularCurve("derived cubic has discriminant 0");
    return ctx;
}

CurvePoint quartic_to_cubic(const TransformContext& ctx, const Rational& u, const Rational& v) {
    const QuarticModel& model = ctx.model;
    if (v * v != quartic_eval(model, u))
        throw NotOnQuartic("(" + u.to_string() + "," + v.to_string() +
                           ") does not satisfy the quartic");
    const Rational& c = model.A2;
    const Rational& d = model.A1;
    const Rational& q = model.q;
    if (u.is_zero()) {
        // v^2 = q^2 here, so v = +/- q
        if (v == q) return CurvePoint::infinity();
        return CurvePoint::affine(-ctx.curve.a2, ctx.curve.a1 * ctx.curve.a2 - ctx.curve.a3);
    }
    const Rational u2 = u * u;
    const Rational two_q = Rational(2) * q;
    const Rational x = (two_q * (v + q) + d * u) / u2;
    const Rational y =
        (Rational(4) * q * q * (v + q) + two_q * (d * u + c * u2) - d * d * u2 / two_q) / (u2 * u);
    return CurvePoint::affine(x, y);
}

QuarticPoint cubic_to_quartic(const TransformContext& ctx, const CurvePoint& P) {
    const QuarticModel& model = ctx.model;
    const Rational& q = model.q;
    if (P.is_infinity()) return {Rational(0), q};
    if (!ctx.curve.contains(P))
        throw PointNotOnCurve("point " + P.to_string() + " is not on the derived curve");
    if (P.y().is_zero())
        throw TwoTorsion("2-torsion point " + P.to_string() + " has no quartic preimage");
    const Rational& c = model.A2;
    const Rational& d = model.A1;
    const Rational two_q = Rational(2) * q;
    const Rational u = (two_q * (P.x() + c) - d * d / two_q) / P.y();
    const Rational v = -q + u * (u * P.x() - d) / two_q;
    return {u, v};
}

}  // namespace sixcube
