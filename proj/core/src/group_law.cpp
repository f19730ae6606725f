#include "sixcube/group_law.hpp"

#include "sixcube/errors.hpp"

namespace sixcube {

CurvePoint negate(const WeierstrassCurve& curve, const CurvePoint& P) {
    if (P.is_infinity()) return P;
    return CurvePoint::affine(P.x(), -P.y() - curve.a1 * P.x() - curve.a3);
}

CurvePoint add(const WeierstrassCurve& curve, const CurvePoint& P, const CurvePoint& Q) {
    if (!curve.contains(P))
        throw PointNotOnCurve("add: " + P.to_string() + " is not on the curve");
    if (!curve.contains(Q))
        throw PointNotOnCurve("add: " + Q.to_string() + " is not on the curve");
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;

    const Rational &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
    Rational lambda;
    if (x1 == x2) {
        // same x: either inverses (sum is infinity) or equal (tangent)
        if (y2 == -y1 - curve.a1 * x1 - curve.a3) return CurvePoint::infinity();
        lambda = (Rational(3) * x1 * x1 + Rational(2) * curve.a2 * x1 + curve.a4 -
                  curve.a1 * y1) /
                 (Rational(2) * y1 + curve.a1 * x1 + curve.a3);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    const Rational x3 = lambda * lambda + curve.a1 * lambda - curve.a2 - x1 - x2;
    const Rational y3 = lambda * (x1 - x3) - y1 - curve.a1 * x3 - curve.a3;
    return CurvePoint::affine(x3, y3);
}

CurvePoint multiply(const WeierstrassCurve& curve, const CurvePoint& P, const Integer& k) {
    if (!curve.contains(P))
        throw PointNotOnCurve("multiply: " + P.to_string() + " is not on the curve");
    if (sgn(k) == 0) return CurvePoint::infinity();
    const Integer e = abs(k);
    // double-and-add, most significant bit first
    CurvePoint R = CurvePoint::infinity();
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (auto i = bits; i-- > 0;) {
        R = add(curve, R, R);
        if (mpz_tstbit(e.get_mpz_t(), i)) R = add(curve, R, P);
    }
    return sgn(k) < 0 ? negate(curve, R) : R;
}

CurvePoint multiply(const WeierstrassCurve& curve, const CurvePoint& P, long k) {
    return multiply(curve, P, Integer(k));
}

}  // namespace sixcube
