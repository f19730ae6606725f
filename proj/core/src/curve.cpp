#include "sixcube/curve.hpp"

#include "sixcube/errors.hpp"

namespace sixcube {

Rational WeierstrassCurve::discriminant() const {
    const Rational b2 = a1 * a1 + Rational(4) * a2;
    const Rational b4 = Rational(2) * a4 + a1 * a3;
    const Rational b6 = a3 * a3 + Rational(4) * a6;
    const Rational b8 = (b2 * b6 - b4 * b4) / Rational(4);
    return -(b2 * b2 * b8) - Rational(8) * b4.pow(3) - Rational(27) * b6 * b6 +
           Rational(9) * b2 * b4 * b6;
}

bool WeierstrassCurve::contains(const CurvePoint& P) const {
    if (P.is_infinity()) return true;
    const Rational& x = P.x();
    const Rational& y = P.y();
    const Rational lhs = y * y + a1 * x * y + a3 * y;
    const Rational rhs = ((x + a2) * x + a4) * x + a6;
    return lhs == rhs;
}

CurvePoint CurvePoint::checked(const WeierstrassCurve& curve, Rational x, Rational y) {
    CurvePoint P = affine(std::move(x), std::move(y));
    if (!curve.contains(P))
        throw PointNotOnCurve("point " + P.to_string() + " does not satisfy the curve equation");
    return P;
}

std::string CurvePoint::to_string() const {
    if (infinite_) return "infinity";
    return "(" + x_.to_string() + "," + y_.to_string() + ")";
}

}  // namespace sixcube
