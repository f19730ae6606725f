#pragma once

#include "sixcube/curve.hpp"

namespace sixcube {

// Chord-tangent group law on a long-form Weierstrass curve, exact over Q.
// add/multiply require a nonsingular curve and throw PointNotOnCurve for
// inputs off the curve.

CurvePoint negate(const WeierstrassCurve& curve, const CurvePoint& P);

CurvePoint add(const WeierstrassCurve& curve, const CurvePoint& P, const CurvePoint& Q);

CurvePoint multiply(const WeierstrassCurve& curve, const CurvePoint& P, const Integer& k);
CurvePoint multiply(const WeierstrassCurve& curve, const CurvePoint& P, long k);

}  // namespace sixcube
