#pragma once

#include "sixcube/curve.hpp"
#include "sixcube/quartic.hpp"

namespace sixcube {

// Birational correspondence between v^2 = a*u^4 + b*u^3 + c*u^2 + d*u + q^2
// (q != 0) and the cubic with
//   a1 = d/q, a2 = c - d^2/(4q^2), a3 = 2qb, a4 = -4q^2*a, a6 = a2*a4.
struct TransformContext {
    QuarticModel model;
    WeierstrassCurve curve;
    Rational discriminant;
};

// throws SingularCurve when the derived cubic has discriminant zero
TransformContext to_weierstrass(const QuarticModel& model);

struct QuarticPoint {
    Rational u, v;

    friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

// Forward map. u != 0:
//   x = (2q(v+q) + du)/u^2,
//   y = (4q^2(v+q) + 2q(du + cu^2) - d^2 u^2/(2q))/u^3.
// (0, q) -> infinity; (0, -q) -> (-a2, a1*a2 - a3).
// throws NotOnQuartic when v^2 != quartic_eval(u)
CurvePoint quartic_to_cubic(const TransformContext& ctx, const Rational& u, const Rational& v);

// Inverse map:
//   u = (2q(x + c) - d^2/(2q))/y,  v = -q + u(ux - d)/(2q);
// infinity -> (0, q). throws TwoTorsion when y = 0 (no preimage via these
// formulas), PointNotOnCurve when P is not on the context's curve.
QuarticPoint cubic_to_quartic(const TransformContext& ctx, const CurvePoint& P);

}  // namespace sixcube
