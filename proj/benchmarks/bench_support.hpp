#pragma once

#include "sixcube/transform.hpp"

namespace sixcube::bench {

inline EquationFamily family_ex1() {
    return {{Integer(1)}, {Integer(1)}, Sign::Plus};
}

inline Parameterization par_ex1() {
    return {{Rational(1)}, {Rational(1)}, {Rational(1)}, Rational(2)};
}

inline TransformContext ctx_ex1() {
    return to_weierstrass(build_quartic(family_ex1(), par_ex1()));
}

inline CurvePoint generator_ex1() {
    return CurvePoint::affine(Rational(-48), Rational(80));
}

}  // namespace sixcube::bench
