#pragma once

#include <ostream>

#include "sixcube/rational.hpp"

namespace sixcube {

class CurvePoint;

// y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 over Q.
struct WeierstrassCurve {
    Rational a1, a2, a3, a4, a6;

    // standard b-invariant discriminant; nonzero iff the curve is nonsingular
    Rational discriminant() const;

    bool contains(const CurvePoint& P) const;

    friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

class CurvePoint {
public:
    CurvePoint() = default;  // infinity

    static CurvePoint infinity() { return CurvePoint(); }

    // unchecked affine point; use checked() when the source is untrusted
    static CurvePoint affine(Rational x, Rational y) {
        CurvePoint P;
        P.infinite_ = false;
        P.x_ = std::move(x);
        P.y_ = std::move(y);
        return P;
    }

    // throws PointNotOnCurve unless (x, y) satisfies the curve equation exactly
    static CurvePoint checked(const WeierstrassCurve& curve, Rational x, Rational y);

    bool is_infinity() const { return infinite_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

    friend bool operator==(const CurvePoint& P, const CurvePoint& Q) {
        if (P.infinite_ || Q.infinite_) return P.infinite_ == Q.infinite_;
        return P.x_ == Q.x_ && P.y_ == Q.y_;
    }
    friend bool operator!=(const CurvePoint& P, const CurvePoint& Q) { return !(P == Q); }

    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const CurvePoint& P) {
        return os << P.to_string();
    }

private:
    bool infinite_ = true;
    Rational x_, y_;
};

}  // namespace sixcube
