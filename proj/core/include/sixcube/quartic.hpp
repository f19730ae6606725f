#pragma once

#include <optional>
#include <vector>

#include "sixcube/equation.hpp"

namespace sixcube {

// v^2 = A4*u^4 + A3*u^3 + A2*u^2 + A1*u + q^2 with q > 0. Models built from a
// family are even in u (A3 = A1 = 0); the general slots exist because the
// curve transformation handles arbitrary quartics.
struct QuarticModel {
    Rational A4, A3, A2, A1;
    Rational q;  // positive square root of the constant term
    Sign sign = Sign::Plus;

    // provenance
    EquationFamily family;
    Parameterization par;

    Rational constant() const { return q * q; }
};

// Positive square root when numerator and denominator are both perfect
// squares; nullopt otherwise (negative input included). 0 -> 0.
std::optional<Rational> rational_sqrt(const Rational& r);

class NotASquare : public Error {
public:
    explicit NotASquare(const Rational& value)
        : Error("constant term L = " + value.to_string() + " is not a rational square"),
          value_(value) {}
    const Rational& value() const { return value_; }

private:
    Rational value_;
};

// Coefficients for PLUS:
//   A4 = 2h*sum(a_i D_i^5)/S,  A2 = (20h^3*sum(a_i D_i^3) - sum(b_i B_i^3))/(3S),
//   L  = 2h^5*sum(a_i D_i)/S,  with S = sum(b_i B_i C_i^2);
// MINUS negates A4 and L and flips A2 to -(20h^3*sum + sum)/(3S).
// Succeeds only when L is the square of a nonzero rational.
QuarticModel build_quartic(const EquationFamily& fam, const Parameterization& par);

Rational quartic_eval(const QuarticModel& model, const Rational& u);

struct HCandidate {
    Rational h;
    QuarticModel model;
};

// Enumerates h = p/s with 0 < |p|, s <= height_bound, gcd(p,s) = 1, in
// ascending (|p|+s, p, s) order, keeping every h whose constant is a nonzero
// rational square.
std::vector<HCandidate> search_h(const EquationFamily& fam, const std::vector<Rational>& B,
                                 const std::vector<Rational>& C, const std::vector<Rational>& D,
                                 long height_bound);

}  // namespace sixcube
