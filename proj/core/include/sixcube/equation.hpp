#pragma once

#include <vector>

#include "sixcube/rational.hpp"

namespace sixcube {

// The +/- in front of the right-hand cubic block of
//   sum a_i x_i^6 + sum b_i y_i^3 = sum a_i X_i^6 +/- sum b_i Y_i^3
enum class Sign { Plus, Minus };

struct EquationFamily {
    std::vector<Integer> a;  // n sextic coefficients, all nonzero
    std::vector<Integer> b;  // m cubic coefficients, all nonzero
    Sign sign = Sign::Plus;

    std::size_t n() const { return a.size(); }
    std::size_t m() const { return b.size(); }

    // n >= 1, m >= 1, every coefficient nonzero
    void validate() const;
};

// Free parameters of the linear substitution behind a family's quartic.
struct Parameterization {
    std::vector<Rational> B;  // size m
    std::vector<Rational> C;  // size m
    std::vector<Rational> D;  // size n
    Rational h;

    // dimensions match fam, h != 0, sum b_i*B_i*C_i^2 != 0
    void validate(const EquationFamily& fam) const;
};

// sum b_i * B_i * C_i^2, the denominator of every quartic coefficient
Rational cubic_form_sum(const EquationFamily& fam, const Parameterization& par);

struct RationalSolution {
    std::vector<Rational> x, y, X, Y;
};

// Scaled-integral form of a RationalSolution: x = scale*x_rat, y = scale^2*y_rat
// entrywise (and likewise X, Y). scale is integral except after primitive
// reduction, which may divide out numerator content.
struct IntegerSolution {
    std::vector<Integer> x, y, X, Y;
    Rational scale = Rational(1);
};

// Linear substitution of the proof: PLUS gives x_i=-D_i*u+h, y_i=B_i*u+C_i*v,
// X_i=D_i*u+h, Y_i=-B_i*u+C_i*v; MINUS gives x_i=D_i*u+h, y_i=B_i*u-C_i*v,
// X_i=-D_i*u+h, Y_i=B_i*u+C_i*v. The result solves the family's equation
// exactly when (u,v) lies on the associated quartic.
RationalSolution substitute(const EquationFamily& fam, const Parameterization& par,
                            const Rational& u, const Rational& v);

// sum a_i x_i^6 + sum b_i y_i^3 - sum a_i X_i^6 -/+ sum b_i Y_i^3, exact;
// zero iff sol solves the equation
Rational residual(const EquationFamily& fam, const RationalSolution& sol);
Rational residual(const EquationFamily& fam, const IntegerSolution& sol);

// (t*x, t^2*y, t*X, t^2*Y); the residual scales by exactly t^6
RationalSolution scale_solution(const EquationFamily& fam, const RationalSolution& sol,
                                const Rational& t);

RationalSolution to_rational(const IntegerSolution& sol);

}  // namespace sixcube
