#include "sixcube/equation.hpp"

#include <string>

namespace sixcube {

void EquationFamily::validate() const {
    if (a.empty()) throw DimensionMismatch("family needs n >= 1 sextic coefficients");
    if (b.empty()) throw DimensionMismatch("family needs m >= 1 cubic coefficients");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) == 0)
            throw DimensionMismatch("a[" + std::to_string(i) + "] must be nonzero");
    for (std::size_t i = 0; i < b.size(); ++i)
        if (sgn(b[i]) == 0)
            throw DimensionMismatch("b[" + std::to_string(i) + "] must be nonzero");
}

void Parameterization::validate(const EquationFamily& fam) const {
    if (B.size() != fam.m() || C.size() != fam.m())
        throw DimensionMismatch("B and C must have m entries");
    if (D.size() != fam.n()) throw DimensionMismatch("D must have n entries");
    if (h.is_zero()) throw DegenerateH("h = 0 collapses the quartic constant term");
    if (cubic_form_sum(fam, *this).is_zero())
        throw ZeroDenominator("sum b_i*B_i*C_i^2 = 0");
}

Rational cubic_form_sum(const EquationFamily& fam, const Parameterization& par) {
    Rational s;
    for (std::size_t i = 0; i < fam.m(); ++i)
        s += Rational(fam.b[i]) * par.B[i] * par.C[i] * par.C[i];
    return s;
}

RationalSolution substitute(const EquationFamily& fam, const Parameterization& par,
                            const Rational& u, const Rational& v) {
    if (par.B.size() != fam.m() || par.C.size() != fam.m() || par.D.size() != fam.n())
        throw DimensionMismatch("parameterization does not match the family");
    RationalSolution sol;
    sol.x.reserve(fam.n());
    sol.X.reserve(fam.n());
    sol.y.reserve(fam.m());
    sol.Y.reserve(fam.m());
    if (fam.sign == Sign::Plus) {
        for (std::size_t i = 0; i < fam.n(); ++i) {
            sol.x.push_back(-(par.D[i] * u) + par.h);
            sol.X.push_back(par.D[i] * u + par.h);
        }
        for (std::size_t i = 0; i < fam.m(); ++i) {
            sol.y.push_back(par.B[i] * u + par.C[i] * v);
            sol.Y.push_back(-(par.B[i] * u) + par.C[i] * v);
        }
    } else {
        for (std::size_t i = 0; i < fam.n(); ++i) {
            sol.x.push_back(par.D[i] * u + par.h);
            sol.X.push_back(-(par.D[i] * u) + par.h);
        }
        for (std::size_t i = 0; i < fam.m(); ++i) {
            sol.y.push_back(par.B[i] * u - par.C[i] * v);
            sol.Y.push_back(par.B[i] * u + par.C[i] * v);
        }
    }
    return sol;
}

Rational residual(const EquationFamily& fam, const RationalSolution& sol) {
    if (sol.x.size() != fam.n() || sol.X.size() != fam.n() || sol.y.size() != fam.m() ||
        sol.Y.size() != fam.m())
        throw DimensionMismatch("solution does not match the family's dimensions");
    Rational r;
    for (std::size_t i = 0; i < fam.n(); ++i)
        r += Rational(fam.a[i]) * (sol.x[i].pow(6) - sol.X[i].pow(6));
    for (std::size_t i = 0; i < fam.m(); ++i) {
        const Rational cubes = fam.sign == Sign::Plus ? sol.y[i].pow(3) - sol.Y[i].pow(3)
                                                      : sol.y[i].pow(3) + sol.Y[i].pow(3);
        r += Rational(fam.b[i]) * cubes;
    }
    return r;
}

Rational residual(const EquationFamily& fam, const IntegerSolution& sol) {
    return residual(fam, to_rational(sol));
}

RationalSolution scale_solution(const EquationFamily& fam, const RationalSolution& sol,
                                const Rational& t) {
    if (t.is_zero()) throw DivisionByZero("scale factor t must be nonzero");
    if (sol.x.size() != fam.n() || sol.y.size() != fam.m())
        throw DimensionMismatch("solution does not match the family's dimensions");
    const Rational t2 = t * t;
    RationalSolution out;
    for (const auto& e : sol.x) out.x.push_back(e * t);
    for (const auto& e : sol.y) out.y.push_back(e * t2);
    for (const auto& e : sol.X) out.X.push_back(e * t);
    for (const auto& e : sol.Y) out.Y.push_back(e * t2);
    return out;
}

RationalSolution to_rational(const IntegerSolution& sol) {
    RationalSolution out;
    for (const auto& e : sol.x) out.x.push_back(Rational(e));
    for (const auto& e : sol.y) out.y.push_back(Rational(e));
    for (const auto& e : sol.X) out.X.push_back(Rational(e));
    for (const auto& e : sol.Y) out.Y.push_back(Rational(e));
    return out;
}

}  // namespace sixcube
