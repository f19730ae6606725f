#pragma once

#include <string>
#include <vector>

#include "sixcube/curve.hpp"
#include "sixcube/equation.hpp"

namespace sixcube {

// A problem file: the equation family, the substitution parameters, and
// optional generator points / iteration depth for solve.
//
// JSON schema: "n", "m" integers; "a", "b" integer arrays; "sign"
// "plus"|"minus"; "B", "C", "D" rational arrays; "h" rational; optional
// "generators" (array of [x, y] rational pairs or "infinity") and "nmax"
// (default 4). Rationals are strings "p/q" or bare integers; no floating
// point anywhere.
struct Problem {
    EquationFamily family;
    Parameterization par;
    std::vector<CurvePoint> generators;
    long nmax = 4;
};

// throws ParseError naming the offending field
Problem parse_problem(const std::string& json_text);

std::string serialize_problem(const Problem& problem);

// "p/q" or "p"; field names the source for diagnostics
Rational parse_rational(const std::string& text, const std::string& field);

// "x1,..;y1,..;X1,..;Y1,.." -> rational tuple with the family's dimensions
RationalSolution parse_solution(const std::string& text, const EquationFamily& fam);

}  // namespace sixcube
