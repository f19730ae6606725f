#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sixcube/group_law.hpp"
#include "sixcube/transform.hpp"

namespace sixcube {

// Inverse-maps P to the quartic and substitutes. The result always has
// residual zero. throws SkippablePoint for infinity and 2-torsion inputs.
RationalSolution point_to_solution(const EquationFamily& fam, const Parameterization& par,
                                   const TransformContext& ctx, const CurvePoint& P);

// Minimal positive integer t with t*x, t*X integral and t^2*y, t^2*Y integral:
// per prime p of any denominator, e_p(t) = max(e_p over sextic denominators,
// ceil(e_p/2) over cubic denominators).
IntegerSolution clear_denominators(const EquationFamily& fam, const RationalSolution& sol);

// Divides out the largest r with x/r, X/r, y/r^2, Y/r^2 all integral and
// updates the scale accordingly (which may make it non-integral). Identity
// when there is no common content.
IntegerSolution primitive_reduce(const IntegerSolution& sol);

// A solution is trivial iff its two sides cancel termwise: |x_i| = |X_i| for
// all i and y_i = Y_i (PLUS) or y_i = -Y_i (MINUS) for all i. This is exactly
// the u = 0 image of the substitution.
bool is_trivial(const EquationFamily& fam, const RationalSolution& sol);
bool is_trivial(const EquationFamily& fam, const IntegerSolution& sol);

// Renders the identity with every printed term nonnegative: sextic entries
// print as absolute values, and any monomial with negative value crosses the
// equals sign (cubes are odd, so this is exact). Terms are ordered
// sextics-then-cubics per side, with moved-in terms appended after native
// ones. Every coefficient is explicit: "1*1^6 + 1*12^3 = 1*3^6 + 1*10^3".
std::string display_identity(const EquationFamily& fam, const IntegerSolution& sol);

// Canonical key of the display-normalized identity: the two sides as sorted
// monomial multisets, side order normalized. Two solutions print the same
// identity (up to side order and native/moved term order) iff keys match.
std::string identity_key(const EquationFamily& fam, const IntegerSolution& sol);

// Canonical representative of a solution under the display-normalization
// symmetry: nonnegative sextic entries, per-index cubic pairs replaced by
// their lexicographically greater admissible variant, then the side-swapped
// candidate taken if lexicographically smaller overall.
IntegerSolution canonical_solution(const EquationFamily& fam, const IntegerSolution& sol);

struct GenerateOptions {
    long nmax = 4;
    bool combine = false;       // also emit k1*P_i + k2*P_j combinations
    bool keep_trivial = false;  // emit solutions that is_trivial would flag
    bool primitive = false;     // divide out common t^6 content before emission
};

struct Emission {
    std::vector<long> coeffs;  // multiple of each generator; one entry per generator
    CurvePoint point;
    IntegerSolution solution;
    std::string identity;

    bool is_multiple() const;  // single nonzero coefficient
    std::string coeffs_string() const;
};

using EmissionSink = std::function<void(const Emission&)>;

// Streams denominator-cleared, re-verified solutions from k*P (k = 1..nmax,
// per generator, in generator order) and, with combine, from k1*P_i + k2*P_j
// (i < j, k1 = 1..nmax, k2 = -nmax..-1,1..nmax). Skippable points are
// dropped; trivial solutions are dropped unless keep_trivial. After each
// primary emission, the (u,-v) companion is emitted only when it is
// nontrivial and displays a genuinely different identity. Deterministic.
void generate(const EquationFamily& fam, const Parameterization& par, const TransformContext& ctx,
              const std::vector<CurvePoint>& generators, const GenerateOptions& options,
              const EmissionSink& sink);

std::vector<Emission> generate_all(const EquationFamily& fam, const Parameterization& par,
                                   const TransformContext& ctx,
                                   const std::vector<CurvePoint>& generators,
                                   const GenerateOptions& options);

// Scans u = p/s with |p|, s <= height_bound, gcd(p,s) = 1, ascending
// (|p|+s, p, s), keeping u where quartic_eval(u) is a rational square; each
// hit maps forward through (u, -sqrt) to a curve point. Deduplicated.
std::vector<CurvePoint> point_search(const TransformContext& ctx, long height_bound);

}  // namespace sixcube
