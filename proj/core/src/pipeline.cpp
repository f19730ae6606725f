#include "sixcube/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "sixcube/factorize.hpp"

namespace sixcube {

RationalSolution point_to_solution(const EquationFamily& fam, const Parameterization& par,
                                   const TransformContext& ctx, const CurvePoint& P) {
    if (P.is_infinity())
        throw SkippablePoint("infinity maps to (0, q), the trivial u = 0 image");
    QuarticPoint uv;
    try {
        uv = cubic_to_quartic(ctx, P);
    } catch (const TwoTorsion& e) {
        throw SkippablePoint(e.what());
    }
    return substitute(fam, par, uv.u, uv.v);
}

IntegerSolution clear_denominators(const EquationFamily& fam, const RationalSolution& sol) {
    if (sol.x.size() != fam.n() || sol.X.size() != fam.n() || sol.y.size() != fam.m() ||
        sol.Y.size() != fam.m())
        throw DimensionMismatch("solution does not match the family's dimensions");

    std::map<Integer, unsigned long> exps;
    for (const auto* vec : {&sol.x, &sol.X})
        for (const auto& e : *vec)
            for (const auto& [p, k] : factorize(e.denominator()))
                exps[p] = std::max(exps[p], k);
    for (const auto* vec : {&sol.y, &sol.Y})
        for (const auto& e : *vec)
            for (const auto& [p, k] : factorize(e.denominator()))
                exps[p] = std::max(exps[p], (k + 1) / 2);

    Integer t(1);
    for (const auto& [p, k] : exps) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
        t *= pk;
    }

    const Rational rt(t), rt2(Integer(t * t));
    IntegerSolution out;
    out.scale = rt;
    auto push = [](std::vector<Integer>& dst, const Rational& value) {
        // by construction the scaled entry is integral
        if (!value.is_integer()) throw Error("internal: denominator clearing left a fraction");
        dst.push_back(value.numerator());
    };
    for (const auto& e : sol.x) push(out.x, e * rt);
    for (const auto& e : sol.y) push(out.y, e * rt2);
    for (const auto& e : sol.X) push(out.X, e * rt);
    for (const auto& e : sol.Y) push(out.Y, e * rt2);
    return out;
}

IntegerSolution primitive_reduce(const IntegerSolution& sol) {
    Integer g(0);
    for (const auto* vec : {&sol.x, &sol.X})
        for (const auto& e : *vec) g = gcd(g, e);
    if (g == 0 || g == 1) return sol;

    Integer r(1);
    for (const auto& [p, e] : factorize(g)) {
        unsigned long k = e;
        for (const auto* vec : {&sol.y, &sol.Y})
            for (const auto& c : *vec)
                if (sgn(c) != 0) k = std::min(k, valuation(c, p) / 2);
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
        r *= pk;
    }
    if (r == 1) return sol;

    const Integer r2 = r * r;
    IntegerSolution out;
    out.scale = sol.scale / Rational(r);
    for (const auto& e : sol.x) out.x.push_back(e / r);
    for (const auto& e : sol.y) out.y.push_back(e / r2);
    for (const auto& e : sol.X) out.X.push_back(e / r);
    for (const auto& e : sol.Y) out.Y.push_back(e / r2);
    return out;
}

bool is_trivial(const EquationFamily& fam, const RationalSolution& sol) {
    for (std::size_t i = 0; i < fam.n(); ++i)
        if (abs(sol.x[i]) != abs(sol.X[i])) return false;
    for (std::size_t i = 0; i < fam.m(); ++i) {
        if (fam.sign == Sign::Plus) {
            if (sol.y[i] != sol.Y[i]) return false;
        } else {
            if (sol.y[i] != -sol.Y[i]) return false;
        }
    }
    return true;
}

bool is_trivial(const EquationFamily& fam, const IntegerSolution& sol) {
    return is_trivial(fam, to_rational(sol));
}

namespace {

// one printed term, coefficient and base nonnegative after normalization
struct Monomial {
    int power;
    Integer coeff;
    Integer base;

    bool operator<(const Monomial& o) const {
        return std::tie(power, coeff, base) < std::tie(o.power, o.coeff, o.base);
    }
    bool operator==(const Monomial& o) const {
        return power == o.power && coeff == o.coeff && base == o.base;
    }
};

struct NormalizedIdentity {
    std::vector<Monomial> left_native, left_moved;
    std::vector<Monomial> right_native, right_moved;
};

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Every monomial with negative value crosses the equals sign; cubes are odd
// so the crossed term's base is the absolute value. Sextic signs never
// matter. Zero-valued terms stay on their native side.
NormalizedIdentity normalize_identity(const EquationFamily& fam, const IntegerSolution& sol) {
    NormalizedIdentity out;
    auto place = [](std::vector<Monomial>& native, std::vector<Monomial>& moved,
                    const Integer& value, Monomial mono) {
        (sgn(value) >= 0 ? native : moved).push_back(std::move(mono));
    };
    for (std::size_t i = 0; i < fam.n(); ++i) {
        place(out.left_native, out.right_moved, fam.a[i] * int_pow(sol.x[i], 6),
              {6, abs(fam.a[i]), abs(sol.x[i])});
        place(out.right_native, out.left_moved, fam.a[i] * int_pow(sol.X[i], 6),
              {6, abs(fam.a[i]), abs(sol.X[i])});
    }
    for (std::size_t i = 0; i < fam.m(); ++i) {
        place(out.left_native, out.right_moved, fam.b[i] * int_pow(sol.y[i], 3),
              {3, abs(fam.b[i]), abs(sol.y[i])});
        Integer rhs_value = fam.b[i] * int_pow(sol.Y[i], 3);
        if (fam.sign == Sign::Minus) rhs_value = -rhs_value;
        place(out.right_native, out.left_moved, rhs_value, {3, abs(fam.b[i]), abs(sol.Y[i])});
    }
    return out;
}

std::string render_side(const std::vector<Monomial>& native, const std::vector<Monomial>& moved) {
    std::ostringstream os;
    bool first = true;
    for (const auto* terms : {&native, &moved})
        for (const auto& t : *terms) {
            if (!first) os << " + ";
            os << t.coeff << "*" << t.base << "^" << t.power;
            first = false;
        }
    if (first) os << "0";
    return os.str();
}

std::string side_key(std::vector<Monomial> side) {
    std::sort(side.begin(), side.end());
    std::ostringstream os;
    for (const auto& t : side) os << t.power << ":" << t.coeff << ":" << t.base << "+";
    return os.str();
}

}  // namespace

std::string display_identity(const EquationFamily& fam, const IntegerSolution& sol) {
    const NormalizedIdentity n = normalize_identity(fam, sol);
    return render_side(n.left_native, n.left_moved) + " = " +
           render_side(n.right_native, n.right_moved);
}

std::string identity_key(const EquationFamily& fam, const IntegerSolution& sol) {
    NormalizedIdentity n = normalize_identity(fam, sol);
    auto join = [](std::vector<Monomial> a, const std::vector<Monomial>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    std::string l = side_key(join(std::move(n.left_native), n.left_moved));
    std::string r = side_key(join(std::move(n.right_native), n.right_moved));
    if (r < l) std::swap(l, r);
    return l + "=" + r;
}

namespace {

std::vector<Integer> flatten(const IntegerSolution& s) {
    std::vector<Integer> v;
    v.reserve(s.x.size() * 2 + s.y.size() * 2);
    for (const auto* vec : {&s.x, &s.y, &s.X, &s.Y})
        v.insert(v.end(), vec->begin(), vec->end());
    return v;
}

// nonnegative sextics, then each cubic pair replaced by its lexicographically
// greater residual-preserving variant
IntegerSolution half_canonical(const EquationFamily& fam, IntegerSolution s) {
    for (auto& e : s.x) e = abs(e);
    for (auto& e : s.X) e = abs(e);
    for (std::size_t i = 0; i < fam.m(); ++i) {
        Integer alt_y = fam.sign == Sign::Plus ? Integer(-s.Y[i]) : s.Y[i];
        Integer alt_Y = fam.sign == Sign::Plus ? Integer(-s.y[i]) : s.y[i];
        if (std::tie(alt_y, alt_Y) > std::tie(s.y[i], s.Y[i])) {
            s.y[i] = alt_y;
            s.Y[i] = alt_Y;
        }
    }
    return s;
}

IntegerSolution side_swapped(const EquationFamily& fam, const IntegerSolution& s) {
    IntegerSolution out;
    out.scale = s.scale;
    out.x = s.X;
    out.X = s.x;
    if (fam.sign == Sign::Plus) {
        out.y = s.Y;
        out.Y = s.y;
    } else {
        for (const auto& e : s.Y) out.y.push_back(-e);
        for (const auto& e : s.y) out.Y.push_back(-e);
    }
    return out;
}

}  // namespace

IntegerSolution canonical_solution(const EquationFamily& fam, const IntegerSolution& sol) {
    IntegerSolution a = half_canonical(fam, sol);
    IntegerSolution b = half_canonical(fam, side_swapped(fam, sol));
    return flatten(a) <= flatten(b) ? a : b;
}

bool Emission::is_multiple() const {
    int nonzero = 0;
    for (long c : coeffs) nonzero += c != 0;
    return nonzero == 1;
}

std::string Emission::coeffs_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ",";
        os << coeffs[i];
    }
    return os.str();
}

void generate(const EquationFamily& fam, const Parameterization& par, const TransformContext& ctx,
              const std::vector<CurvePoint>& generators, const GenerateOptions& options,
              const EmissionSink& sink) {
    fam.validate();
    par.validate(fam);
    if (options.nmax < 1) throw Error("nmax must be positive");
    for (const auto& g : generators)
        if (!ctx.curve.contains(g))
            throw PointNotOnCurve("generator " + g.to_string() + " is not on the derived curve");

    auto finish = [&](const RationalSolution& rs) {
        IntegerSolution isol = clear_denominators(fam, rs);
        if (options.primitive) isol = primitive_reduce(isol);
        // every emitted solution is re-verified exactly
        if (!residual(fam, isol).is_zero())
            throw Error("internal: emitted solution failed residual re-verification");
        return isol;
    };

    auto emit_from_point = [&](const CurvePoint& P, const std::vector<long>& coeffs) {
        if (P.is_infinity()) return;
        QuarticPoint uv;
        try {
            uv = cubic_to_quartic(ctx, P);
        } catch (const TwoTorsion&) {
            return;
        }
        RationalSolution rs = substitute(fam, par, uv.u, uv.v);
        // triviality is independent of the sign of v, so it gates the
        // companion as well
        if (!options.keep_trivial && is_trivial(fam, rs)) return;
        IntegerSolution isol = finish(rs);
        const std::string key = identity_key(fam, isol);
        std::string identity = display_identity(fam, isol);
        sink(Emission{coeffs, P, std::move(isol), std::move(identity)});

        if (uv.v.is_zero()) return;
        IntegerSolution companion = finish(substitute(fam, par, uv.u, -uv.v));
        if (identity_key(fam, companion) == key) return;
        std::string companion_identity = display_identity(fam, companion);
        sink(Emission{coeffs, quartic_to_cubic(ctx, uv.u, -uv.v), std::move(companion),
                      std::move(companion_identity)});
    };

    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        CurvePoint Q = CurvePoint::infinity();
        for (long k = 1; k <= options.nmax; ++k) {
            Q = add(ctx.curve, Q, generators[gi]);
            std::vector<long> coeffs(generators.size(), 0);
            coeffs[gi] = k;
            emit_from_point(Q, coeffs);
        }
    }

    if (!options.combine || generators.size() < 2) return;
    // k1 > 0 suffices: negating both coefficients negates the point, whose
    // identity is the side-swap of the original
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            for (long k1 = 1; k1 <= options.nmax; ++k1) {
                const CurvePoint base = multiply(ctx.curve, generators[i], k1);
                for (long k2 = -options.nmax; k2 <= options.nmax; ++k2) {
                    if (k2 == 0) continue;
                    const CurvePoint P =
                        add(ctx.curve, base, multiply(ctx.curve, generators[j], k2));
                    std::vector<long> coeffs(generators.size(), 0);
                    coeffs[i] = k1;
                    coeffs[j] = k2;
                    emit_from_point(P, coeffs);
                }
            }
}

std::vector<Emission> generate_all(const EquationFamily& fam, const Parameterization& par,
                                   const TransformContext& ctx,
                                   const std::vector<CurvePoint>& generators,
                                   const GenerateOptions& options) {
    std::vector<Emission> out;
    generate(fam, par, ctx, generators, options, [&](const Emission& e) { out.push_back(e); });
    return out;
}

std::vector<CurvePoint> point_search(const TransformContext& ctx, long height_bound) {
    if (height_bound < 1) throw Error("height bound must be positive");
    std::vector<std::tuple<long, long, long>> grid;  // (|p|+s, p, s)
    for (long s = 1; s <= height_bound; ++s)
        for (long p = -height_bound; p <= height_bound; ++p) {
            // u = 0 always hits the square q^2 but only ever reaches the
            // exceptional point, so the scan starts at |p| = 1
            if (p == 0) continue;
            if (std::gcd(p < 0 ? -p : p, s) != 1) continue;
            grid.emplace_back((p < 0 ? -p : p) + s, p, s);
        }
    std::sort(grid.begin(), grid.end());

    std::vector<CurvePoint> found;
    for (const auto& [key, p, s] : grid) {
        (void)key;
        const Rational u(p, s);
        const auto root = rational_sqrt(quartic_eval(ctx.model, u));
        if (!root) continue;
        const CurvePoint P = quartic_to_cubic(ctx, u, -*root);
        if (std::find(found.begin(), found.end(), P) == found.end()) found.push_back(P);
    }
    return found;
}

}  // namespace sixcube
