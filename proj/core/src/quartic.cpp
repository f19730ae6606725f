#include "sixcube/quartic.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace sixcube {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    if (r.is_zero()) return Rational(0);
    const Integer num = r.numerator();
    const Integer den = r.denominator();
    if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
    return Rational(integer_sqrt(num), integer_sqrt(den));
}

QuarticModel build_quartic(const EquationFamily& fam, const Parameterization& par) {
    fam.validate();
    if (par.B.size() != fam.m() || par.C.size() != fam.m() || par.D.size() != fam.n())
        throw DimensionMismatch("parameterization does not match the family");
    if (par.h.is_zero()) throw DegenerateH("h = 0 collapses the quartic constant term");
    const Rational S = cubic_form_sum(fam, par);
    if (S.is_zero()) throw ZeroDenominator("sum b_i*B_i*C_i^2 = 0");

    Rational sumD5, sumD3, sumD1, sumB3;
    for (std::size_t i = 0; i < fam.n(); ++i) {
        const Rational ai(fam.a[i]);
        sumD5 += ai * par.D[i].pow(5);
        sumD3 += ai * par.D[i].pow(3);
        sumD1 += ai * par.D[i];
    }
    for (std::size_t i = 0; i < fam.m(); ++i) sumB3 += Rational(fam.b[i]) * par.B[i].pow(3);

    const Rational two(2), twenty(20), three(3);
    QuarticModel model;
    Rational L;
    if (fam.sign == Sign::Plus) {
        model.A4 = two * par.h * sumD5 / S;
        model.A2 = (twenty * par.h.pow(3) * sumD3 - sumB3) / (three * S);
        L = two * par.h.pow(5) * sumD1 / S;
    } else {
        model.A4 = -(two * par.h * sumD5 / S);
        model.A2 = -((twenty * par.h.pow(3) * sumD3 + sumB3) / (three * S));
        L = -(two * par.h.pow(5) * sumD1 / S);
    }
    // L = 0 is formally 0^2 but the curve transformation divides by q
    if (L.is_zero()) throw DegenerateH("constant term L = 0 (sum a_i*D_i may vanish)");
    const auto q = rational_sqrt(L);
    if (!q) throw NotASquare(L);
    model.q = *q;
    model.sign = fam.sign;
    model.family = fam;
    model.par = par;
    return model;
}

Rational quartic_eval(const QuarticModel& model, const Rational& u) {
    // Horner on A4 u^4 + A3 u^3 + A2 u^2 + A1 u + q^2
    return (((model.A4 * u + model.A3) * u + model.A2) * u + model.A1) * u + model.q * model.q;
}

std::vector<HCandidate> search_h(const EquationFamily& fam, const std::vector<Rational>& B,
                                 const std::vector<Rational>& C, const std::vector<Rational>& D,
                                 long height_bound) {
    fam.validate();
    if (height_bound < 1) throw Error("height bound must be positive");
    {
        Rational S;
        for (std::size_t i = 0; i < fam.m(); ++i)
            S += Rational(fam.b[i]) * B[i] * C[i] * C[i];
        if (S.is_zero()) throw ZeroDenominator("sum b_i*B_i*C_i^2 = 0");
    }

    std::vector<std::tuple<long, long, long>> grid;  // (|p|+s, p, s)
    for (long s = 1; s <= height_bound; ++s)
        for (long p = -height_bound; p <= height_bound; ++p) {
            if (p == 0) continue;
            if (std::gcd(p < 0 ? -p : p, s) != 1) continue;
            grid.emplace_back((p < 0 ? -p : p) + s, p, s);
        }
    std::sort(grid.begin(), grid.end());

    std::vector<HCandidate> found;
    for (const auto& [key, p, s] : grid) {
        (void)key;
        Parameterization par{B, C, D, Rational(p, s)};
        try {
            QuarticModel model = build_quartic(fam, par);
            found.push_back({par.h, std::move(model)});
        } catch (const NotASquare&) {
        } catch (const DegenerateH&) {
        }
    }
    return found;
}

}  // namespace sixcube
