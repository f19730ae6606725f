#include "sixcube/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sixcube/pipeline.hpp"

namespace sixcube {
namespace {

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::vector<Integer> flatten(const IntegerSolution& s) {
    std::vector<Integer> v;
    for (const auto* vec : {&s.x, &s.y, &s.X, &s.Y}) v.insert(v.end(), vec->begin(), vec->end());
    return v;
}

class Collector {
public:
    explicit Collector(const EquationFamily& fam) : fam_(fam) {}

    void consider(IntegerSolution sol) {
        if (is_trivial(fam_, sol)) return;
        const std::string key = identity_key(fam_, sol);
        if (!seen_.insert(key).second) return;
        results_.push_back(canonical_solution(fam_, sol));
    }

    std::vector<IntegerSolution> take() {
        std::sort(results_.begin(), results_.end(),
                  [](const IntegerSolution& a, const IntegerSolution& b) {
                      return flatten(a) < flatten(b);
                  });
        return std::move(results_);
    }

private:
    const EquationFamily& fam_;
    std::set<std::string> seen_;
    std::vector<IntegerSolution> results_;
};

// meet in the middle for n = m = 1: hash left-side values, probe with
// right-side values
void scan_1x1(const EquationFamily& fam, long sb, long cb, Collector& out) {
    const Integer& a = fam.a[0];
    const Integer& b = fam.b[0];
    std::map<Integer, std::vector<std::pair<long, long>>> left;
    for (long x = 1; x <= sb; ++x) {
        const Integer x6 = a * int_pow(Integer(x), 6);
        for (long y = -cb; y <= cb; ++y) {
            if (y == 0) continue;
            left[x6 + b * int_pow(Integer(y), 3)].emplace_back(x, y);
        }
    }
    for (long X = 1; X <= sb; ++X) {
        const Integer X6 = a * int_pow(Integer(X), 6);
        for (long Y = -cb; Y <= cb; ++Y) {
            if (Y == 0) continue;
            const Integer cube = b * int_pow(Integer(Y), 3);
            const Integer target = fam.sign == Sign::Plus ? Integer(X6 + cube) : Integer(X6 - cube);
            const auto it = left.find(target);
            if (it == left.end()) continue;
            for (const auto& [x, y] : it->second)
                out.consider(IntegerSolution{
                    {Integer(x)}, {Integer(y)}, {Integer(X)}, {Integer(Y)}, Rational(1)});
        }
    }
}

// plain nested scan for general shapes; feasibility is the caller's problem
void scan_general(const EquationFamily& fam, long sb, long cb, Collector& out) {
    const std::size_t n = fam.n(), m = fam.m();
    std::vector<Integer> x(n, 1), y(m, 1), X(n, 1), Y(m, 1);

    // odometer over the concatenated variable list
    struct Var {
        Integer* slot;
        long lo, hi;
        bool skip_zero;
    };
    std::vector<Var> vars;
    for (auto& e : x) vars.push_back({&e, 1, sb, false});
    for (auto& e : y) vars.push_back({&e, -cb, cb, true});
    for (auto& e : X) vars.push_back({&e, 1, sb, false});
    for (auto& e : Y) vars.push_back({&e, -cb, cb, true});

    std::vector<long> state(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        state[i] = vars[i].lo;
        if (vars[i].skip_zero && state[i] == 0) state[i] = 1;
        *vars[i].slot = state[i];
    }
    while (true) {
        IntegerSolution sol{x, y, X, Y, Rational(1)};
        if (residual(fam, sol).is_zero()) out.consider(std::move(sol));
        std::size_t i = vars.size();
        while (i-- > 0) {
            ++state[i];
            if (vars[i].skip_zero && state[i] == 0) ++state[i];
            if (state[i] <= vars[i].hi) {
                *vars[i].slot = state[i];
                break;
            }
            state[i] = vars[i].lo;
            if (vars[i].skip_zero && state[i] == 0) ++state[i];
            *vars[i].slot = state[i];
            if (i == 0) return;
        }
    }
}

}  // namespace

std::vector<IntegerSolution> brute_force(const EquationFamily& fam, long sextic_bound,
                                         long cubic_bound) {
    fam.validate();
    if (sextic_bound < 1 || cubic_bound < 1) throw Error("oracle bounds must be positive");
    Collector out(fam);
    if (fam.n() == 1 && fam.m() == 1)
        scan_1x1(fam, sextic_bound, cubic_bound, out);
    else
        scan_general(fam, sextic_bound, cubic_bound, out);
    return out.take();
}

}  // namespace sixcube
