#include "sixcube/factorize.hpp"

namespace sixcube {
namespace {

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Pollard-Brent rho; n must be composite, odd, > 1
Integer rho_factor(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer x(2), y(2), d(1);
        Integer saved_x, saved_y;
        while (d == 1) {
            // batch 128 iterations per gcd
            Integer prod(1);
            saved_x = x;
            saved_y = y;
            for (int i = 0; i < 128 && d == 1; ++i) {
                x = (x * x + c) % n;
                y = (y * y + c) % n;
                y = (y * y + c) % n;
                Integer diff = x - y;
                if (sgn(diff) == 0) { d = n; break; }
                prod = (prod * abs(diff)) % n;
            }
            if (d == 1) d = gcd(prod, n);
        }
        if (d == n) {
            // cycle collapsed inside a batch: replay one step at a time
            Integer xs = saved_x, ys = saved_y;
            d = 1;
            while (d == 1) {
                xs = (xs * xs + c) % n;
                ys = (ys * ys + c) % n;
                ys = (ys * ys + c) % n;
                d = gcd(abs(xs - ys), n);
            }
        }
        if (d != n) return d;
        // bad constant, retry with the next c
    }
}

void factor_into(Integer n, std::map<Integer, unsigned long>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    const Integer d = rho_factor(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<Integer, unsigned long> factorize(const Integer& n) {
    if (sgn(n) <= 0) throw Error("factorize expects n >= 1");
    std::map<Integer, unsigned long> out;
    Integer rest = n;
    for (long d : {2L, 3L, 5L}) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            ++out[Integer(d)];
            rest /= d;
        }
    }
    // wheel over 6k +/- 1 up to 10^6, then rho for what remains
    for (long d = 7; d <= 1000000 && rest > 1; d += 6) {
        for (long cand : {d, d + 4}) {
            while (mpz_divisible_ui_p(rest.get_mpz_t(), cand)) {
                ++out[Integer(cand)];
                rest /= cand;
            }
        }
        if (Integer(d) * d > rest) break;
    }
    if (rest > 1) {
        if (Integer(1000000) * 1000000 > rest) {
            // below the trial bound squared, the leftover is prime
            ++out[rest];
        } else {
            factor_into(rest, out);
        }
    }
    return out;
}

unsigned long valuation(const Integer& n, const Integer& p) {
    if (sgn(n) == 0) throw Error("valuation of zero");
    Integer reduced;
    return mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

}  // namespace sixcube
