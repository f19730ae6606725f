#include "sixcube/rational.hpp"

namespace sixcube {

Rational Rational::pow(long k) const {
    if (k == 0) return Rational(1);
    const Rational base = k < 0 ? inverse() : *this;
    const unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    // base is canonical, so num/den already is
    Rational r;
    r.v_ = mpq_class(num, den);
    return r;
}

bool is_perfect_square(const Integer& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer integer_sqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer height(const Rational& r) {
    Integer num = abs(r.numerator());
    Integer den = r.denominator();
    return num > den ? num : den;
}

}  // namespace sixcube
