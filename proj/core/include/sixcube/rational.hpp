#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

#include "sixcube/errors.hpp"

namespace sixcube {

using Integer = mpz_class;

// Exact rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (sgn(den) == 0) throw DivisionByZero("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational abs(const Rational& a) {
        return Rational(mpq_class(::abs(a.v_)));
    }

    // a^k with k possibly negative; 0^0 = 1, 0^-k is an error
    Rational pow(long k) const;

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return Rational(denominator(), numerator());
    }

    // "p" when integral, "p/q" otherwise
    std::string to_string() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    explicit Rational(const mpq_class& v) : v_(v) {}

    mpq_class v_;  // invariant: canonical (gmp keeps arithmetic results canonical)
};

// Exact integer square root helpers.
bool is_perfect_square(const Integer& n);
Integer integer_sqrt(const Integer& n);  // floor sqrt, n >= 0

// max(|num|, den); bounds enumeration in searches
Integer height(const Rational& r);

}  // namespace sixcube
