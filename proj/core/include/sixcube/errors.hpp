#pragma once

#include <stdexcept>
#include <string>

namespace sixcube {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// sum b_i * B_i * C_i^2 == 0: the quartic coefficients are undefined
class ZeroDenominator : public Error {
public:
    using Error::Error;
};

// h == 0, or the constant term L vanishes (q must be nonzero)
class DegenerateH : public Error {
public:
    using Error::Error;
};

class SingularCurve : public Error {
public:
    using Error::Error;
};

class NotOnQuartic : public Error {
public:
    using Error::Error;
};

class PointNotOnCurve : public Error {
public:
    using Error::Error;
};

// y == 0: the inverse transformation has no quartic preimage here
class TwoTorsion : public Error {
public:
    using Error::Error;
};

// a point whose solution is degenerate (infinity, or 2-torsion under the
// inverse map); pipelines skip it rather than fail
class SkippablePoint : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& field, const std::string& what)
        : Error("field '" + field + "': " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

}  // namespace sixcube
