#pragma once

#include <map>

#include "sixcube/rational.hpp"

namespace sixcube {

// Prime factorization of n >= 1 (trial division, then Pollard-Brent rho with
// Miller-Rabin primality). Deterministic.
std::map<Integer, unsigned long> factorize(const Integer& n);

// p-adic valuation of n != 0
unsigned long valuation(const Integer& n, const Integer& p);

}  // namespace sixcube
