#pragma once

#include "abundancy/factorization.hpp"
#include "abundancy/natural.hpp"
#include "abundancy/rational.hpp"

namespace abundancy {

// (p^(e+1) - 1) / (p - 1), exactly
Natural sigma_prime_power(const PrimePower& pp);

// sum of all positive divisors, via factorization; rejects n = 0
Natural sigma(const Natural& n);

// sigma(n) / n in lowest terms; rejects n = 0
Rational abundancy_index(const Natural& n);

// product of sigma(p^e) / p^e over the parts; the empty product is 1/1
Rational index_of_factorization(const Factorization& f);

}  // namespace abundancy
