#include "abundancy/sigma.hpp"

#include <stdexcept>

namespace abundancy {

Natural sigma_prime_power(const PrimePower& pp) {
  return (pow_natural(pp.prime, pp.exponent + 1) - 1) / (pp.prime - 1);
}

Natural sigma(const Natural& n) {
  if (n == 0) {
    throw std::invalid_argument("sigma is undefined at zero");
  }
  Natural result = 1;
  for (const PrimePower& pp : factorize(n)) {
    result *= sigma_prime_power(pp);
  }
  return result;
}

Rational abundancy_index(const Natural& n) {
  if (n == 0) {
    throw std::invalid_argument("abundancy index is undefined at zero");
  }
  return Rational(sigma(n), n);
}

Rational index_of_factorization(const Factorization& f) {
  Rational result(1);
  for (const PrimePower& pp : f) {
    result *= Rational(sigma_prime_power(pp), pow_natural(pp.prime, pp.exponent));
  }
  return result;
}

}  // namespace abundancy
