#include "abundancy/factorization.hpp"

#include "abundancy/primes.hpp"

#include <stdexcept>
#include <utility>

namespace abundancy {

Factorization::Factorization(std::vector<PrimePower> parts)
    : parts_(std::move(parts)) {
  const Natural* previous = nullptr;
  for (const PrimePower& pp : parts_) {
    if (pp.exponent == 0) {
      throw std::invalid_argument("zero exponent in factorization");
    }
    if (!is_prime(pp.prime)) {
      throw std::invalid_argument("composite base in factorization: " +
                                  pp.prime.str());
    }
    if (previous != nullptr && !(*previous < pp.prime)) {
      throw std::invalid_argument("factorization primes not ascending");
    }
    previous = &pp.prime;
  }
}

Natural Factorization::value() const {
  Natural result = 1;
  for (const PrimePower& pp : parts_) {
    result *= pow_natural(pp.prime, pp.exponent);
  }
  return result;
}

bool Factorization::contains(const Natural& prime) const {
  for (const PrimePower& pp : parts_) {
    if (pp.prime == prime) {
      return true;
    }
  }
  return false;
}

Factorization factorize(const Natural& n) {
  if (n == 0) {
    throw std::invalid_argument("cannot factor zero");
  }
  std::vector<PrimePower> parts;
  Natural rest = n;
  auto strip = [&](const Natural& p) {
    if (rest % p != 0) {
      return;
    }
    std::uint64_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    parts.push_back({p, e});
  };
  strip(2);
  strip(3);
  if (rest > 1 && !is_prime(rest)) {
    Natural p = 5;
    while (p * p <= rest) {
      Natural before = rest;
      strip(p);
      strip(p + 2);
      p += 6;
      if (before != rest && rest > 1 && is_prime(rest)) {
        break;
      }
    }
  }
  if (rest > 1) {
    parts.push_back({rest, 1});
  }
  return Factorization(Factorization::Trusted{}, std::move(parts));
}

}  // namespace abundancy
