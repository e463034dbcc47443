#include "abundancy/bounds.hpp"

#include "abundancy/primes.hpp"
#include "abundancy/sigma.hpp"

#include <algorithm>
#include <stdexcept>

namespace abundancy {

ExponentFilter ExponentFilter::any() {
  return ExponentFilter{1, {0}};
}

ExponentFilter ExponentFilter::even() {
  return ExponentFilter{2, {0}};
}

ExponentFilter ExponentFilter::one_mod4_or_even() {
  return ExponentFilter{4, {0, 1, 2}};
}

bool ExponentFilter::admits(std::uint64_t exponent) const {
  std::uint64_t r = exponent % modulus;
  return std::find(residues.begin(), residues.end(), r) != residues.end();
}

Rational index_sup(const std::vector<Natural>& primes) {
  Rational result(1);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) {
      throw std::invalid_argument("index_sup takes primes: " +
                                  primes[i].str());
    }
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      if (primes[i] == primes[j]) {
        throw std::invalid_argument("index_sup takes distinct primes");
      }
    }
    result *= Rational(primes[i], primes[i] - 1);
  }
  return result;
}

Rational index_floor(const Factorization& fixed) {
  return index_of_factorization(fixed);
}

IndexBounds index_bounds(const Factorization& fixed,
                         const std::vector<Natural>& support) {
  Rational lower = index_floor(fixed);
  return IndexBounds{lower, lower * index_sup(support)};
}

Natural min_prime_bound(const Rational& target, const Factorization& fixed) {
  Rational floor_value = index_floor(fixed);
  if (!(floor_value < target)) {
    throw std::domain_error("fixed part already reaches the target index");
  }
  // index_floor(fixed) * (q + 1) / q <= target solves to q >= F / (T - F)
  Rational threshold = floor_value / (target - floor_value);
  Natural start = threshold.ceil();
  if (start < 2) {
    start = 2;
  }
  for (const PrimePower& pp : fixed) {
    if (pp.prime >= start) {
      start = pp.prime + 1;
    }
  }
  if (is_prime(start)) {
    return start;
  }
  return next_prime(start);
}

std::vector<Natural> primes_in_interval(const Rational& lower,
                                        const Rational& upper) {
  std::vector<Natural> result;
  // floor(lower) + 1 is the least integer strictly above lower, whether or
  // not lower is itself an integer
  Natural p = lower.floor() + 1;
  if (p < 2) {
    p = 2;
  }
  while (Rational(p) < upper) {
    if (is_prime(p)) {
      result.push_back(p);
    }
    ++p;
  }
  return result;
}

PrimeWindow prime_window(const Rational& target, const Rational& rest_floor,
                         const Rational& rest_sup) {
  if (!(rest_floor < target)) {
    throw std::domain_error("rest of the number already reaches the target");
  }
  if (!(rest_sup < target)) {
    throw std::domain_error("no finite upper endpoint: rest can exceed the target alone");
  }
  // rest_floor * (q + 1) / q < target gives q > F / (T - F); the sup side
  // target < rest_sup * q / (q - 1) gives q < T / (T - S)
  Rational lower = rest_floor / (target - rest_floor);
  Rational upper = target / (target - rest_sup);
  return PrimeWindow{lower, upper, primes_in_interval(lower, upper)};
}

PrimeWindow two_prime_window(const Natural& q1) {
  if (q1 <= 28) {
    throw std::domain_error("window needs q1 >= 29");
  }
  if (!is_prime(q1)) {
    throw std::invalid_argument("q1 must be prime");
  }
  // (1 + 1/q1)(1 + 1/q2) <= 1134/1093 solves to
  // q2 >= 1093 (q1 + 1) / (41 q1 - 1093), and
  // (q1/(q1-1))(q2/(q2-1)) > 28/27 to q2 < 28 (q1 - 1) / (q1 - 28)
  Rational lower(1093 * (q1 + 1), 41 * q1 - 1093);
  Rational upper(28 * (q1 - 1), q1 - 28);
  std::vector<Natural> primes = primes_in_interval(lower, upper);
  std::erase_if(primes, [&](const Natural& p) { return p <= q1; });
  return PrimeWindow{lower, upper, std::move(primes)};
}

std::uint64_t min_exponent_bound(const Rational& /*target*/,
                                 const Factorization& fixed, const Natural& q,
                                 const std::vector<Natural>& forbidden_divisors,
                                 const ExponentFilter& filter,
                                 std::uint64_t cap) {
  if (!is_prime(q)) {
    throw std::invalid_argument("q must be prime");
  }
  if (fixed.contains(q)) {
    throw std::invalid_argument("q already occurs in the fixed part");
  }
  for (std::uint64_t e = 1; e <= cap; ++e) {
    if (!filter.admits(e)) {
      continue;
    }
    Natural s = sigma_prime_power({q, e});
    bool clean = true;
    for (const Natural& d : forbidden_divisors) {
      if (s % d == 0) {
        clean = false;
        break;
      }
    }
    if (clean) {
      return e;
    }
  }
  throw std::domain_error("no admissible exponent up to the cap");
}

}  // namespace abundancy
