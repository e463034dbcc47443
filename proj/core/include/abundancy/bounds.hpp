#pragma once

#include "abundancy/factorization.hpp"
#include "abundancy/natural.hpp"
#include "abundancy/rational.hpp"

#include <cstdint>
#include <vector>

namespace abundancy {

// open interval (lower, upper) together with the primes strictly inside
struct PrimeWindow {
  Rational lower;
  Rational upper;
  std::vector<Natural> primes;
};

// exact two-sided bounds on the index of anything that extends a fixed
// factorization with optional primes from a support set; lower is attained
// by the fixed part alone, upper is a strict supremum, and lower <= upper
struct IndexBounds {
  Rational lower;
  Rational upper;
};

// admissible exponents for an extra prime factor, as residues mod modulus;
// the default admits every exponent
struct ExponentFilter {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> residues{0};

  static ExponentFilter any();
  static ExponentFilter even();
  static ExponentFilter one_mod4_or_even();

  bool admits(std::uint64_t exponent) const;
};

// product of p / (p - 1) over the primes: the supremum of the index over
// numbers supported on exactly those primes, never attained
Rational index_sup(const std::vector<Natural>& primes);

// index of the fixed part itself, the infimum over its multiples
Rational index_floor(const Factorization& fixed);

// bounds for integers of the form fixed * m where m is supported on the
// given extra primes: lower = index of fixed, upper = lower * index_sup
IndexBounds index_bounds(const Factorization& fixed,
                         const std::vector<Natural>& support);

// least prime q, strictly greater than every prime of fixed, such that
// index_floor(fixed) * q / (q - 1) still reaches target; solves the
// threshold exactly, then steps to the next admissible prime
Natural min_prime_bound(const Rational& target, const Factorization& fixed);

// generalized window for one more prime q: the rest of the number
// contributes an index factor in (rest_floor, rest_sup), the whole index
// must equal target, and q itself contributes at least (q + 1) / q and
// less than q / (q - 1); requires rest_floor < target and rest_sup < target,
// since otherwise no finite window exists
PrimeWindow prime_window(const Rational& target, const Rational& rest_floor,
                         const Rational& rest_sup);

// the window for the second extra prime q2 once q1 is chosen, for numbers
// 2 * 3^b * q1^f1 * q2^f2 with index 7/3 and b >= 6, pinned to the window
// constants 1134/1093 and 28/27; requires q1 prime and q1 >= 29; primes
// holds exactly the primes in the open interval strictly greater than q1
PrimeWindow two_prime_window(const Natural& q1);

// primes p with lower < p < upper, both endpoints excluded
std::vector<Natural> primes_in_interval(const Rational& lower,
                                        const Rational& upper);

// least exponent e admitted by filter such that sigma(q^e) is divisible by
// none of forbidden_divisors; scans e = 1, 2, ... and rejects past cap
std::uint64_t min_exponent_bound(const Rational& target,
                                 const Factorization& fixed, const Natural& q,
                                 const std::vector<Natural>& forbidden_divisors,
                                 const ExponentFilter& filter,
                                 std::uint64_t cap = 64);

}  // namespace abundancy
