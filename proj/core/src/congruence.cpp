#include "abundancy/congruence.hpp"

#include "abundancy/primes.hpp"
#include "abundancy/sigma.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace abundancy {

unsigned sigma_mod4(const PrimePower& pp) {
  if (pp.prime == 2 || !is_prime(pp.prime)) {
    throw std::invalid_argument("sigma_mod4 takes an odd prime power");
  }
  if (pp.prime % 4 == 1) {
    return static_cast<unsigned>((pp.exponent + 1) % 4);
  }
  // p = 3 (mod 4): the terms alternate 1, 3, 1, ... so partial sums cycle
  // through 1, 0 and the sum vanishes mod 4 exactly for odd e
  return pp.exponent % 2 == 1 ? 0u : 1u;
}

Parity sigma_parity(const PrimePower& pp) {
  if (pp.prime == 2 || !is_prime(pp.prime)) {
    throw std::invalid_argument("sigma_parity takes an odd prime power");
  }
  // e + 1 odd terms, each odd, so the sum is odd exactly for even e
  return pp.exponent % 2 == 0 ? Parity::Odd : Parity::Even;
}

SquareShape classify_shape(const Natural& n) {
  if (n == 0) {
    throw std::invalid_argument("cannot classify zero");
  }
  // decide by the exact parity of sigma(n), not by structural shortcuts
  if (sigma(n) % 2 == 0) {
    return SquareShape{ShapeKind::Unconstrained, 0, Natural(0)};
  }
  Natural odd = n;
  std::uint64_t f = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++f;
  }
  // odd sigma forces every odd prime to an even exponent, so the odd part
  // is a perfect square
  return SquareShape{f == 0 ? ShapeKind::OddSquare
                            : ShapeKind::TwoPowerTimesSquare,
                     f, isqrt(odd)};
}

std::string to_string(PatternRejection r) {
  switch (r) {
    case PatternRejection::NoOddExponent:
      return "no odd exponent";
    case PatternRejection::MultipleOddExponents:
      return "multiple odd exponents";
    case PatternRejection::OddPrimeMod4Is3:
      return "odd-exponent prime is 3 mod 4";
    case PatternRejection::ExponentMod4Is3:
      return "odd exponent is 3 mod 4";
  }
  return "unknown rejection";
}

std::variant<ExponentPattern, PatternRejection> extract_exponent_pattern(
    const Factorization& f) {
  const PrimePower* odd_part = nullptr;
  std::vector<PrimePower> square;
  for (const PrimePower& pp : f) {
    if (pp.exponent % 2 == 0) {
      square.push_back(pp);
      continue;
    }
    if (odd_part != nullptr) {
      return PatternRejection::MultipleOddExponents;
    }
    odd_part = &pp;
  }
  if (odd_part == nullptr) {
    return PatternRejection::NoOddExponent;
  }
  if (odd_part->prime % 4 != 1) {
    return PatternRejection::OddPrimeMod4Is3;
  }
  if (odd_part->exponent % 4 != 1) {
    return PatternRejection::ExponentMod4Is3;
  }
  return ExponentPattern{odd_part->prime, odd_part->exponent,
                         Factorization(std::move(square))};
}

}  // namespace abundancy
