#pragma once

#include "abundancy/factorization.hpp"
#include "abundancy/natural.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace abundancy {

enum class Parity { Even, Odd };

// sigma(p^e) mod 4 for odd prime p, from residue classes alone:
//   p = 1 (mod 4): sigma(p^e) = e + 1 (mod 4)
//   p = 3 (mod 4), e odd:  sigma(p^e) = 0 (mod 4)
//   p = 3 (mod 4), e even: sigma(p^e) = 1 (mod 4)
// rejects prime 2
unsigned sigma_mod4(const PrimePower& pp);

// parity of sigma(p^e) for odd prime p: odd exactly when e is even;
// rejects prime 2
Parity sigma_parity(const PrimePower& pp);

enum class ShapeKind { OddSquare, TwoPowerTimesSquare, Unconstrained };

struct SquareShape {
  ShapeKind kind = ShapeKind::Unconstrained;
  // f with n = 2^f k^2; zero unless kind is TwoPowerTimesSquare
  std::uint64_t two_exponent = 0;
  // the odd root k; zero when kind is Unconstrained
  Natural square_root;
};

// when sigma(n) is odd, n is an odd square k^2 or 2^f k^2 with k odd and
// f >= 1, and the exact decomposition is returned; every other n is
// Unconstrained; the parity of sigma(n) is computed exactly rather than
// inferred from structure; rejects n = 0
SquareShape classify_shape(const Natural& n);

enum class PatternRejection {
  NoOddExponent,
  MultipleOddExponents,
  OddPrimeMod4Is3,
  ExponentMod4Is3,
};

std::string to_string(PatternRejection r);

struct ExponentPattern {
  // the unique prime carrying the odd exponent
  Natural odd_prime;
  std::uint64_t odd_exponent = 1;
  // the remaining parts, all with even exponents
  Factorization square_part;
};

// for the odd part of a candidate (no factor of 2): accepts exactly when
// sigma of the value is 2 mod 4, which needs a unique part q^f with f odd,
// q = 1 (mod 4) and f = 1 (mod 4); rejects otherwise with the first
// violated condition, in the order no odd exponent, several odd exponents,
// q = 3 (mod 4), f = 3 (mod 4)
std::variant<ExponentPattern, PatternRejection> extract_exponent_pattern(
    const Factorization& f);

}  // namespace abundancy
