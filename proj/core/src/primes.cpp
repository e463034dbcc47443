#include "abundancy/primes.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <limits>

namespace abundancy {

namespace {

// the test below is a proof for everything under this bound
const Natural kMillerRabinProofBound("318665857834031151167461");

constexpr std::array<std::uint64_t, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                  17, 19, 23, 29, 31, 37};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) {
      result = mulmod_u64(result, base, mod);
    }
    base = mulmod_u64(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_u64(std::uint64_t n) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    if (a % n == 0) {
      continue;
    }
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

bool miller_rabin_big(const Natural& n) {
  Natural d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Natural n_minus_1 = n - 1;
  for (std::uint64_t a : kBases) {
    Natural x = boost::multiprecision::powm(Natural(a), d, n);
    if (x == 1 || x == n_minus_1) {
      continue;
    }
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

// deterministic fallback for values past the proven Miller-Rabin range;
// unreachable at this project's scale but keeps the contract honest
bool trial_division_big(const Natural& n) {
  if (n % 2 == 0 || n % 3 == 0) {
    return false;
  }
  Natural p = 5;
  while (p * p <= n) {
    if (n % p == 0 || n % (p + 2) == 0) {
      return false;
    }
    p += 6;
  }
  return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t p : kBases) {
    if (n == p) {
      return true;
    }
    if (n % p == 0) {
      return false;
    }
  }
  return miller_rabin_u64(n);
}

bool is_prime(const Natural& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return is_prime_u64(n.convert_to<std::uint64_t>());
  }
  for (std::uint64_t p : kBases) {
    if (n % p == 0) {
      return false;
    }
  }
  if (n < kMillerRabinProofBound) {
    return miller_rabin_big(n);
  }
  return miller_rabin_big(n) && trial_division_big(n);
}

Natural next_prime(const Natural& n) {
  if (n < 2) {
    return 2;
  }
  Natural candidate = n + 1;
  if (candidate % 2 == 0) {
    ++candidate;
  }
  while (!is_prime(candidate)) {
    candidate += 2;
  }
  return candidate;
}

}  // namespace abundancy
