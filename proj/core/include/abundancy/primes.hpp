#pragma once

#include "abundancy/natural.hpp"

#include <cstdint>

namespace abundancy {

// deterministic primality: Miller-Rabin over the first twelve prime bases,
// a proof for everything below 318665857834031151167461; trial division past that
bool is_prime(const Natural& n);
bool is_prime_u64(std::uint64_t n);

// least prime strictly greater than n
Natural next_prime(const Natural& n);

}  // namespace abundancy
