#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace abundancy {

// arbitrary-precision integer used as a nonnegative quantity throughout;
// parse_natural rejects signs and no operation here produces a negative value
using Natural = boost::multiprecision::cpp_int;

// parses a plain decimal string, rejecting anything else
Natural parse_natural(const std::string& text);

// floor of the square root
Natural isqrt(const Natural& n);

bool is_square(const Natural& n);

Natural pow_natural(const Natural& base, std::uint64_t exponent);

// throws std::overflow_error when the value does not fit
std::uint64_t to_u64(const Natural& n);

std::string to_string(const Natural& n);

}  // namespace abundancy
