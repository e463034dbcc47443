#include "abundancy/natural.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace abundancy {

Natural parse_natural(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty string is not a natural number");
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("not a natural number: " + text);
    }
  }
  return Natural(text);
}

Natural isqrt(const Natural& n) {
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Natural& n) {
  Natural r = isqrt(n);
  return r * r == n;
}

Natural pow_natural(const Natural& base, std::uint64_t exponent) {
  if (exponent > std::numeric_limits<unsigned>::max()) {
    throw std::overflow_error("exponent too large");
  }
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

std::uint64_t to_u64(const Natural& n) {
  if (n > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("value does not fit in 64 bits");
  }
  return n.convert_to<std::uint64_t>();
}

std::string to_string(const Natural& n) {
  return n.str();
}

}  // namespace abundancy
