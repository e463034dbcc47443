#include "abundancy/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

namespace abundancy {

Rational::Rational(Natural num, Natural den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw std::invalid_argument("zero denominator");
  }
  normalize();
}

void Rational::normalize() {
  Natural g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) {
    den_ = 1;
  }
}

std::string Rational::str() const {
  return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  Natural lhs = a.num_ * b.den_;
  Natural rhs = b.num_ * a.den_;
  if (lhs < rhs) {
    throw std::underflow_error("rational subtraction would go negative");
  }
  return Rational(lhs - rhs, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) {
    throw std::invalid_argument("division by zero");
  }
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Natural lhs = a.num_ * b.den_;
  Natural rhs = b.num_ * a.den_;
  if (lhs < rhs) {
    return std::strong_ordering::less;
  }
  if (lhs > rhs) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace abundancy
