#pragma once

#include "abundancy/natural.hpp"

#include <compare>
#include <string>

namespace abundancy {

// exact nonnegative fraction, always in lowest terms with denominator >= 1.
// comparisons cross-multiply, so equality and ordering are exact; subtracting
// past zero throws, as nothing in this domain is negative
class Rational {
 public:
  Rational() = default;
  Rational(Natural n) : num_(std::move(n)) {}
  Rational(Natural num, Natural den);

  const Natural& num() const { return num_; }
  const Natural& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  Natural floor() const { return num_ / den_; }
  Natural ceil() const { return (num_ + den_ - 1) / den_; }

  // always "num/den", integers included ("7/3", "1/1")
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  Natural num_ = 0;
  Natural den_ = 1;
};

}  // namespace abundancy
