#pragma once

#include "abundancy/natural.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace abundancy {

struct PrimePower {
  Natural prime;
  std::uint64_t exponent = 1;

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

// prime powers sorted strictly ascending by prime; the empty list is the
// factorization of 1. the public constructor validates primality, order
// and positive exponents
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> parts);

  const std::vector<PrimePower>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  Natural value() const;
  bool contains(const Natural& prime) const;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.parts_ == b.parts_;
  }

 private:
  struct Trusted {};
  Factorization(Trusted, std::vector<PrimePower> parts) : parts_(std::move(parts)) {}
  friend Factorization factorize(const Natural& n);

  std::vector<PrimePower> parts_;
};

// deterministic trial division; rejects n = 0, maps 1 to the empty list
Factorization factorize(const Natural& n);

}  // namespace abundancy
