#include "abundancy/search.hpp"

#include "abundancy/factorization.hpp"
#include "abundancy/sigma.hpp"

#include <cstdlib>
#include <future>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace abundancy {

namespace {

constexpr std::uint64_t kDefaultCeiling = std::uint64_t{1} << 31;

void check_ceiling(std::uint64_t entries) {
  std::uint64_t ceiling = memory_ceiling();
  if (entries > ceiling / sizeof(std::uint64_t)) {
    throw std::length_error("sigma table would exceed the memory ceiling");
  }
}

// sigma for one contiguous segment [lo, hi] by divisor accumulation;
// slot i holds sigma(lo + i)
std::vector<std::uint64_t> sieve_segment(std::uint64_t lo, std::uint64_t hi) {
  check_ceiling(hi - lo + 1);
  std::vector<std::uint64_t> table(hi - lo + 1, 0);
  for (std::uint64_t d = 1; d <= hi; ++d) {
    std::uint64_t first = d >= lo ? d : ((lo + d - 1) / d) * d;
    for (std::uint64_t m = first; m <= hi; m += d) {
      table[m - lo] += d;
    }
  }
  return table;
}

struct FriendTest {
  Natural target;
  Natural sigma_target;
  bool fits_u64 = false;
  std::uint64_t target_u64 = 0;
  std::uint64_t sigma_target_u64 = 0;

  explicit FriendTest(const Natural& t)
      : target(t), sigma_target(sigma(t)) {
    if (target <= std::numeric_limits<std::uint64_t>::max() &&
        sigma_target <= std::numeric_limits<std::uint64_t>::max()) {
      fits_u64 = true;
      target_u64 = to_u64(target);
      sigma_target_u64 = to_u64(sigma_target);
    }
  }

  // sigma(n) * target == sigma(target) * n, cross-multiplied exactly
  bool matches(std::uint64_t n, std::uint64_t sigma_n) const {
    if (fits_u64) {
      return static_cast<unsigned __int128>(sigma_n) * target_u64 ==
             static_cast<unsigned __int128>(sigma_target_u64) * n;
    }
    return Natural(sigma_n) * target == sigma_target * Natural(n);
  }
};

struct SegmentResult {
  std::vector<Natural> friends_found;
  std::uint64_t scanned = 0;
};

SegmentResult scan_segment(const FriendTest& test, std::uint64_t lo,
                           std::uint64_t hi) {
  SegmentResult result;
  std::vector<std::uint64_t> table = sieve_segment(lo, hi);
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (test.fits_u64 && n == test.target_u64) {
      continue;
    }
    if (!test.fits_u64 && Natural(n) == test.target) {
      continue;
    }
    ++result.scanned;
    if (test.matches(n, table[n - lo])) {
      result.friends_found.push_back(n);
    }
  }
  return result;
}

}  // namespace

std::uint64_t memory_ceiling() {
  const char* raw = std::getenv("ABUNDANCY_MEMORY_CEILING");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultCeiling;
  }
  return to_u64(parse_natural(raw));
}

std::vector<std::uint64_t> sieve_sigma(std::uint64_t limit) {
  if (limit < 1) {
    throw std::invalid_argument("sieve needs a positive bound");
  }
  check_ceiling(limit + 1);
  std::vector<std::uint64_t> table(limit + 1, 0);
  for (std::uint64_t d = 1; d <= limit; ++d) {
    for (std::uint64_t m = d; m <= limit; m += d) {
      table[m] += d;
    }
  }
  return table;
}

SearchReport brute_force_friends(const Natural& target, const Natural& bound) {
  if (target < 2) {
    throw std::invalid_argument("target must be at least 2");
  }
  auto started = std::chrono::steady_clock::now();
  FriendTest test(target);
  std::uint64_t limit = to_u64(bound);
  if (limit < 1) {
    throw std::invalid_argument("search needs a positive bound");
  }
  std::vector<std::uint64_t> table = sieve_sigma(limit);
  SearchReport report;
  report.target = target;
  report.target_index = Rational(test.sigma_target, target);
  report.bound = bound;
  std::uint64_t scanned = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (test.fits_u64 ? n == test.target_u64 : Natural(n) == target) {
      continue;
    }
    ++scanned;
    if (test.matches(n, table[n])) {
      report.friends_found.push_back(n);
    }
  }
  report.scanned = scanned;
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

SearchReport search_partitioned(const Natural& target, const Natural& bound,
                                unsigned partitions) {
  if (target < 2) {
    throw std::invalid_argument("target must be at least 2");
  }
  if (partitions < 1) {
    throw std::invalid_argument("need at least one partition");
  }
  auto started = std::chrono::steady_clock::now();
  FriendTest test(target);
  std::uint64_t limit = to_u64(bound);
  if (limit < 1) {
    throw std::invalid_argument("search needs a positive bound");
  }
  if (partitions > limit) {
    partitions = static_cast<unsigned>(limit);
  }
  std::uint64_t segment = (limit + partitions - 1) / partitions;
  std::vector<std::future<SegmentResult>> futures;
  for (std::uint64_t lo = 1; lo <= limit; lo += segment) {
    std::uint64_t hi = std::min(lo + segment - 1, limit);
    futures.push_back(std::async(std::launch::async, [&test, lo, hi] {
      return scan_segment(test, lo, hi);
    }));
  }
  SearchReport report;
  report.target = target;
  report.target_index = Rational(test.sigma_target, target);
  report.bound = bound;
  std::uint64_t scanned = 0;
  // futures are ordered by range, so appending keeps friends ascending
  for (auto& f : futures) {
    SegmentResult r = f.get();
    scanned += r.scanned;
    for (Natural& n : r.friends_found) {
      report.friends_found.push_back(std::move(n));
    }
  }
  report.scanned = scanned;
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

OddScanReport pruned_odd_scan(const Natural& bound) {
  if (bound < 9) {
    throw std::invalid_argument("scan needs bound >= 9");
  }
  OddScanReport report;
  Natural root_limit = isqrt(bound);
  // odd multiples of 3 are exactly 3 mod 6
  for (Natural m = 3; m <= root_limit; m += 6) {
    Factorization f = factorize(m);
    if (f.size() < 5) {
      continue;
    }
    report.candidates_tested += 1;
    // I(m^2) = 7/3 cross-multiplies to 3 sigma(m^2) = 7 m^2, with
    // sigma(m^2) taken from the squared factorization
    Natural square = m * m;
    Natural s = 1;
    for (const PrimePower& pp : f) {
      s *= sigma_prime_power({pp.prime, 2 * pp.exponent});
    }
    if (3 * s == 7 * square) {
      report.matches.push_back(square);
    }
  }
  return report;
}

std::string to_table(const SearchReport& report) {
  std::ostringstream out;
  out << "target      " << report.target.str() << "\n";
  out << "index       " << report.target_index.str() << "\n";
  out << "bound       " << report.bound.str() << "\n";
  out << "friends     ";
  for (std::size_t i = 0; i < report.friends_found.size(); ++i) {
    out << (i == 0 ? "" : ", ") << report.friends_found[i].str();
  }
  if (report.friends_found.empty()) {
    out << "(none)";
  }
  out << "\n";
  out << "scanned     " << report.scanned.str() << "\n";
  out << "elapsed_ms  " << report.elapsed.count() << "\n";
  return out.str();
}

}  // namespace abundancy
