#pragma once

#include "abundancy/natural.hpp"
#include "abundancy/rational.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace abundancy {

struct SearchReport {
  Natural target;
  Rational target_index;
  Natural bound;
  std::vector<Natural> friends_found;
  Natural scanned = 0;
  std::chrono::milliseconds elapsed{0};
};

// bytes the sigma sieve may allocate; reads ABUNDANCY_MEMORY_CEILING,
// defaults to 2^31
std::uint64_t memory_ceiling();

// sigma(n) for n = 1..limit by divisor accumulation; slot 0 is unused;
// rejects limits whose table would exceed the memory ceiling
std::vector<std::uint64_t> sieve_sigma(std::uint64_t limit);

// every m <= bound with m != target and the same abundancy index as target
SearchReport brute_force_friends(const Natural& target, const Natural& bound);

// the same report via partitioned sieving across parallel jobs;
// friends_found content and order match the single-partition scan
SearchReport search_partitioned(const Natural& target, const Natural& bound,
                                unsigned partitions);

struct OddScanReport {
  std::vector<Natural> matches;
  Natural candidates_tested = 0;
};

// scans odd squares m^2 <= bound for index 7/3, keeping only roots m that
// are odd multiples of 3 with at least five distinct prime factors, the
// shape the case analysis proves necessary; candidates_tested counts the
// roots that pass the shape filter and reach the exact index comparison
OddScanReport pruned_odd_scan(const Natural& bound);

std::string to_table(const SearchReport& report);

}  // namespace abundancy
