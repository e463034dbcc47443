#pragma once

#include "abundancy/bounds.hpp"
#include "abundancy/factorization.hpp"
#include "abundancy/natural.hpp"
#include "abundancy/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace abundancy {

enum class CheckKind {
  IndexInequality,
  Divisibility,
  CongruenceClaim,
  EmptyWindow,
  WindowContents,
  MinPrime,
  MinExponent,
};

std::string to_string(CheckKind kind);

enum class Relation { Less, Greater, Equal };

std::string to_string(Relation relation);

// witness index_of_factorization(fixed) * index_sup(sup_primes) * product
// of extra_factors, compared against bound under relation
struct IndexInequalityClaim {
  Factorization fixed;
  std::vector<Natural> sup_primes;
  std::vector<Rational> extra_factors;
  Relation relation = Relation::Less;
  Rational bound{Natural(7), Natural(3)};
};

// divisor | sigma(of); when expected_sigma is set, sigma(of) must equal it
struct DivisibilityClaim {
  Natural divisor;
  PrimePower of;
  std::optional<Natural> expected_sigma;
};

// every listed value has the stated residue mod modulus
struct ResidueClaim {
  Natural modulus;
  std::vector<std::pair<Natural, Natural>> residues;
};

// extract_exponent_pattern(odd_part) accepts with the stated prime and
// exponent; the witness is sigma of the value mod 4, necessarily 2
struct PatternClaim {
  Factorization odd_part;
  Natural expected_prime;
  std::uint64_t expected_exponent = 1;
};

// min_prime_bound(target, fixed) lands on expected_prime, and the exact
// threshold it steps from has the stated floor
struct MinPrimeClaim {
  Rational target;
  Factorization fixed;
  Natural threshold_floor;
  Natural expected_prime;
};

// one exponent ruled out because divisor | sigma(q^exponent); when
// expected_sigma is set, sigma(q^exponent) must equal it
struct ExponentRefutation {
  std::uint64_t exponent = 1;
  Natural divisor;
  std::optional<Natural> expected_sigma;
};

// every filter-admitted exponent below implied_min carries a refutation,
// so the exponent of q is at least implied_min
struct MinExponentClaim {
  Natural q;
  ExponentFilter filter;
  std::vector<ExponentRefutation> refutations;
  std::uint64_t implied_min = 1;
};

// two_prime_window(q1) has the stated integer presentation endpoints and
// exactly the expected primes, which also match a direct integer scan
struct WindowPrimesClaim {
  Natural q1;
  Natural int_lower;
  Natural int_upper;
  std::vector<Natural> expected_primes;
};

// scanning primes q1 = 29 .. scan_limit, the ones whose two-prime window
// reaches past q1 itself are exactly expected, and no window reaches past
// upper_cap, so the scan limit covers every case
struct CandidateSetClaim {
  Natural scan_limit;
  std::vector<Natural> expected;
  Natural upper_cap;
};

// two_prime_window(q1) is empty outright; the endpoints floor/ceil to the
// stated integers and the integer interval is empty as well
struct DirectEmptyClaim {
  Natural q1;
  Natural int_lower;
  Natural int_upper;
};

// the full per-case replay: the window for q1 has the stated integer
// endpoints; the refutations force the exponent of q1 up to min_exponent;
// fixed, which must contain q1^min_exponent, has index floor F < target,
// so q2 > F / (target - F), whose floor is forced_int_lower; no prime
// lies between that bound and the window upper endpoint
struct ForcedEmptyClaim {
  Rational target;
  Natural q1;
  Natural window_int_lower;
  Natural window_int_upper;
  ExponentFilter filter;
  std::vector<ExponentRefutation> refutations;
  std::uint64_t min_exponent = 1;
  Factorization fixed;
  Natural forced_int_lower;
};

using CheckPayload =
    std::variant<IndexInequalityClaim, DivisibilityClaim, ResidueClaim,
                 PatternClaim, MinPrimeClaim, MinExponentClaim,
                 WindowPrimesClaim, CandidateSetClaim, DirectEmptyClaim,
                 ForcedEmptyClaim>;

struct CertificateCheck {
  std::string id;
  CheckKind kind = CheckKind::IndexInequality;
  std::string citation;
  CheckPayload payload;
};

using Witness = std::variant<Natural, Rational>;

struct CheckResult {
  CertificateCheck check;
  bool passed = false;
  Witness witness;
  // failure diagnostics; empty on pass
  std::vector<std::string> notes;
};

struct CertificateReport {
  std::vector<CheckResult> checks;
  bool all_passed = true;
};

// the complete fixed check list replaying the friends-of-12 case analysis
// in proof order
const std::vector<CertificateCheck>& builtin_friends_of_12_certificate();

// evaluates every check independently and exactly; a malformed payload
// fails its check with a diagnostic note instead of aborting the run
CertificateReport run_certificate(const std::vector<CertificateCheck>& checks);

std::string to_table(const CertificateReport& report);

}  // namespace abundancy
