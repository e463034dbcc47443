#include "abundancy/certificate.hpp"

#include "abundancy/congruence.hpp"
#include "abundancy/primes.hpp"
#include "abundancy/sigma.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <sstream>
#include <utility>

namespace abundancy {

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::IndexInequality:
      return "IndexInequality";
    case CheckKind::Divisibility:
      return "Divisibility";
    case CheckKind::CongruenceClaim:
      return "CongruenceClaim";
    case CheckKind::EmptyWindow:
      return "EmptyWindow";
    case CheckKind::WindowContents:
      return "WindowContents";
    case CheckKind::MinPrime:
      return "MinPrime";
    case CheckKind::MinExponent:
      return "MinExponent";
  }
  return "unknown";
}

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::Less:
      return "<";
    case Relation::Greater:
      return ">";
    case Relation::Equal:
      return "=";
  }
  return "?";
}

namespace {

// accumulates failure notes so a check reports every violated condition
// instead of stopping at the first
struct Eval {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool condition, std::string what) {
    if (!condition) {
      ok = false;
      notes.push_back(std::move(what));
    }
  }
};

struct KindOf {
  CheckKind operator()(const IndexInequalityClaim&) const {
    return CheckKind::IndexInequality;
  }
  CheckKind operator()(const DivisibilityClaim&) const {
    return CheckKind::Divisibility;
  }
  CheckKind operator()(const ResidueClaim&) const {
    return CheckKind::CongruenceClaim;
  }
  CheckKind operator()(const PatternClaim&) const {
    return CheckKind::CongruenceClaim;
  }
  CheckKind operator()(const MinPrimeClaim&) const {
    return CheckKind::MinPrime;
  }
  CheckKind operator()(const MinExponentClaim&) const {
    return CheckKind::MinExponent;
  }
  CheckKind operator()(const WindowPrimesClaim&) const {
    return CheckKind::WindowContents;
  }
  CheckKind operator()(const CandidateSetClaim&) const {
    return CheckKind::WindowContents;
  }
  CheckKind operator()(const DirectEmptyClaim&) const {
    return CheckKind::EmptyWindow;
  }
  CheckKind operator()(const ForcedEmptyClaim&) const {
    return CheckKind::EmptyWindow;
  }
};

Witness evaluate(const IndexInequalityClaim& c, Eval& e) {
  Rational w = index_of_factorization(c.fixed) * index_sup(c.sup_primes);
  for (const Rational& f : c.extra_factors) {
    w *= f;
  }
  switch (c.relation) {
    case Relation::Less:
      e.require(w < c.bound, w.str() + " is not < " + c.bound.str());
      break;
    case Relation::Greater:
      e.require(w > c.bound, w.str() + " is not > " + c.bound.str());
      break;
    case Relation::Equal:
      e.require(w == c.bound, w.str() + " is not = " + c.bound.str());
      break;
  }
  return w;
}

Witness evaluate(const DivisibilityClaim& c, Eval& e) {
  Natural s = sigma_prime_power(c.of);
  if (c.expected_sigma) {
    e.require(s == *c.expected_sigma,
              "sigma(" + c.of.prime.str() + "^" +
                  std::to_string(c.of.exponent) + ") is " + s.str() +
                  ", not " + c.expected_sigma->str());
  }
  if (c.divisor < 1) {
    e.require(false, "divisor must be positive");
    return s;
  }
  e.require(s % c.divisor == 0,
            c.divisor.str() + " does not divide " + s.str());
  return s;
}

Witness evaluate(const ResidueClaim& c, Eval& e) {
  if (c.modulus < 2) {
    e.require(false, "modulus must be at least 2");
    return Natural(0);
  }
  e.require(!c.residues.empty(), "no residues stated");
  Witness witness = Natural(0);
  bool first = true;
  for (const auto& [value, expected] : c.residues) {
    Natural r = value % c.modulus;
    if (first) {
      witness = r;
      first = false;
    }
    e.require(r == expected, value.str() + " is " + r.str() + " (mod " +
                                 c.modulus.str() + "), not " +
                                 expected.str());
  }
  return witness;
}

Witness evaluate(const PatternClaim& c, Eval& e) {
  Natural residue = sigma(c.odd_part.value()) % 4;
  auto outcome = extract_exponent_pattern(c.odd_part);
  if (const PatternRejection* r = std::get_if<PatternRejection>(&outcome)) {
    e.require(false, "pattern rejected: " + to_string(*r));
  } else {
    const ExponentPattern& p = std::get<ExponentPattern>(outcome);
    e.require(p.odd_prime == c.expected_prime,
              "odd-exponent prime is " + p.odd_prime.str() + ", not " +
                  c.expected_prime.str());
    e.require(p.odd_exponent == c.expected_exponent,
              "odd exponent is " + std::to_string(p.odd_exponent) +
                  ", not " + std::to_string(c.expected_exponent));
  }
  e.require(residue == 2, "sigma of the odd part is " + residue.str() +
                              " (mod 4), not 2");
  return residue;
}

Witness evaluate(const MinPrimeClaim& c, Eval& e) {
  Rational floor_value = index_floor(c.fixed);
  if (!(floor_value < c.target)) {
    e.require(false, "fixed part already reaches the target");
    return Rational(0);
  }
  Rational threshold = floor_value / (c.target - floor_value);
  e.require(threshold.floor() == c.threshold_floor,
            "threshold " + threshold.str() + " floors to " +
                threshold.floor().str() + ", not " + c.threshold_floor.str());
  Natural p = min_prime_bound(c.target, c.fixed);
  e.require(p == c.expected_prime, "least admissible prime is " + p.str() +
                                       ", not " + c.expected_prime.str());
  return threshold;
}

// verifies that the stated refutations rule out every filter-admitted
// exponent below implied_min, each by an exact divisibility of sigma(q^e)
void check_refutation_prefix(const Natural& q, const ExponentFilter& filter,
                             const std::vector<ExponentRefutation>& refutations,
                             std::uint64_t implied_min, Eval& e) {
  std::vector<std::uint64_t> refuted;
  for (const ExponentRefutation& r : refutations) {
    e.require(r.exponent >= 1 && r.exponent < implied_min,
              "refutation exponent " + std::to_string(r.exponent) +
                  " is not below the implied minimum");
    e.require(filter.admits(r.exponent),
              "exponent " + std::to_string(r.exponent) +
                  " is already excluded by the filter");
    Natural s = sigma_prime_power({q, r.exponent});
    if (r.expected_sigma) {
      e.require(s == *r.expected_sigma,
                "sigma(" + q.str() + "^" + std::to_string(r.exponent) +
                    ") is " + s.str() + ", not " + r.expected_sigma->str());
    }
    if (r.divisor < 1) {
      e.require(false, "refutation divisor must be positive");
      continue;
    }
    e.require(s % r.divisor == 0,
              r.divisor.str() + " does not divide sigma(" + q.str() + "^" +
                  std::to_string(r.exponent) + ") = " + s.str());
    refuted.push_back(r.exponent);
  }
  for (std::uint64_t ex = 1; ex < implied_min; ++ex) {
    if (!filter.admits(ex)) {
      continue;
    }
    e.require(std::find(refuted.begin(), refuted.end(), ex) != refuted.end(),
              "exponent " + std::to_string(ex) +
                  " passes the filter but has no refutation");
  }
}

Witness evaluate(const MinExponentClaim& c, Eval& e) {
  e.require(is_prime(c.q), c.q.str() + " is not prime");
  check_refutation_prefix(c.q, c.filter, c.refutations, c.implied_min, e);
  return Natural(c.implied_min);
}

Witness evaluate(const WindowPrimesClaim& c, Eval& e) {
  PrimeWindow w = two_prime_window(c.q1);
  e.require(w.lower.floor() == c.int_lower,
            "window lower " + w.lower.str() + " floors to " +
                w.lower.floor().str() + ", not " + c.int_lower.str());
  e.require(w.upper.floor() == c.int_upper || w.upper.ceil() == c.int_upper,
            "stated top " + c.int_upper.str() +
                " is neither floor nor ceiling of " + w.upper.str());
  e.require(w.primes == c.expected_primes,
            "window primes differ from the stated set");
  std::vector<Natural> ints =
      primes_in_interval(Rational(c.int_lower), Rational(c.int_upper));
  std::erase_if(ints, [&](const Natural& p) { return p <= c.q1; });
  e.require(ints == c.expected_primes,
            "integer presentation scan differs from the stated set");
  return w.lower;
}

Witness evaluate(const CandidateSetClaim& c, Eval& e) {
  std::vector<Natural> candidates;
  Rational max_upper(0);
  for (Natural p = 29; p <= c.scan_limit; p = next_prime(p)) {
    PrimeWindow w = two_prime_window(p);
    // q1 is a candidate when its window reaches past q1 itself, so a
    // larger second prime could fit; the window may still hold no prime
    if (w.upper > Rational(p)) {
      candidates.push_back(p);
    }
    if (w.upper > max_upper) {
      max_upper = w.upper;
    }
  }
  e.require(candidates == c.expected, "candidate set differs from the scan");
  e.require(max_upper == Rational(c.upper_cap),
            "windows reach " + max_upper.str() + ", not " +
                c.upper_cap.str());
  e.require(Rational(c.scan_limit) >= max_upper,
            "scan limit falls short of the windows' reach");
  return max_upper;
}

Witness evaluate(const DirectEmptyClaim& c, Eval& e) {
  PrimeWindow w = two_prime_window(c.q1);
  e.require(w.primes.empty(), "window unexpectedly holds a prime");
  e.require(w.lower.floor() == c.int_lower,
            "window lower " + w.lower.str() + " floors to " +
                w.lower.floor().str() + ", not " + c.int_lower.str());
  e.require(w.upper.ceil() == c.int_upper,
            "window upper " + w.upper.str() + " rounds to " +
                w.upper.ceil().str() + ", not " + c.int_upper.str());
  e.require(primes_in_interval(Rational(c.int_lower), Rational(c.int_upper))
                .empty(),
            "a prime survives in the integer presentation");
  return w.lower;
}

Witness evaluate(const ForcedEmptyClaim& c, Eval& e) {
  PrimeWindow w = two_prime_window(c.q1);
  e.require(w.lower.floor() == c.window_int_lower,
            "window lower " + w.lower.str() + " floors to " +
                w.lower.floor().str() + ", not " + c.window_int_lower.str());
  e.require(w.upper == Rational(c.window_int_upper),
            "window upper " + w.upper.str() + " is not exactly " +
                c.window_int_upper.str());
  check_refutation_prefix(c.q1, c.filter, c.refutations, c.min_exponent, e);
  bool pinned = false;
  for (const PrimePower& pp : c.fixed) {
    pinned = pinned || (pp.prime == c.q1 && pp.exponent == c.min_exponent);
  }
  e.require(pinned, "fixed part does not pin q1 at the forced exponent");
  Rational floor_value = index_floor(c.fixed);
  if (!(floor_value < c.target)) {
    e.require(false, "fixed part already reaches the target");
    return Rational(0);
  }
  // index_floor(fixed) * (q2 + 1) / q2 <= target forces q2 above this
  Rational forced = floor_value / (c.target - floor_value);
  e.require(!forced.is_integer(),
            "forced bound lands exactly on an integer");
  e.require(forced.floor() == c.forced_int_lower,
            "forced bound " + forced.str() + " floors to " +
                forced.floor().str() + ", not " + c.forced_int_lower.str());
  e.require(forced > w.lower, "forced bound does not sharpen the window");
  e.require(primes_in_interval(forced, w.upper).empty(),
            "a prime survives above the forced bound");
  e.require(primes_in_interval(Rational(c.forced_int_lower),
                               Rational(c.window_int_upper))
                .empty(),
            "a prime survives in the integer presentation");
  return forced;
}

Factorization fz(std::vector<PrimePower> parts) {
  return Factorization(std::move(parts));
}

std::vector<Natural> nats(std::initializer_list<int> xs) {
  return std::vector<Natural>(xs.begin(), xs.end());
}

Rational fr(long long num, long long den) {
  return Rational(Natural(num), Natural(den));
}

std::vector<CertificateCheck> build_friends_of_12_checks() {
  std::vector<CertificateCheck> checks;
  auto add = [&](std::string id, CheckKind kind, std::string citation,
                 CheckPayload payload) {
    checks.push_back(CertificateCheck{std::move(id), kind,
                                      std::move(citation),
                                      std::move(payload)});
  };

  // odd branch: n = 3^2a m^2 with m odd, coprime to 3, and k extra primes
  add("odd.m1", CheckKind::IndexInequality,
      "odd case: n = 3^2a m^2; if m = 1 then I(n) = I(3^2a) < 3/2 < 7/3, "
      "so m > 1",
      IndexInequalityClaim{.sup_primes = nats({3})});
  add("odd.k2", CheckKind::IndexInequality,
      "odd case, k <= 2: I(n) <= I(3^2a 5^2e1 7^2e2) < (3/2)(5/4)(7/6) < "
      "7/3, so k >= 3",
      IndexInequalityClaim{.sup_primes = nats({3, 5, 7})});
  add("odd.k3.exclude-17", CheckKind::IndexInequality,
      "k = 3 with p3 >= 17: I(3^2a 5^2e1 7^2e2 17^2e3) < "
      "(3/2)(5/4)(7/6)(17/16) < 7/3, so the third extra prime stays below "
      "17",
      IndexInequalityClaim{.sup_primes = nats({3, 5, 7, 17})});
  add("odd.k3.exclude-11-13", CheckKind::IndexInequality,
      "k = 3 without 7: the best support {3,5,11,13} gives I < "
      "(3/2)(5/4)(11/10)(13/12) < 7/3, so p1 = 5, p2 = 7 and p3 in {11, "
      "13}",
      IndexInequalityClaim{.sup_primes = nats({3, 5, 11, 13})});
  add("odd.k3.exclude-11", CheckKind::IndexInequality,
      "p3 = 11: I(3^4 5^2 7^2 11^2) = (121/81)(31/25)(57/49)(133/121) > "
      "7/3 forces a = 1",
      IndexInequalityClaim{.fixed = fz({{3, 4}, {5, 2}, {7, 2}, {11, 2}}),
                           .relation = Relation::Greater});
  add("odd.k3.exclude-11.div", CheckKind::Divisibility,
      "p3 = 11, a = 1: 7n = 3 sigma(n) = 3 * 13 * sigma(5^2e1 7^2e2 "
      "11^2e3) puts 13 | n, impossible; so p3 != 11",
      DivisibilityClaim{.divisor = 13,
                        .of = {3, 2},
                        .expected_sigma = Natural(13)});
  add("odd.k3.exclude-13", CheckKind::IndexInequality,
      "p3 = 13: I(3^6 5^2 7^2 13^2) = (1093/729)(31/25)(57/49)(183/169) > "
      "7/3 forces a in {1, 2}",
      IndexInequalityClaim{.fixed = fz({{3, 6}, {5, 2}, {7, 2}, {13, 2}}),
                           .relation = Relation::Greater});
  add("odd.k3.exclude-13.a1", CheckKind::IndexInequality,
      "p3 = 13, a = 1: I(n) = (13/9) I(5^2e1 7^2e2 13^2e3) < "
      "(13/9)(5/4)(7/6)(13/12) < 7/3, so a != 1",
      IndexInequalityClaim{.fixed = fz({{3, 2}}),
                           .sup_primes = nats({5, 7, 13})});
  add("odd.k3.exclude-13.a2", CheckKind::Divisibility,
      "p3 = 13, a = 2: 121 = sigma(3^4) divides 3 sigma(n) = 7n, so 11 | "
      "n, impossible; a != 2 and the odd case needs k >= 4",
      DivisibilityClaim{.divisor = 11,
                        .of = {3, 4},
                        .expected_sigma = Natural(121)});

  // even branch: n = 2 * 3^b * q1^f1 ... with the two-prime window machinery
  add("even.no-four", CheckKind::IndexInequality,
      "even case: I(12) = I(2^2 * 3) = 7/3 exactly, so 4 | n would give "
      "I(n) > 7/3; hence n = 2 * 3^b * m with m odd",
      IndexInequalityClaim{.fixed = fz({{2, 2}, {3, 1}}),
                           .relation = Relation::Equal});
  add("even.m1", CheckKind::IndexInequality,
      "m = 1: I(2 * 3^b) < (3/2)(3/2) < 7/3, so m > 1",
      IndexInequalityClaim{.fixed = fz({{2, 1}}), .sup_primes = nats({3})});
  add("even.pattern", CheckKind::CongruenceClaim,
      "sigma(3^b prod qi^fi) = 2 (mod 4) forces exactly one odd exponent "
      "with q = e = 1 (mod 4); the known friend 234 = 2 * 3^2 * 13 shows "
      "the pattern: q = 13, e = 1",
      PatternClaim{.odd_part = fz({{3, 2}, {13, 1}}),
                   .expected_prime = 13,
                   .expected_exponent = 1});
  add("even.b2", CheckKind::Divisibility,
      "b = 2: 13 = sigma(3^2) divides 7n, so 13 | n and 234 | n, giving "
      "I(n) > I(234) = 7/3; b != 2",
      DivisibilityClaim{.divisor = 13,
                        .of = {3, 2},
                        .expected_sigma = Natural(13)});
  add("even.b4.div", CheckKind::Divisibility,
      "b = 4: 121 = sigma(3^4) divides 7n, so 11 | n",
      DivisibilityClaim{.divisor = 11,
                        .of = {3, 4},
                        .expected_sigma = Natural(121)});
  add("even.b4.bound", CheckKind::IndexInequality,
      "b = 4 with 11 | n: I(n) >= I(2 * 3^4 * 11) = (3/2)(121/81)(12/11) > "
      "7/3; b != 4, so b >= 6",
      IndexInequalityClaim{.fixed = fz({{2, 1}, {3, 4}, {11, 1}}),
                           .relation = Relation::Greater});
  add("even.q1-min", CheckKind::MinPrime,
      "7/3 >= I(2 * 3^6 * q1) gives (q1+1)/q1 <= (7/3)(2/3)(2 * "
      "3^6/(3^7-1)), hence q1 > 26 and q1 >= 29",
      MinPrimeClaim{.target = fr(7, 3),
                    .fixed = fz({{2, 1}, {3, 6}}),
                    .threshold_floor = 26,
                    .expected_prime = 29});
  add("even.k1", CheckKind::IndexInequality,
      "k = 1: I(n) <= I(2) I(3^b 29^f1) < (3/2)(3/2)(29/28) < 7/3, so k >= "
      "2",
      IndexInequalityClaim{.fixed = fz({{2, 1}}),
                           .sup_primes = nats({3, 29})});
  add("even.constants-upper", CheckKind::IndexInequality,
      "k = 2 lower side: (1 + 1/q1)(1 + 1/q2) <= (7/3)(2/3)(2 * "
      "3^6/(3^7-1)) = 1134/1093",
      IndexInequalityClaim{
          .extra_factors = {fr(7, 3), fr(2, 3), fr(1458, 2186)},
          .relation = Relation::Equal,
          .bound = fr(1134, 1093)});
  add("even.constants-lower", CheckKind::IndexInequality,
      "k = 2 upper side: (q1/(q1-1))(q2/(q2-1)) > (7/3)(2/3)(2/3) = 28/27",
      IndexInequalityClaim{.extra_factors = {fr(7, 3), fr(2, 3), fr(2, 3)},
                           .relation = Relation::Equal,
                           .bound = fr(28, 27)});
  add("even.q1-candidates", CheckKind::WindowContents,
      "29 <= q1 < q2 < 756/(q1-28) + 28 pins q1 to [29, 55]: the primes "
      "whose window reaches past q1 are {29,31,37,41,43,47,53}, and no "
      "window tops 784",
      CandidateSetClaim{.scan_limit = 1200,
                        .expected = nats({29, 31, 37, 41, 43, 47, 53}),
                        .upper_cap = 784});
  add("even.b6", CheckKind::Divisibility,
      "b = 6: 1093 = sigma(3^6) divides 7n, so 1093 | n; but q2 < 784 < "
      "1093; b != 6",
      DivisibilityClaim{.divisor = 1093,
                        .of = {3, 6},
                        .expected_sigma = Natural(1093)});
  add("even.b8", CheckKind::Divisibility,
      "b = 8: 13 | 9841 = sigma(3^8), yet 13 < 29 <= q1 < q2; b != 8",
      DivisibilityClaim{.divisor = 13,
                        .of = {3, 8},
                        .expected_sigma = Natural(9841)});
  add("even.b10", CheckKind::Divisibility,
      "b = 10: 23 | 88573 = sigma(3^10), yet 23 < 29 <= q1 < q2; b != 10, "
      "so b >= 12",
      DivisibilityClaim{.divisor = 23,
                        .of = {3, 10},
                        .expected_sigma = Natural(88573)});
  add("even.q1-29", CheckKind::EmptyWindow,
      "q1 = 29: window 341 < q2 < 784; f1 != 1 since 5 | 30 = sigma(29), "
      "f1 != 2 since 13 | 871 = sigma(29^2), so f1 >= 3; then 7/3 >= I(2 * "
      "3^12 * 29^3 * q2) forces q2 > 781, and no prime lies between 781 "
      "and 784",
      ForcedEmptyClaim{
          .target = fr(7, 3),
          .q1 = 29,
          .window_int_lower = 341,
          .window_int_upper = 784,
          .filter = ExponentFilter::any(),
          .refutations = {{1, 5, Natural(30)}, {2, 13, Natural(871)}},
          .min_exponent = 3,
          .fixed = fz({{2, 1}, {3, 12}, {29, 3}}),
          .forced_int_lower = 781});
  add("even.q1-31", CheckKind::EmptyWindow,
      "q1 = 31: window 196 < q2 < 280; f1 even since 31 = 3 (mod 4), f1 != "
      "2 since 331 | 993 = sigma(31^2) and q2 < 280 < 331, so f1 >= 4; "
      "then q2 > 278, and no prime lies between 278 and 280",
      ForcedEmptyClaim{.target = fr(7, 3),
                       .q1 = 31,
                       .window_int_lower = 196,
                       .window_int_upper = 280,
                       .filter = ExponentFilter::even(),
                       .refutations = {{2, 331, Natural(993)}},
                       .min_exponent = 4,
                       .fixed = fz({{2, 1}, {3, 12}, {31, 4}}),
                       .forced_int_lower = 278});
  add("even.q1-37", CheckKind::EmptyWindow,
      "q1 = 37: window 97 < q2 < 112; f1 != 1 since 19 | sigma(37), so f1 "
      ">= 2; then q2 > 110, and no prime lies between 110 and 112",
      ForcedEmptyClaim{.target = fr(7, 3),
                       .q1 = 37,
                       .window_int_lower = 97,
                       .window_int_upper = 112,
                       .filter = ExponentFilter::any(),
                       .refutations = {{1, 19, std::nullopt}},
                       .min_exponent = 2,
                       .fixed = fz({{2, 1}, {3, 12}, {37, 2}}),
                       .forced_int_lower = 110});
  add("even.q1-41.window", CheckKind::WindowContents,
      "q1 = 41: window 78 < q2 < 86, so q2 in {79, 83}",
      WindowPrimesClaim{.q1 = 41,
                        .int_lower = 78,
                        .int_upper = 86,
                        .expected_primes = nats({79, 83})});
  add("even.q1-41.mod4", CheckKind::CongruenceClaim,
      "79 = 83 = 3 (mod 4) and 41 = 1 (mod 4), so f1 = 1 (mod 4) and f2 "
      "is even",
      ResidueClaim{.modulus = 4,
                   .residues = {{79, 3}, {83, 3}, {41, 1}}});
  add("even.q1-41.exclude-79", CheckKind::IndexInequality,
      "q2 = 79: I(2 * 3^12 * 41 * 79^2) > 7/3, so q2 != 79",
      IndexInequalityClaim{
          .fixed = fz({{2, 1}, {3, 12}, {41, 1}, {79, 2}}),
          .relation = Relation::Greater});
  add("even.q1-41.exclude-83-f5", CheckKind::IndexInequality,
      "q2 = 83: I(2 * 3^12 * 41^5 * 83^2) > 7/3, so f1 = 1",
      IndexInequalityClaim{
          .fixed = fz({{2, 1}, {3, 12}, {41, 5}, {83, 2}}),
          .relation = Relation::Greater});
  add("even.q1-41.exclude-83-f1", CheckKind::IndexInequality,
      "q2 = 83, f1 = 1: I(n) < (3/2)(42/41)(3/2)(83/82) < 7/3, so q2 != "
      "83 and q1 != 41",
      IndexInequalityClaim{.fixed = fz({{2, 1}, {41, 1}}),
                           .sup_primes = nats({3, 83})});
  add("even.q1-43.window", CheckKind::WindowContents,
      "q1 = 43: window 71 < q2 < 78, so q2 = 73",
      WindowPrimesClaim{.q1 = 43,
                        .int_lower = 71,
                        .int_upper = 78,
                        .expected_primes = nats({73})});
  add("even.q1-43.f1", CheckKind::MinExponent,
      "f1 even since 43 = 3 (mod 4), so f1 >= 2",
      MinExponentClaim{.q = 43,
                       .filter = ExponentFilter::even(),
                       .implied_min = 2});
  add("even.q1-43.bound", CheckKind::IndexInequality,
      "I(2 * 3^12 * 43^2 * 73) > 7/3, so q1 != 43",
      IndexInequalityClaim{
          .fixed = fz({{2, 1}, {3, 12}, {43, 2}, {73, 1}}),
          .relation = Relation::Greater});
  add("even.q1-47.window", CheckKind::WindowContents,
      "q1 = 47: window 62 < q2 < 68, so q2 = 67",
      WindowPrimesClaim{.q1 = 47,
                        .int_lower = 62,
                        .int_upper = 68,
                        .expected_primes = nats({67})});
  add("even.q1-47.parity", CheckKind::CongruenceClaim,
      "47 = 67 = 3 (mod 4): sigma(2 * 3^b * 47^f1 * 67^f2) would be odd "
      "or divisible by 4; q1 != 47",
      ResidueClaim{.modulus = 4, .residues = {{47, 3}, {67, 3}}});
  add("even.q1-53.window", CheckKind::EmptyWindow,
      "q1 = 53: window 54 < q2 < 59 holds no prime; q1 != 53, so k >= 3 "
      "and the even case closes",
      DirectEmptyClaim{.q1 = 53, .int_lower = 54, .int_upper = 59});

  return checks;
}

std::string witness_str(const Witness& witness) {
  if (const Natural* n = std::get_if<Natural>(&witness)) {
    return n->str();
  }
  return std::get<Rational>(witness).str();
}

}  // namespace

const std::vector<CertificateCheck>& builtin_friends_of_12_certificate() {
  static const std::vector<CertificateCheck> checks =
      build_friends_of_12_checks();
  return checks;
}

CertificateReport run_certificate(const std::vector<CertificateCheck>& checks) {
  CertificateReport report;
  report.checks.reserve(checks.size());
  for (const CertificateCheck& check : checks) {
    CheckResult result;
    result.check = check;
    result.witness = Natural(0);
    Eval eval;
    try {
      if (std::visit(KindOf{}, check.payload) != check.kind) {
        eval.require(false, "payload does not match kind " +
                                to_string(check.kind));
      } else {
        result.witness = std::visit(
            [&](const auto& claim) { return evaluate(claim, eval); },
            check.payload);
      }
    } catch (const std::exception& ex) {
      eval.require(false, std::string("evaluation error: ") + ex.what());
    }
    result.passed = eval.ok;
    result.notes = std::move(eval.notes);
    report.all_passed = report.all_passed && result.passed;
    report.checks.push_back(std::move(result));
  }
  return report;
}

std::string to_table(const CertificateReport& report) {
  std::size_t id_width = 2;
  std::size_t kind_width = 4;
  for (const CheckResult& result : report.checks) {
    id_width = std::max(id_width, result.check.id.size());
    kind_width = std::max(kind_width, to_string(result.check.kind).size());
  }
  std::ostringstream out;
  out << std::left << std::setw(8) << "verdict" << std::setw(id_width + 2)
      << "id" << std::setw(kind_width + 2) << "kind" << "witness" << "\n";
  std::size_t failed = 0;
  for (const CheckResult& result : report.checks) {
    out << std::left << std::setw(8) << (result.passed ? "pass" : "FAIL")
        << std::setw(id_width + 2) << result.check.id
        << std::setw(kind_width + 2) << to_string(result.check.kind)
        << witness_str(result.witness) << "\n";
    if (!result.passed) {
      ++failed;
      for (const std::string& note : result.notes) {
        out << "        note: " << note << "\n";
      }
    }
  }
  if (failed == 0) {
    out << "all " << report.checks.size() << " checks passed\n";
  } else {
    out << failed << " of " << report.checks.size() << " checks failed\n";
  }
  return out.str();
}

}  // namespace abundancy
