#include "abundancy/json.hpp"

namespace abundancy {

ordered_json to_json(const Rational& r) {
  return ordered_json{{"num", r.num().str()}, {"den", r.den().str()}};
}

ordered_json to_json(const SearchReport& report) {
  ordered_json friends = ordered_json::array();
  for (const Natural& n : report.friends_found) {
    friends.push_back(n.str());
  }
  return ordered_json{
      {"target", report.target.str()},
      {"target_index", to_json(report.target_index)},
      {"bound", report.bound.str()},
      {"friends", friends},
      {"scanned", report.scanned.str()},
      {"elapsed_ms", report.elapsed.count()},
  };
}

ordered_json to_json(const PrimeWindow& window) {
  ordered_json primes = ordered_json::array();
  for (const Natural& p : window.primes) {
    primes.push_back(p.str());
  }
  return ordered_json{
      {"lower", to_json(window.lower)},
      {"upper", to_json(window.upper)},
      {"primes", std::move(primes)},
  };
}

ordered_json to_json(const Witness& witness) {
  if (const Natural* n = std::get_if<Natural>(&witness)) {
    return n->str();
  }
  return to_json(std::get<Rational>(witness));
}

ordered_json to_json(const CertificateReport& report) {
  ordered_json checks = ordered_json::array();
  for (const CheckResult& result : report.checks) {
    ordered_json row{
        {"id", result.check.id},
        {"kind", to_string(result.check.kind)},
        {"citation", result.check.citation},
        {"witness", to_json(result.witness)},
        {"verdict", result.passed ? "pass" : "fail"},
    };
    if (!result.notes.empty()) {
      row["notes"] = result.notes;
    }
    checks.push_back(std::move(row));
  }
  return ordered_json{
      {"checks", std::move(checks)},
      {"all_passed", report.all_passed},
  };
}

}  // namespace abundancy
