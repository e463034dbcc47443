#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "abundancy/certificate.hpp"
#include "abundancy/json.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace abundancy;

namespace {

std::string wstr(const Witness& witness) {
  if (const Natural* n = std::get_if<Natural>(&witness)) {
    return n->str();
  }
  return std::get<Rational>(witness).str();
}

// the full check list in proof order with the frozen exact witnesses
const std::vector<std::pair<std::string, std::string>> kGolden = {
    {"odd.m1", "3/2"},
    {"odd.k2", "35/16"},
    {"odd.k3.exclude-17", "595/256"},
    {"odd.k3.exclude-11-13", "143/64"},
    {"odd.k3.exclude-11", "11191/4725"},
    {"odd.k3.exclude-11.div", "13"},
    {"odd.k3.exclude-13", "39270397/16769025"},
    {"odd.k3.exclude-13.a1", "5915/2592"},
    {"odd.k3.exclude-13.a2", "121"},
    {"even.no-four", "7/3"},
    {"even.m1", "9/4"},
    {"even.pattern", "2"},
    {"even.b2", "13"},
    {"even.b4.div", "121"},
    {"even.b4.bound", "22/9"},
    {"even.q1-min", "1093/41"},
    {"even.k1", "261/112"},
    {"even.constants-upper", "1134/1093"},
    {"even.constants-lower", "28/27"},
    {"even.q1-candidates", "784/1"},
    {"even.b6", "1093"},
    {"even.b8", "9841"},
    {"even.b10", "88573"},
    {"even.q1-29", "3356047810/4292999"},
    {"even.q1-31", "760734728105/2727153301"},
    {"even.q1-37", "53409787/482267"},
    {"even.q1-41.window", "1093/14"},
    {"even.q1-41.mod4", "3"},
    {"even.q1-41.exclude-79", "11757327589/5036505723"},
    {"even.q1-41.exclude-83-f5", "36672148306381651/15709659095905587"},
    {"even.q1-41.exclude-83-f1", "15687/6724"},
    {"even.q1-43.window", "24046/335"},
    {"even.q1-43.f1", "2"},
    {"even.q1-43.bound", "18611317867/7970256873"},
    {"even.q1-47.window", "8744/139"},
    {"even.q1-47.parity", "3"},
    {"even.q1-53.window", "1093/20"},
};

}  // namespace

TEST_CASE("builtin certificate replays cleanly in proof order") {
  const auto& checks = builtin_friends_of_12_certificate();
  REQUIRE(checks.size() == kGolden.size());
  CertificateReport report = run_certificate(checks);
  CHECK(report.all_passed);
  REQUIRE(report.checks.size() == kGolden.size());
  for (std::size_t i = 0; i < kGolden.size(); ++i) {
    CAPTURE(kGolden[i].first);
    CHECK(report.checks[i].check.id == kGolden[i].first);
    CHECK(report.checks[i].passed);
    CHECK(report.checks[i].notes.empty());
    CHECK(wstr(report.checks[i].witness) == kGolden[i].second);
  }
}

TEST_CASE("every check carries a citation and a nonempty id") {
  for (const CertificateCheck& check : builtin_friends_of_12_certificate()) {
    CHECK_FALSE(check.id.empty());
    CHECK_FALSE(check.citation.empty());
  }
}

TEST_CASE("flipping any index inequality fails exactly that check") {
  const auto& builtin = builtin_friends_of_12_certificate();
  int mutated_count = 0;
  for (std::size_t i = 0; i < builtin.size(); ++i) {
    if (builtin[i].kind != CheckKind::IndexInequality) {
      continue;
    }
    ++mutated_count;
    std::vector<CertificateCheck> checks = builtin;
    auto& claim = std::get<IndexInequalityClaim>(checks[i].payload);
    claim.relation = claim.relation == Relation::Less ? Relation::Greater
                                                      : Relation::Less;
    CertificateReport report = run_certificate(checks);
    CHECK_FALSE(report.all_passed);
    for (std::size_t j = 0; j < report.checks.size(); ++j) {
      CAPTURE(report.checks[j].check.id);
      CHECK(report.checks[j].passed == (j != i));
    }
    // the witness is the computed quantity, verdict or not
    CHECK(wstr(report.checks[i].witness) == kGolden[i].second);
    CHECK_FALSE(report.checks[i].notes.empty());
  }
  CHECK(mutated_count == 17);
}

TEST_CASE("falsifying a pinned constant is caught") {
  std::vector<CertificateCheck> checks = builtin_friends_of_12_certificate();

  bool found = false;
  for (CertificateCheck& check : checks) {
    if (check.id == "even.q1-min") {
      auto& claim = std::get<MinPrimeClaim>(check.payload);
      claim.expected_prime = 31;
      found = true;
    }
  }
  REQUIRE(found);
  CertificateReport report = run_certificate(checks);
  CHECK_FALSE(report.all_passed);
  int failed = 0;
  for (const CheckResult& result : report.checks) {
    if (!result.passed) {
      ++failed;
      CHECK(result.check.id == "even.q1-min");
    }
  }
  CHECK(failed == 1);
}

TEST_CASE("falsifying the window constant is caught") {
  std::vector<CertificateCheck> checks = builtin_friends_of_12_certificate();
  for (CertificateCheck& check : checks) {
    if (check.id == "even.constants-upper") {
      auto& claim = std::get<IndexInequalityClaim>(check.payload);
      claim.bound = Rational(Natural(1134), Natural(1092));
    }
  }
  CertificateReport report = run_certificate(checks);
  CHECK_FALSE(report.all_passed);
  for (const CheckResult& result : report.checks) {
    CHECK(result.passed == (result.check.id != "even.constants-upper"));
  }
}

TEST_CASE("check results do not depend on order") {
  std::vector<CertificateCheck> reversed(
      builtin_friends_of_12_certificate().rbegin(),
      builtin_friends_of_12_certificate().rend());
  CertificateReport report = run_certificate(reversed);
  CHECK(report.all_passed);
  REQUIRE(report.checks.size() == kGolden.size());
  for (std::size_t i = 0; i < kGolden.size(); ++i) {
    std::size_t j = kGolden.size() - 1 - i;
    CHECK(report.checks[i].check.id == kGolden[j].first);
    CHECK(wstr(report.checks[i].witness) == kGolden[j].second);
  }
}

TEST_CASE("a payload of the wrong kind fails with a diagnostic") {
  CertificateCheck bad;
  bad.id = "malformed";
  bad.kind = CheckKind::MinPrime;
  bad.citation = "intentionally inconsistent";
  bad.payload = DivisibilityClaim{Natural(13), {Natural(3), 2},
                                  Natural(13)};
  CertificateReport report = run_certificate({bad});
  REQUIRE(report.checks.size() == 1);
  CHECK_FALSE(report.all_passed);
  CHECK_FALSE(report.checks[0].passed);
  REQUIRE_FALSE(report.checks[0].notes.empty());
  CHECK(report.checks[0].notes[0].find("payload does not match kind") !=
        std::string::npos);
}

TEST_CASE("an evaluation error is reported, not thrown") {
  CertificateCheck bad;
  bad.id = "throws";
  bad.kind = CheckKind::IndexInequality;
  bad.citation = "sup over a composite support";
  bad.payload = IndexInequalityClaim{.sup_primes = {Natural(4)}};
  CertificateReport report = run_certificate({bad});
  REQUIRE(report.checks.size() == 1);
  CHECK_FALSE(report.checks[0].passed);
  REQUIRE_FALSE(report.checks[0].notes.empty());
  CHECK(report.checks[0].notes[0].find("evaluation error") !=
        std::string::npos);

  // the run never aborts: a later check still passes
  CertificateReport both =
      run_certificate({bad, builtin_friends_of_12_certificate()[0]});
  REQUIRE(both.checks.size() == 2);
  CHECK_FALSE(both.checks[0].passed);
  CHECK(both.checks[1].passed);
}

TEST_CASE("an empty certificate passes vacuously") {
  CertificateReport report = run_certificate({});
  CHECK(report.all_passed);
  CHECK(report.checks.empty());
}

TEST_CASE("certificate json is canonical and complete") {
  CertificateReport report =
      run_certificate(builtin_friends_of_12_certificate());
  ordered_json j = to_json(report);
  CHECK(j["all_passed"] == true);
  REQUIRE(j["checks"].size() == kGolden.size());

  std::vector<std::string> keys;
  for (const auto& item : j["checks"][0].items()) {
    keys.push_back(item.key());
  }
  CHECK(keys == std::vector<std::string>{"id", "kind", "citation", "witness",
                                         "verdict"});
  CHECK(j["checks"][0]["verdict"] == "pass");
  CHECK(j["checks"][0]["witness"]["num"] == "3");
  CHECK(j["checks"][0]["witness"]["den"] == "2");
  CHECK(j["checks"][5]["witness"] == "13");

  std::string text = j.dump(2);
  CHECK(ordered_json::parse(text).dump(2) == text);
}

TEST_CASE("failure notes appear in the json") {
  std::vector<CertificateCheck> checks = builtin_friends_of_12_certificate();
  auto& claim = std::get<IndexInequalityClaim>(checks[0].payload);
  claim.relation = Relation::Greater;
  ordered_json j = to_json(run_certificate(checks));
  CHECK(j["all_passed"] == false);
  CHECK(j["checks"][0]["verdict"] == "fail");
  REQUIRE(j["checks"][0].contains("notes"));
  CHECK(j["checks"][0]["notes"].size() >= 1);
  CHECK_FALSE(j["checks"][1].contains("notes"));
}

TEST_CASE("the docs table audits every check") {
  std::ifstream docs(std::string(ABUNDANCY_DOCS_DIR) +
                     "/certificate-checks.md");
  REQUIRE(docs.good());
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(docs, line)) {
    if (line.rfind("| ", 0) != 0 || line.find("| ---") == 0 ||
        line.rfind("| id", 0) == 0) {
      continue;
    }
    std::istringstream cells(line);
    std::string skip, id, kind;
    std::getline(cells, skip, '|');
    std::getline(cells, id, '|');
    std::getline(cells, kind, '|');
    auto trim = [](std::string s) {
      std::size_t a = s.find_first_not_of(" `");
      std::size_t b = s.find_last_not_of(" `");
      return a == std::string::npos ? std::string()
                                    : s.substr(a, b - a + 1);
    };
    rows.push_back({trim(id), trim(kind)});
  }
  const auto& checks = builtin_friends_of_12_certificate();
  REQUIRE(rows.size() == checks.size());
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CHECK(rows[i].first == checks[i].id);
    CHECK(rows[i].second == to_string(checks[i].kind));
  }
}
