#pragma once

#include "abundancy/bounds.hpp"
#include "abundancy/certificate.hpp"
#include "abundancy/rational.hpp"
#include "abundancy/search.hpp"

#include <nlohmann/json.hpp>

namespace abundancy {

using ordered_json = nlohmann::ordered_json;

// {"num": "...", "den": "..."} with decimal-string values
ordered_json to_json(const Rational& r);

ordered_json to_json(const SearchReport& report);

// {"lower": {...}, "upper": {...}, "primes": ["...", ...]}
ordered_json to_json(const PrimeWindow& window);

// natural witnesses as decimal strings, rational ones as num/den objects
ordered_json to_json(const Witness& witness);

ordered_json to_json(const CertificateReport& report);

}  // namespace abundancy
