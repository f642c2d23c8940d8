#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "ddseq/arith.hpp"

namespace ddseq {

/// sign * prod p^e * remainder, with remainder >= 1 left unfactored.
struct FactoredProduct {
  int sign = 1;  // -1, 0 or 1
  std::map<Int, unsigned> factors;
  Int remainder = 1;
  /// False when a probable-prime test, not a proof, admitted some factor.
  bool certified = true;

  static FactoredProduct factor(const Int& value, unsigned long trial_bound = 1'000'000);

  Int value() const;
  /// Absolute value rendering, e.g. "2^6 * 3"; "1" for units, "0" for zero.
  std::string render() const;
  nlohmann::json to_json() const;
  static FactoredProduct from_json(const nlohmann::json& j);

  friend bool operator==(const FactoredProduct&, const FactoredProduct&) = default;
};

}  // namespace ddseq
