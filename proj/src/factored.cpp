#include "ddseq/factored.hpp"

#include <mutex>
#include <sstream>

namespace ddseq {

namespace {

const std::vector<std::int64_t>& small_primes(unsigned long bound) {
  static std::mutex mu;
  static unsigned long cached_bound = 0;
  static std::vector<std::int64_t> primes;
  std::lock_guard<std::mutex> lock(mu);
  if (cached_bound < bound) {
    primes = primes_up_to(static_cast<std::int64_t>(bound));
    cached_bound = bound;
  }
  return primes;
}

}  // namespace

FactoredProduct FactoredProduct::factor(const Int& value, unsigned long trial_bound) {
  FactoredProduct out;
  out.sign = sgn(value);
  if (value == 0) {
    out.remainder = 0;
    return out;
  }
  Int n = abs(value);
  const auto& primes = small_primes(trial_bound);
  for (auto p : primes) {
    if (static_cast<unsigned long>(p) > trial_bound) break;
    if (n == 1) break;
    const unsigned long up = static_cast<unsigned long>(p);
    if (!mpz_divisible_ui_p(n.get_mpz_t(), up)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), up)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), up);
      ++e;
    }
    out.factors[Int(up)] = e;
  }
  if (n > 1) {
    Int bound = Int(trial_bound) * Int(trial_bound);
    if (n < bound) {
      out.factors[n] += 1;  // no factor up to the trial bound: prime
    } else if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
      out.factors[n] += 1;
      out.certified = false;
    } else {
      out.remainder = n;
    }
  }
  return out;
}

Int FactoredProduct::value() const {
  if (sign == 0) return 0;
  Int v = remainder;
  for (const auto& [p, e] : factors) v *= ipow(p, e);
  return sign < 0 ? Int(-v) : v;
}

std::string FactoredProduct::render() const {
  if (sign == 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors) {
    os << (first ? "" : " * ") << p.get_str();
    if (e > 1) os << "^" << e;
    first = false;
  }
  if (remainder != 1) {
    os << (first ? "" : " * ") << "[" << remainder.get_str() << "]";
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

nlohmann::json FactoredProduct::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& [p, e] : factors) f.push_back({p.get_str(), e});
  return {{"sign", sign}, {"factors", f}, {"remainder", remainder.get_str()}, {"certified", certified}};
}

FactoredProduct FactoredProduct::from_json(const nlohmann::json& j) {
  FactoredProduct out;
  out.sign = j.at("sign").get<int>();
  for (const auto& pe : j.at("factors")) out.factors[Int(pe.at(0).get<std::string>())] = pe.at(1).get<unsigned>();
  out.remainder = Int(j.at("remainder").get<std::string>());
  out.certified = j.value("certified", true);
  return out;
}

}  // namespace ddseq
