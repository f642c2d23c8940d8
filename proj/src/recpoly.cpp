#include "ddseq/recpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ddseq {

namespace {

void check_depth(const RecPoly& a, const RecPoly& b) {
  if (a.depth() != b.depth()) throw InvariantError("RecPoly depth mismatch");
}

}  // namespace

RecPoly RecPoly::constant(int depth, const Int& c) {
  RecPoly r(depth);
  if (depth == 0) {
    r.c_ = c;
  } else if (c != 0) {
    r.coef_.push_back(constant(depth - 1, c));
  }
  return r;
}

RecPoly RecPoly::from_terms(int depth, const std::vector<std::pair<std::vector<long>, Int>>& terms) {
  RecPoly r(depth);
  if (depth == 0) {
    for (const auto& [e, c] : terms) r.c_ += c;
    return r;
  }
  std::vector<std::vector<std::pair<std::vector<long>, Int>>> buckets;
  for (const auto& [e, c] : terms) {
    if (e.empty() || e[0] < 0) throw DomainError("RecPoly::from_terms: bad exponent vector");
    auto k = static_cast<std::size_t>(e[0]);
    if (buckets.size() <= k) buckets.resize(k + 1);
    buckets[k].emplace_back(std::vector<long>(e.begin() + 1, e.end()), c);
  }
  for (const auto& b : buckets) r.coef_.push_back(from_terms(depth - 1, b));
  r.normalize();
  return r;
}

void RecPoly::normalize() {
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

RecPoly operator+(const RecPoly& a, const RecPoly& b) {
  check_depth(a, b);
  if (a.depth_ == 0) return RecPoly::constant(0, a.c_ + b.c_);
  RecPoly r(a.depth_);
  const std::size_t n = std::max(a.coef_.size(), b.coef_.size());
  r.coef_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.coef_.size()) r.coef_.push_back(b.coef_[i]);
    else if (i >= b.coef_.size()) r.coef_.push_back(a.coef_[i]);
    else r.coef_.push_back(a.coef_[i] + b.coef_[i]);
  }
  r.normalize();
  return r;
}

RecPoly operator-(const RecPoly& a) {
  RecPoly r(a.depth_);
  if (a.depth_ == 0) {
    r.c_ = -a.c_;
    return r;
  }
  for (const auto& c : a.coef_) r.coef_.push_back(-c);
  return r;
}

RecPoly operator-(const RecPoly& a, const RecPoly& b) { return a + (-b); }

RecPoly operator*(const RecPoly& a, const RecPoly& b) {
  check_depth(a, b);
  if (a.depth_ == 0) return RecPoly::constant(0, a.c_ * b.c_);
  RecPoly r(a.depth_);
  if (a.coef_.empty() || b.coef_.empty()) return r;
  r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, RecPoly(a.depth_ - 1));
  for (std::size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coef_.size(); ++j) {
      if (b.coef_[j].is_zero()) continue;
      r.coef_[i + j] = r.coef_[i + j] + a.coef_[i] * b.coef_[j];
    }
  }
  r.normalize();
  return r;
}

bool operator==(const RecPoly& a, const RecPoly& b) {
  if (a.depth_ != b.depth_) return false;
  if (a.depth_ == 0) return a.c_ == b.c_;
  return a.coef_ == b.coef_;
}

RecPoly exact_div(const RecPoly& a, const RecPoly& b) {
  check_depth(a, b);
  if (b.is_zero()) throw InvariantError("RecPoly division by zero");
  if (a.depth() == 0) {
    if (!mpz_divisible_p(a.value().get_mpz_t(), b.value().get_mpz_t()))
      throw InvariantError("RecPoly exact_div: integer division is not exact");
    return RecPoly::constant(0, exact_div(a.value(), b.value()));
  }
  RecPoly rem = a, q(a.depth());
  const int db = b.degree();
  if (rem.degree() >= db) q.coeffs().assign(static_cast<std::size_t>(rem.degree() - db + 1), RecPoly(a.depth() - 1));
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    RecPoly c = exact_div(rem.coeffs().back(), b.coeffs().back());
    q.coeffs()[shift] = c;
    for (int i = 0; i <= db; ++i) rem.coeffs()[shift + i] = rem.coeffs()[shift + i] - c * b.coeffs()[i];
    rem.normalize();
  }
  if (!rem.is_zero()) throw InvariantError("RecPoly exact_div: non-zero remainder");
  q.normalize();
  return q;
}

RecPoly pow(const RecPoly& a, unsigned e) {
  RecPoly r = RecPoly::constant(a.depth(), 1), base = a;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

RecPoly RecPoly::reduce_cyclic(std::int64_t n, int levels) const {
  if (depth_ == 0 || levels <= 0) return *this;
  RecPoly r(depth_);
  const auto width = std::min<std::size_t>(coef_.size(), static_cast<std::size_t>(n));
  r.coef_.assign(width, RecPoly(depth_ - 1));
  for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i % n] = r.coef_[i % n] + coef_[i];
  for (auto& c : r.coef_) c = c.reduce_cyclic(n, levels - 1);
  r.normalize();
  return r;
}

Int RecPoly::eval(const std::vector<Int>& point) const {
  if (depth_ == 0) return c_;
  const Int& x = point.at(point.size() - static_cast<std::size_t>(depth_));
  Int acc = 0;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + it->eval(point);
  return acc;
}

std::vector<std::pair<std::vector<long>, Int>> RecPoly::terms() const {
  std::vector<std::pair<std::vector<long>, Int>> out;
  if (depth_ == 0) {
    if (c_ != 0) out.emplace_back(std::vector<long>{}, c_);
    return out;
  }
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    for (auto& [e, c] : coef_[i].terms()) {
      std::vector<long> ee{static_cast<long>(i)};
      ee.insert(ee.end(), e.begin(), e.end());
      out.emplace_back(std::move(ee), c);
    }
  }
  return out;
}

std::string RecPoly::str() const {
  if (depth_ == 0) return c_.get_str();
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coef_.size(); ++i) os << (i ? ", " : "") << coef_[i].str();
  os << "]";
  return os.str();
}

}  // namespace ddseq
