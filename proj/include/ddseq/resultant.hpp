#pragma once

#include <utility>
#include <vector>

#include "ddseq/recpoly.hpp"

namespace ddseq {

namespace detail {

template <class R>
void trim_r(std::vector<R>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class R>
std::vector<R> pseudo_rem_r(std::vector<R> a, const std::vector<R>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  int e = static_cast<int>(a.size()) - 1 - db + 1;
  const R& lb = b.back();
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    R lead = a.back();
    for (auto& c : a) c = R(c * lb);
    for (int i = 0; i <= db; ++i) a[shift + i] = R(a[shift + i] - lead * b[i]);
    trim_r(a);
    --e;
  }
  if (e > 0) {
    R s = pow(lb, static_cast<unsigned>(e));
    for (auto& c : a) c = R(c * s);
  }
  return a;
}

}  // namespace detail

/// Res(A, B) by the subresultant PRS, over any exact integral domain R with
/// exact division. Both inputs are trimmed coefficient vectors, low to high;
/// `one` is the multiplicative identity of R.
template <class R>
R resultant(std::vector<R> a, std::vector<R> b, const R& one) {
  detail::trim_r(a);
  detail::trim_r(b);
  R zero = R(one - one);
  if (a.empty() || b.empty()) return zero;
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  R s = one;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if ((da & 1) && (db & 1)) s = R(-s);
  }
  if (db == 0) return R(s * pow(b[0], static_cast<unsigned>(da)));
  R g = one, h = one;
  for (;;) {
    const int delta = da - db;
    if ((da & 1) && (db & 1)) s = R(-s);
    std::vector<R> r = detail::pseudo_rem_r(a, b);
    a = std::move(b);
    da = db;
    if (r.empty()) return zero;
    R div = R(g * pow(h, static_cast<unsigned>(delta)));
    for (auto& c : r) c = exact_div(c, div);
    b = std::move(r);
    db = static_cast<int>(b.size()) - 1;
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_div(R(pow(g, static_cast<unsigned>(delta))), R(pow(h, static_cast<unsigned>(delta - 1))));
    }
    if (db == 0) break;
  }
  // h <- h^(1 - deg A) * lc(B)^deg A
  R last = pow(b.back(), static_cast<unsigned>(da));
  if (da > 1) last = exact_div(last, R(pow(h, static_cast<unsigned>(da - 1))));
  return R(s * last);
}

}  // namespace ddseq
