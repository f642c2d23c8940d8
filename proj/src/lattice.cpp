#include "ddseq/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace ddseq {

namespace {

using IntRow = std::vector<Int>;

struct ExpVecHash {
  std::size_t operator()(const ExpVec& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Row HNF of a full-rank lattice in Z^N given by arbitrary generating rows.
std::vector<IntRow> hermite_rows(std::vector<IntRow> rows, int n) {
  std::size_t r = 0;
  for (int c = 0; c < n; ++c) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[r][c].get_mpz_t(),
                 rows[i][c].get_mpz_t());
      Int ag = rows[r][c] / g, bg = rows[i][c] / g;
      for (int k = c; k < n; ++k) {
        Int x = rows[r][k], y = rows[i][k];
        rows[r][k] = s * x + t * y;
        rows[i][k] = bg * x - ag * y;
      }
    }
    if (r >= rows.size() || rows[r][c] == 0) throw InvariantError("hermite_rows: lattice is not full rank");
    if (rows[r][c] < 0)
      for (int k = c; k < n; ++k) rows[r][k] = -rows[r][k];
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0)
        for (int k = c; k < n; ++k) rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  rows.resize(static_cast<std::size_t>(n));
  return rows;
}

// M * (dual lattice) for a full-rank lattice with upper triangular basis B.
// Returns the rows M * column_i(B^{-1}); they must be integral.
std::vector<IntRow> dual_scaled(const std::vector<IntRow>& b, const Int& modulus) {
  const int n = static_cast<int>(b.size());
  // inverse of upper triangular matrix by back substitution, column by column
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (int col = 0; col < n; ++col) {
    for (int i = n - 1; i >= 0; --i) {
      Rat acc = (i == col) ? Rat(1) : Rat(0);
      for (int k = i + 1; k < n; ++k) acc -= Rat(b[i][k]) * inv[k][col];
      inv[i][col] = acc / Rat(b[i][i]);
    }
  }
  std::vector<IntRow> out(n, IntRow(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Rat v = inv[k][i] * Rat(modulus);
      v.canonicalize();
      if (v.get_den() != 1) throw InvariantError("dual_scaled: modulus does not clear the dual lattice");
      out[i][k] = v.get_num();
    }
  }
  return out;
}

std::vector<IntRow> scaled_rows(const FiniteSubgroup& g, std::int64_t factor) {
  std::vector<IntRow> out;
  for (const auto& row : g.hnf()) {
    IntRow r;
    for (auto x : row) r.emplace_back(Int(static_cast<long>(x)) * Int(static_cast<long>(factor)));
    out.push_back(std::move(r));
  }
  return out;
}

bool in_hnf_lattice(const std::vector<IntRow>& h, IntRow v) {
  const std::size_t n = v.size();
  for (std::size_t c = 0; c < n; ++c) {
    if (v[c] == 0) continue;
    if (!mpz_divisible_p(v[c].get_mpz_t(), h[c][c].get_mpz_t())) return false;
    Int q = v[c] / h[c][c];
    for (std::size_t k = c; k < n; ++k) v[k] -= q * h[c][k];
  }
  return true;
}

std::vector<ExpVec> to_exp_rows(const std::vector<IntRow>& rows) {
  std::vector<ExpVec> out;
  for (const auto& r : rows) {
    ExpVec v;
    for (const auto& x : r) v.push_back(x.get_si());
    out.push_back(std::move(v));
  }
  return out;
}

void check_same_arity(const FiniteSubgroup& a, const FiniteSubgroup& b) {
  if (a.arity() != b.arity()) throw DomainError("subgroups have different arity");
}

}  // namespace

// ---------------------------------------------------------------- TorsionPoint

TorsionPoint::TorsionPoint(std::int64_t modulus, ExpVec exponents) : m_(modulus), a_(std::move(exponents)) {
  if (m_ < 1) throw DomainError("torsion point modulus must be positive");
  std::int64_t g = m_;
  for (auto& x : a_) {
    x = mod(x, m_);
    g = std::gcd(g, x);
  }
  m_ /= g;
  for (auto& x : a_) x /= g;
}

TorsionPoint TorsionPoint::identity(int arity) { return TorsionPoint(1, ExpVec(arity, 0)); }

TorsionPoint TorsionPoint::pow(std::int64_t k) const {
  ExpVec b(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i)
    b[i] = static_cast<std::int64_t>(static_cast<__int128>(a_[i]) * mod(k, m_) % m_);
  return TorsionPoint(m_, std::move(b));
}

std::string TorsionPoint::str() const {
  std::ostringstream os;
  os << m_ << ":(";
  for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
  os << ")";
  return os.str();
}

// -------------------------------------------------------------- FiniteSubgroup

FiniteSubgroup FiniteSubgroup::canonicalize(int arity, std::int64_t modulus,
                                            const std::vector<ExpVec>& gens) {
  if (arity < 1) throw DomainError("arity must be positive");
  if (modulus < 1) throw DomainError("subgroup modulus must be positive");
  std::int64_t e = 1;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != arity) throw DomainError("generator length does not match arity");
    for (auto x : g) e = std::lcm(e, modulus / std::gcd(modulus, mod(x, modulus)));
  }
  const std::int64_t shrink = modulus / e;
  std::vector<IntRow> rows;
  for (const auto& g : gens) {
    IntRow r;
    for (auto x : g) r.emplace_back(static_cast<long>(mod(x, modulus) / shrink));
    rows.push_back(std::move(r));
  }
  for (int i = 0; i < arity; ++i) {
    IntRow r(arity, Int(0));
    r[i] = static_cast<long>(e);
    rows.push_back(std::move(r));
  }
  FiniteSubgroup out;
  out.arity_ = arity;
  out.exponent_ = e;
  out.hnf_ = to_exp_rows(hermite_rows(std::move(rows), arity));

  Int det = 1;
  for (int i = 0; i < arity; ++i) det *= static_cast<long>(out.hnf_[i][i]);
  Int full = ipow(Int(static_cast<long>(e)), static_cast<unsigned long>(arity));
  Int ord = full / det;
  if (!ord.fits_ulong_p()) throw ResourceCapError("subgroup order exceeds 64 bits");
  out.order_ = ord.get_ui();
  ensure(smith_order(out) == out.order_, "Smith-form order disagrees with Hermite determinant");
  return out;
}

FiniteSubgroup FiniteSubgroup::full(int arity, std::int64_t n) {
  std::vector<ExpVec> gens;
  for (int i = 0; i < arity; ++i) {
    ExpVec v(arity, 0);
    v[i] = 1;
    gens.push_back(std::move(v));
  }
  return canonicalize(arity, n, gens);
}

FiniteSubgroup FiniteSubgroup::trivial(int arity) { return canonicalize(arity, 1, {}); }

FiniteSubgroup FiniteSubgroup::cyclic(const TorsionPoint& xi) {
  return canonicalize(xi.arity(), xi.order(), {xi.exponents()});
}

bool FiniteSubgroup::is_full() const {
  Int full = ipow(Int(static_cast<long>(exponent_)), static_cast<unsigned long>(arity_));
  return full == Int(static_cast<unsigned long>(order_));
}

std::vector<ExpVec> FiniteSubgroup::generator_rows() const {
  std::vector<ExpVec> out;
  for (const auto& row : hnf_) {
    ExpVec r;
    bool nonzero = false;
    for (auto x : row) {
      r.push_back(mod(x, exponent_));
      nonzero = nonzero || r.back() != 0;
    }
    if (nonzero) out.push_back(std::move(r));
  }
  return out;
}

std::string FiniteSubgroup::serialize() const {
  std::ostringstream os;
  os << "N=" << arity_ << ";m=" << exponent_ << ";gens=";
  for (const auto& r : generator_rows()) {
    os << "(";
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ")";
  }
  return os.str();
}

FiniteSubgroup FiniteSubgroup::parse(std::string_view literal) {
  std::string s;
  for (char ch : literal)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  long arity = -1, modulus = -1;
  std::vector<ExpVec> gens;
  bool have_gens = false;
  std::size_t pos = 0;
  auto parse_int = [&](const std::string& t) -> long {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(t, &used);
    } catch (const std::exception&) {
      throw ParseError("group literal: bad integer '" + t + "'");
    }
    if (used != t.size()) throw ParseError("group literal: bad integer '" + t + "'");
    return v;
  };
  while (pos < s.size()) {
    std::size_t end = s.find(';', pos);
    if (end == std::string::npos) end = s.size();
    std::string field = s.substr(pos, end - pos);
    pos = end + 1;
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("group literal: expected key=value in '" + field + "'");
    std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    if (key == "N") {
      arity = parse_int(value);
    } else if (key == "m") {
      modulus = parse_int(value);
    } else if (key == "gens") {
      have_gens = true;
      std::size_t p = 0;
      while (p < value.size()) {
        if (value[p] != '(') throw ParseError("group literal: expected '(' in gens");
        auto close = value.find(')', p);
        if (close == std::string::npos) throw ParseError("group literal: unbalanced parentheses");
        std::string inner = value.substr(p + 1, close - p - 1);
        ExpVec v;
        std::stringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(parse_int(tok));
        gens.push_back(std::move(v));
        p = close + 1;
      }
    } else {
      throw ParseError("group literal: unknown key '" + key + "'");
    }
  }
  if (arity < 1 || modulus < 1 || !have_gens)
    throw ParseError("group literal must define N>=1, m>=1 and gens");
  for (const auto& g : gens)
    if (static_cast<long>(g.size()) != arity) throw ParseError("group literal: generator length differs from N");
  return canonicalize(static_cast<int>(arity), modulus, gens);
}

// ---------------------------------------------------------------- Smith form

std::vector<Int> smith_invariants(std::vector<std::vector<Int>> a) {
  std::vector<Int> out;
  if (a.empty()) return out;
  const std::size_t m = a.size(), n = a[0].size();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
      if (pi == m) return out;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
    }
    out.push_back(abs(a[t][t]));
  }
  return out;
}

std::uint64_t smith_order(const FiniteSubgroup& group) {
  const int n = group.arity();
  const std::int64_t e = group.exponent();
  std::vector<IntRow> rows;
  for (const auto& g : group.generator_rows()) {
    IntRow r;
    for (auto x : g) r.emplace_back(static_cast<long>(x));
    rows.push_back(std::move(r));
  }
  for (int i = 0; i < n; ++i) {
    IntRow r(n, Int(0));
    r[i] = static_cast<long>(e);
    rows.push_back(std::move(r));
  }
  Int index = 1;
  for (const auto& d : smith_invariants(std::move(rows))) index *= d;
  Int ord = ipow(Int(static_cast<long>(e)), static_cast<unsigned long>(n)) / index;
  if (!ord.fits_ulong_p()) throw ResourceCapError("subgroup order exceeds 64 bits");
  return ord.get_ui();
}

// ----------------------------------------------------------------- elements

std::vector<ExpVec> element_vectors(const FiniteSubgroup& group, const Limits& limits) {
  if (group.order() > limits.max_elements)
    throw ResourceCapError("subgroup of order " + std::to_string(group.order()) +
                           " exceeds the element enumeration cap");
  const int n = group.arity();
  const std::int64_t e = group.exponent();
  const auto& h = group.hnf();
  std::vector<std::int64_t> radix(n), c(n, 0);
  for (int i = 0; i < n; ++i) radix[i] = e / h[i][i];
  std::vector<ExpVec> out;
  out.reserve(group.order());
  for (;;) {
    ExpVec v(n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = i; k < n; ++k) v[k] = (v[k] + c[i] * h[i][k]) % e;
    out.push_back(std::move(v));
    int i = n - 1;
    while (i >= 0 && ++c[i] == radix[i]) c[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<TorsionPoint> elements(const FiniteSubgroup& group, const Limits& limits) {
  std::vector<TorsionPoint> out;
  for (auto& v : element_vectors(group, limits)) out.emplace_back(group.exponent(), std::move(v));
  return out;
}

// ------------------------------------------------------------ lattice ops

bool contains(const FiniteSubgroup& big, const FiniteSubgroup& small) {
  check_same_arity(big, small);
  const std::int64_t m = std::lcm(big.exponent(), small.exponent());
  if (small.exponent() > 1 && m != big.exponent()) return false;  // exponent must divide
  auto h = scaled_rows(big, m / big.exponent());
  for (auto& row : scaled_rows(small, m / small.exponent()))
    if (!in_hnf_lattice(h, row)) return false;
  return true;
}

bool contains_point(const FiniteSubgroup& group, const TorsionPoint& xi) {
  if (group.arity() != xi.arity()) throw DomainError("point and subgroup have different arity");
  if (group.exponent() % xi.order() != 0) return false;
  const std::int64_t f = group.exponent() / xi.order();
  IntRow v;
  for (auto x : xi.exponents()) v.emplace_back(static_cast<long>(x * f));
  return in_hnf_lattice(scaled_rows(group, 1), v);
}

FiniteSubgroup join(const FiniteSubgroup& a, const FiniteSubgroup& b) {
  check_same_arity(a, b);
  const std::int64_t m = std::lcm(a.exponent(), b.exponent());
  std::vector<ExpVec> gens;
  for (auto& r : a.generator_rows()) {
    for (auto& x : r) x *= m / a.exponent();
    gens.push_back(std::move(r));
  }
  for (auto& r : b.generator_rows()) {
    for (auto& x : r) x *= m / b.exponent();
    gens.push_back(std::move(r));
  }
  return FiniteSubgroup::canonicalize(a.arity(), m, gens);
}

FiniteSubgroup intersection(const FiniteSubgroup& a, const FiniteSubgroup& b) {
  check_same_arity(a, b);
  const int n = a.arity();
  const std::int64_t m = std::lcm(a.exponent(), b.exponent());
  const Int mm(static_cast<long>(m));
  auto ann_a = dual_scaled(scaled_rows(a, m / a.exponent()), mm);
  auto ann_b = dual_scaled(scaled_rows(b, m / b.exponent()), mm);
  std::vector<IntRow> rows = ann_a;
  rows.insert(rows.end(), ann_b.begin(), ann_b.end());
  for (int i = 0; i < n; ++i) {
    IntRow r(n, Int(0));
    r[i] = mm;
    rows.push_back(std::move(r));
  }
  auto meet = dual_scaled(hermite_rows(std::move(rows), n), mm);
  return FiniteSubgroup::canonicalize(n, m, to_exp_rows(meet));
}

// -------------------------------------------------------------- enumeration

std::uint64_t nu(int arity, std::uint64_t n) {
  if (arity < 1 || n < 1) throw DomainError("nu: arity and n must be positive");
  if (arity == 1) return 1;
  std::uint64_t total = 0;
  for (auto d : divisors(static_cast<std::int64_t>(n))) {
    std::uint64_t w = 1;
    for (int k = 0; k < arity - 1; ++k) w *= static_cast<std::uint64_t>(d);
    total += w * nu(arity - 1, n / static_cast<std::uint64_t>(d));
  }
  return total;
}

std::vector<FiniteSubgroup> subgroups_of_order(int arity, std::int64_t n, const Limits& limits) {
  if (n < 1) throw DomainError("subgroups_of_order: n must be positive");
  const std::uint64_t expected = nu(arity, static_cast<std::uint64_t>(n));
  if (expected > limits.max_subgroups)
    throw ResourceCapError("nu(" + std::to_string(arity) + "," + std::to_string(n) + ") = " +
                           std::to_string(expected) + " exceeds the subgroup listing cap");
  std::vector<FiniteSubgroup> out;
  out.reserve(expected);
  const Int nn(static_cast<long>(n));
  // Upper triangular HNF bases of index-n sublattices: diagonal d_1..d_N with
  // product n, entries above pivot j ranging over [0, d_j).
  std::vector<std::int64_t> diag(arity);
  auto visit_diag = [&]() {
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < arity; ++j)
      for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::vector<std::int64_t> vals(slots.size(), 0);
    for (;;) {
      std::vector<IntRow> b(arity, IntRow(arity, Int(0)));
      for (int i = 0; i < arity; ++i) b[i][i] = static_cast<long>(diag[i]);
      for (std::size_t s = 0; s < slots.size(); ++s)
        b[slots[s].first][slots[s].second] = static_cast<long>(vals[s]);
      auto g = FiniteSubgroup::canonicalize(arity, n, to_exp_rows(dual_scaled(b, nn)));
      ensure(g.order() == static_cast<std::uint64_t>(n), "dual of an index-n lattice has order n");
      out.push_back(std::move(g));
      std::size_t s = 0;
      while (s < slots.size() && ++vals[s] == diag[slots[s].second]) vals[s++] = 0;
      if (s == slots.size()) break;
    }
  };
  auto recurse = [&](auto&& self, int pos, std::int64_t rest) -> void {
    if (pos == arity - 1) {
      diag[pos] = rest;
      visit_diag();
      return;
    }
    for (auto d : divisors(rest)) {
      diag[pos] = d;
      self(self, pos + 1, rest / d);
    }
  };
  recurse(recurse, 0, n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  ensure(out.size() == expected, "subgroup enumeration count differs from nu");
  return out;
}

std::vector<std::pair<FiniteSubgroup, TorsionPoint>> cyclic_subgroups_of_order(
    int arity, std::int64_t n, const Limits& limits) {
  if (n < 1) throw DomainError("cyclic_subgroups_of_order: n must be positive");
  Int space = ipow(Int(static_cast<long>(n)), static_cast<unsigned long>(arity));
  if (space > Int(static_cast<unsigned long>(limits.max_elements)))
    throw ResourceCapError("cyclic subgroup scan of order " + std::to_string(n) + " exceeds the element cap");
  std::vector<std::pair<FiniteSubgroup, TorsionPoint>> out;
  const auto units = units_mod(n);
  ExpVec a(arity, 0);
  for (;;) {
    std::int64_t g = n;
    for (auto x : a) g = std::gcd(g, x);
    if (g == 1) {
      bool minimal = true;
      ExpVec b(arity);
      for (auto k : units) {
        for (int i = 0; i < arity; ++i) b[i] = a[i] * k % n;
        if (b < a) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        TorsionPoint xi(n, a);
        out.emplace_back(FiniteSubgroup::cyclic(xi), xi);
      }
    }
    int i = arity - 1;
    while (i >= 0 && ++a[i] == n) a[i--] = 0;
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<std::pair<FiniteSubgroup, TorsionPoint>> cyclic_subgroups_of(const FiniteSubgroup& group,
                                                                        const Limits& limits) {
  const std::int64_t e = group.exponent();
  std::unordered_set<ExpVec, ExpVecHash> seen;
  std::vector<std::pair<FiniteSubgroup, TorsionPoint>> out;
  for (const auto& v : element_vectors(group, limits)) {
    if (seen.count(v)) continue;
    TorsionPoint xi(e, v);
    for (auto k : units_mod(xi.order())) {
      ExpVec w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] * (k == 0 ? 1 : k) % e;
      seen.insert(std::move(w));
    }
    out.emplace_back(FiniteSubgroup::cyclic(xi), xi);
    if (out.size() > limits.max_subgroups) throw ResourceCapError("cyclic subgroup listing exceeds cap");
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<FiniteSubgroup> subgroups_of(const FiniteSubgroup& group, const Limits& limits) {
  auto cyc = cyclic_subgroups_of(group, limits);
  std::set<FiniteSubgroup> found{FiniteSubgroup::trivial(group.arity())};
  std::deque<FiniteSubgroup> queue(found.begin(), found.end());
  while (!queue.empty()) {
    FiniteSubgroup s = queue.front();
    queue.pop_front();
    for (const auto& [c, gen] : cyc) {
      if (contains(s, c)) continue;
      auto [it, inserted] = found.insert(join(s, c));
      if (inserted) {
        if (found.size() > limits.max_subgroups) throw ResourceCapError("subgroup listing exceeds cap");
        queue.push_back(*it);
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<FiniteSubgroup> maximal_subgroups(const FiniteSubgroup& group, const Limits& limits) {
  std::vector<FiniteSubgroup> out;
  if (group.order() == 1) return out;
  if (group.is_cyclic()) {
    auto xi = a_generator(group);
    for (auto q : prime_factors(group.exponent())) out.push_back(FiniteSubgroup::cyclic(xi.pow(q)));
  } else {
    auto primes = prime_factors(static_cast<std::int64_t>(group.order()));
    for (auto& s : subgroups_of(group, limits))
      for (auto q : primes)
        if (s.order() * static_cast<std::uint64_t>(q) == group.order()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TorsionPoint a_generator(const FiniteSubgroup& group) {
  if (group.order() == 1) return TorsionPoint::identity(group.arity());
  if (!group.is_cyclic()) throw DomainError("subgroup is not cyclic");
  // Combining the canonical rows with coefficient 1 rarely has full order;
  // scan elements in canonical order instead.
  for (const auto& v : element_vectors(group, Limits{group.order(), 0})) {
    TorsionPoint xi(group.exponent(), v);
    if (xi.order() == group.exponent()) return xi;
  }
  throw InvariantError("cyclic subgroup without a generator");
}

std::vector<TorsionPoint> generators(const FiniteSubgroup& group) {
  if (!group.is_cyclic()) throw DomainError("generators: subgroup is not cyclic");
  auto xi = a_generator(group);
  std::vector<TorsionPoint> out;
  for (auto k : units_mod(xi.order())) out.push_back(xi.pow(k == 0 ? 1 : k));
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ Moebius

namespace {

// mu(x, upper) for all x in an interval sorted by ascending order; the last
// element is the top of the interval.
std::vector<int> mobius_on_interval(const std::vector<FiniteSubgroup>& interval) {
  const std::size_t s = interval.size();
  std::vector<int> mu(s, 0);
  mu[s - 1] = 1;
  for (std::size_t i = s - 1; i-- > 0;) {
    int acc = 0;
    for (std::size_t j = i + 1; j < s; ++j)
      if (mu[j] != 0 && interval[j].order() > interval[i].order() && contains(interval[j], interval[i]))
        acc += mu[j];
    mu[i] = -acc;
  }
  return mu;
}

}  // namespace

std::vector<std::pair<FiniteSubgroup, int>> mobius_below(const FiniteSubgroup& upper, const Limits& limits) {
  auto subs = subgroups_of(upper, limits);
  auto mu = mobius_on_interval(subs);
  std::vector<std::pair<FiniteSubgroup, int>> out;
  for (std::size_t i = 0; i < subs.size(); ++i) out.emplace_back(subs[i], mu[i]);
  return out;
}

int mobius(const FiniteSubgroup& lower, const FiniteSubgroup& upper, const Limits& limits) {
  if (!contains(upper, lower)) throw DomainError("mobius: lower subgroup is not contained in upper");
  std::vector<FiniteSubgroup> interval;
  for (auto& s : subgroups_of(upper, limits))
    if (contains(s, lower)) interval.push_back(std::move(s));
  return mobius_on_interval(interval).front();
}

}  // namespace ddseq
