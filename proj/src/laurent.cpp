#include "ddseq/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ddseq {

LaurentPoly::LaurentPoly(int arity) : arity_(arity) {
  if (arity < 1) throw DomainError("Laurent polynomial arity must be positive");
}

LaurentPoly::LaurentPoly(int arity, const Terms& terms) : LaurentPoly(arity) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

void LaurentPoly::add_term(const ExpVec& e, const Int& c) {
  if (static_cast<int>(e.size()) != arity_) throw DomainError("exponent vector length differs from arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<ExpVec> LaurentPoly::support() const {
  std::vector<ExpVec> out;
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

ExpVec LaurentPoly::min_exponents() const {
  ExpVec m(arity_, 0);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < arity_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Int LaurentPoly::l1_norm() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += abs(c);
  return s;
}

Int LaurentPoly::value_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::pair<std::vector<Int>, std::int64_t> LaurentPoly::to_univariate() const {
  if (arity_ != 1) throw DomainError("to_univariate needs arity 1");
  const std::int64_t shift = min_exponents()[0];
  std::vector<Int> p;
  for (const auto& [e, c] : terms_) {
    auto k = static_cast<std::size_t>(e[0] - shift);
    if (p.size() <= k) p.resize(k + 1, Int(0));
    p[k] += c;
  }
  return {p, shift};
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.arity_ != b.arity_) throw DomainError("arity mismatch");
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.arity_ != b.arity_) throw DomainError("arity mismatch");
  LaurentPoly r(a.arity_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "X" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const bool neg = c < 0;
    Int mag = abs(c);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (mono.empty()) os << mag.get_str();
    else if (mag == 1) os << mono;
    else os << mag.get_str() << "*" << mono;
    first = false;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::vector<std::pair<std::map<int, std::int64_t>, Int>> run() {
    std::vector<std::pair<std::map<int, std::int64_t>, Int>> out;
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial");
    int sign = 1;
    if (peek() == '-') sign = -1, ++pos_;
    else if (peek() == '+') ++pos_;
    for (;;) {
      auto term = parse_term();
      if (sign < 0) term.second = -term.second;
      out.push_back(std::move(term));
      skip();
      if (pos_ >= s_.size()) break;
      if (peek() == '+') sign = 1;
      else if (peek() == '-') sign = -1;
      else fail("expected '+' or '-'");
      ++pos_;
    }
    return out;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d.push_back(s_[pos_++]);
    if (d.empty()) fail("expected digits");
    return d;
  }
  std::int64_t small_int(const std::string& d) {
    if (d.size() > 12) fail("exponent or index too large");
    return std::stoll(d);
  }

  std::pair<std::map<int, std::int64_t>, Int> parse_term() {
    std::pair<std::map<int, std::int64_t>, Int> t{{}, Int(1)};
    parse_factor(t);
    for (;;) {
      skip();
      if (peek() != '*') break;
      ++pos_;
      parse_factor(t);
    }
    return t;
  }

  void parse_factor(std::pair<std::map<int, std::int64_t>, Int>& t) {
    skip();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.second *= Int(digits());
      return;
    }
    if (c != 'X' && c != 'x') fail("expected a number or a variable X<i>");
    ++pos_;
    const auto idx = small_int(digits());
    if (idx < 1) fail("variable indices start at 1");
    std::int64_t e = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool paren = peek() == '(';
      if (paren) ++pos_, skip();
      int sg = 1;
      if (peek() == '-') sg = -1, ++pos_;
      else if (peek() == '+') ++pos_;
      e = sg * small_int(digits());
      if (paren) {
        skip();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
      }
    }
    t.first[static_cast<int>(idx)] += e;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, int arity) {
  auto terms = Parser(text).run();
  int used = 1;
  for (const auto& [m, c] : terms)
    for (const auto& [i, e] : m) used = std::max(used, i);
  if (arity == 0) arity = used;
  if (used > arity) throw ParseError("polynomial uses X" + std::to_string(used) + " but arity is " + std::to_string(arity));
  LaurentPoly p(arity);
  for (const auto& [m, c] : terms) {
    ExpVec e(arity, 0);
    for (const auto& [i, x] : m) e[i - 1] = x;
    p.add_term(e, c);
  }
  return p;
}

LaurentPoly monomial_substitution(const LaurentPoly& f, const std::vector<ExpVec>& images) {
  if (static_cast<int>(images.size()) != f.arity()) throw DomainError("substitution needs one image per variable");
  const std::size_t r = images[0].size();
  if (r == 0) throw DomainError("substitution images must have at least one variable");
  for (const auto& row : images)
    if (row.size() != r) throw DomainError("substitution images differ in length");
  LaurentPoly out(static_cast<int>(r));
  for (const auto& [e, c] : f.terms()) {
    ExpVec v(r, 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < r; ++j) v[j] += e[i] * images[i][j];
    out.add_term(v, c);
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ddseq
