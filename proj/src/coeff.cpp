#include "bdeform/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bdeform/errors.hpp"

namespace bdeform {

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (int k = 0; k < kNumVars; ++k) {
    if (kVarNames[k] == name) return static_cast<Var>(k);
  }
  if (name == "u") return Var::u1;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial

namespace {
constexpr std::uint64_t kHighBits = 0x8080808080808080ull;
}

Monomial Monomial::of(Var v, unsigned e) { return Monomial().with_exponent(v, e); }

Monomial Monomial::with_exponent(Var v, unsigned e) const {
  if (e >= 128) throw BoundExceeded("coefficient exponent overflow");
  std::uint64_t mask = std::uint64_t{0xff} << shift(v);
  return Monomial((bits_ & ~mask) | (std::uint64_t{e} << shift(v)));
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (int k = 0; k < kNumVars; ++k) d += exponent(static_cast<Var>(k));
  return d;
}

Monomial operator*(Monomial a, Monomial c) {
  // Every stored exponent is < 128, so byte sums never carry.
  std::uint64_t s = a.bits_ + c.bits_;
  if (s & kHighBits) throw BoundExceeded("coefficient exponent overflow");
  return Monomial(s);
}

// ---------------------------------------------------------------------------
// Coeff

namespace {

using Terms = std::vector<Coeff::Term>;

bool divisible_by_one_plus_b(const Terms& num) {
  // p(b) is divisible by (1+b) iff p(-1) vanishes identically in the other variables.
  std::map<Monomial, Rational> at_minus_one;
  for (const auto& t : num) {
    Rational c = (t.mono.exponent(Var::b) % 2 == 0) ? t.c : -t.c;
    at_minus_one[t.mono.without_b()] += c;
  }
  for (const auto& [m, c] : at_minus_one) {
    if (!c.is_zero()) return false;
  }
  return true;
}

// Exact division by (1+b); caller guarantees divisibility.
Terms divide_by_one_plus_b(const Terms& num) {
  std::map<Monomial, std::map<unsigned, Rational>> groups;
  for (const auto& t : num) groups[t.mono.without_b()][t.mono.exponent(Var::b)] = t.c;
  Terms out;
  for (const auto& [rest, coeffs] : groups) {
    unsigned deg = coeffs.rbegin()->first;
    // synthetic division by (b - (-1)), top-down
    Rational carry;
    for (unsigned k = deg; k >= 1; --k) {
      auto it = coeffs.find(k);
      Rational a = it == coeffs.end() ? Rational() : it->second;
      Rational q = a - carry;  // q_{k-1} = a_k - q_k
      carry = q;
      if (!q.is_zero()) out.push_back({rest.with_exponent(Var::b, k - 1), q});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.mono > y.mono; });
  return out;
}

Terms multiply_terms(const Terms& a, const Terms& c) {
  Terms out;
  out.reserve(a.size() * c.size());
  for (const auto& x : a) {
    for (const auto& y : c) out.push_back({x.mono * y.mono, x.c * y.c});
  }
  return out;
}

Terms one_plus_b_power(int e) {
  Terms p{{Monomial(), 1}};
  Terms f{{Monomial::of(Var::b), 1}, {Monomial(), 1}};
  for (int k = 0; k < e; ++k) p = multiply_terms(p, f);
  return p;
}

}  // namespace

Coeff::Coeff(long long n) {
  if (n != 0) num_.push_back({Monomial(), Rational(n)});
}

Coeff::Coeff(Rational r) {
  if (!r.is_zero()) num_.push_back({Monomial(), std::move(r)});
}

Coeff::Coeff(std::vector<Term> num, int denom_pow) : num_(normalize_terms(std::move(num))), denom_pow_(denom_pow) {
  reduce();
}

Coeff Coeff::var(Var v) { return monomial(Monomial::of(v)); }

Coeff Coeff::monomial(Monomial m, Rational c) {
  Coeff r;
  if (!c.is_zero()) r.num_.push_back({m, std::move(c)});
  return r;
}

Coeff Coeff::inv_one_plus_b(int e) {
  Coeff r(1);
  r.denom_pow_ = e;
  return r;
}

Coeff Coeff::one_plus_b() { return Coeff(one_plus_b_power(1), 0); }

std::vector<Coeff::Term> Coeff::normalize_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  return out;
}

void Coeff::reduce() {
  if (num_.empty()) {
    denom_pow_ = 0;
    return;
  }
  while (denom_pow_ > 0 && divisible_by_one_plus_b(num_)) {
    num_ = divide_by_one_plus_b(num_);
    --denom_pow_;
  }
}

Coeff Coeff::canonicalized() const { return Coeff(num_, denom_pow_); }

bool Coeff::is_one() const { return denom_pow_ == 0 && num_.size() == 1 && num_[0].mono.is_one() && num_[0].c.is_one(); }

bool Coeff::is_constant() const {
  return num_.empty() || (denom_pow_ == 0 && num_.size() == 1 && num_[0].mono.is_one());
}

std::optional<Rational> Coeff::constant_value() const {
  if (num_.empty()) return Rational();
  if (is_constant()) return num_[0].c;
  return std::nullopt;
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  for (auto& t : r.num_) t.c = -t.c;
  return r;
}

Coeff operator+(const Coeff& a, const Coeff& c) {
  if (a.is_zero()) return c;
  if (c.is_zero()) return a;
  if (a.denom_pow_ == c.denom_pow_) {
    Terms sum;
    sum.reserve(a.num_.size() + c.num_.size());
    // both sorted descending: merge
    std::size_t i = 0, j = 0;
    while (i < a.num_.size() || j < c.num_.size()) {
      if (j == c.num_.size() || (i < a.num_.size() && a.num_[i].mono > c.num_[j].mono)) {
        sum.push_back(a.num_[i++]);
      } else if (i == a.num_.size() || c.num_[j].mono > a.num_[i].mono) {
        sum.push_back(c.num_[j++]);
      } else {
        Rational s = a.num_[i].c + c.num_[j].c;
        if (!s.is_zero()) sum.push_back({a.num_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    Coeff r;
    r.num_ = std::move(sum);
    r.denom_pow_ = a.denom_pow_;
    r.reduce();
    return r;
  }
  const Coeff& lo = a.denom_pow_ < c.denom_pow_ ? a : c;
  const Coeff& hi = a.denom_pow_ < c.denom_pow_ ? c : a;
  Terms lifted = multiply_terms(lo.num_, one_plus_b_power(hi.denom_pow_ - lo.denom_pow_));
  lifted.insert(lifted.end(), hi.num_.begin(), hi.num_.end());
  return Coeff(std::move(lifted), hi.denom_pow_);
}

Coeff operator-(const Coeff& a, const Coeff& c) { return a + (-c); }

Coeff operator*(const Coeff& a, const Coeff& c) {
  if (a.is_zero() || c.is_zero()) return Coeff();
  if (a.num_.size() == 1 && a.num_[0].mono.is_one() && a.denom_pow_ == 0) return c.scaled(a.num_[0].c);
  if (c.num_.size() == 1 && c.num_[0].mono.is_one() && c.denom_pow_ == 0) return a.scaled(c.num_[0].c);
  Coeff r(multiply_terms(a.num_, c.num_), a.denom_pow_ + c.denom_pow_);
  return r;
}

Coeff Coeff::scaled(const Rational& r) const {
  if (r.is_zero()) return Coeff();
  Coeff out = *this;
  for (auto& t : out.num_) t.c *= r;
  return out;
}

Coeff Coeff::pow(unsigned e) const {
  Coeff r(1);
  for (unsigned k = 0; k < e; ++k) r *= *this;
  return r;
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero coefficient");
  Terms n = num_;
  int k = 0;
  while (divisible_by_one_plus_b(n)) {
    n = divide_by_one_plus_b(n);
    ++k;
  }
  if (n.size() != 1 || !n[0].mono.is_one()) {
    throw DenominatorError("division by '" + to_string() + "' leaves a denominator other than a power of (1+b)");
  }
  Rational inv = Rational(1) / n[0].c;
  if (denom_pow_ >= k) return Coeff(one_plus_b_power(denom_pow_ - k), 0).scaled(inv);
  Coeff r(inv);
  r.denom_pow_ = k - denom_pow_;
  return r;
}

Coeff Coeff::substitute(Var v, const Rational& value) const {
  return substitute(std::map<Var, Rational>{{v, value}});
}

Coeff Coeff::substitute(const std::map<Var, Rational>& values) const {
  if (values.empty() || is_zero()) return *this;
  Terms out;
  out.reserve(num_.size());
  for (const auto& t : num_) {
    Monomial m = t.mono;
    Rational c = t.c;
    for (const auto& [v, x] : values) {
      unsigned e = m.exponent(v);
      if (e == 0) continue;
      c *= x.pow(e);
      m = m.with_exponent(v, 0);
    }
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  }
  int e = denom_pow_;
  if (auto it = values.find(Var::b); it != values.end() && e > 0) {
    Rational base = Rational(1) + it->second;
    if (base.is_zero()) throw DivisionByZero("substituting b = -1 into a (1+b) denominator");
    Rational f = Rational(1) / base.pow(static_cast<unsigned>(e));
    for (auto& t : out) t.c *= f;
    e = 0;
  }
  return Coeff(std::move(out), e);
}

Rational Coeff::eval(const std::map<Var, Rational>& assignment) const {
  Rational total;
  for (const auto& t : num_) {
    Rational c = t.c;
    for (int k = 0; k < kNumVars; ++k) {
      Var v = static_cast<Var>(k);
      unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        throw InvalidArgument("eval: variable '" + std::string(var_name(v)) + "' is not assigned");
      }
      c *= it->second.pow(e);
    }
    total += c;
  }
  if (denom_pow_ > 0) {
    auto it = assignment.find(Var::b);
    if (it == assignment.end()) throw InvalidArgument("eval: variable 'b' is not assigned");
    Rational base = Rational(1) + it->second;
    if (base.is_zero()) throw DivisionByZero("evaluating a (1+b) denominator at b = -1");
    total = total / base.pow(static_cast<unsigned>(denom_pow_));
  }
  return total;
}

namespace {

std::string monomial_string(Monomial m) {
  std::string s;
  for (int k = 0; k < kNumVars; ++k) {
    unsigned e = m.exponent(static_cast<Var>(k));
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += kVarNames[k];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string term_string(const Coeff::Term& t) {
  if (t.mono.is_one()) return t.c.to_string();
  std::string m = monomial_string(t.mono);
  if (t.c.is_one()) return m;
  if (t.c == Rational(-1)) return "-" + m;
  return t.c.to_string() + "*" + m;
}

}  // namespace

std::string Coeff::to_string() const {
  if (num_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    std::string t = term_string(num_[k]);
    if (k == 0) {
      s = t;
    } else if (t[0] == '-') {
      s += " - " + t.substr(1);
    } else {
      s += " + " + t;
    }
  }
  if (denom_pow_ == 0) return s;
  if (num_.size() > 1) s = "(" + s + ")";
  return s + "/(1+b)^" + std::to_string(denom_pow_);
}

std::ostream& operator<<(std::ostream& os, const Coeff& c) { return os << c.to_string(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class CoeffParser {
 public:
  explicit CoeffParser(std::string_view s) : s_(s) {}

  Coeff parse_all() {
    Coeff v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("coefficient parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Coeff expr() {
    Coeff v = term();
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Coeff term() {
    Coeff v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        v = v * unary().inverse();
      } else {
        return v;
      }
    }
  }

  Coeff unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Coeff power() {
    Coeff base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      return base.pow(e);
    }
    return base;
  }

  Coeff primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Coeff v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Coeff(Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto name = s_.substr(start, pos_ - start);
      auto v = var_from_name(name);
      if (!v) fail("unknown variable '" + std::string(name) + "'");
      return Coeff::var(*v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Coeff Coeff::parse(std::string_view text) { return CoeffParser(text).parse_all(); }

Coeff elementary_symmetric(int k, int n) {
  if (n < 0 || n > 3) throw InvalidArgument("elementary_symmetric: at most three u variables");
  if (k < 0 || k > n) return Coeff();
  static constexpr Var us[] = {Var::u1, Var::u2, Var::u3};
  Coeff total;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    Monomial m;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) m = m * Monomial::of(us[v]);
    }
    total += Coeff::monomial(m);
  }
  return total;
}

}  // namespace bdeform
