#include "bdeform/weyl.hpp"

#include <algorithm>
#include <vector>

#include "bdeform/errors.hpp"

namespace bdeform {

WeylOp WeylOp::scalar(const Coeff& c, int working_degree) {
  WeylOp r(working_degree);
  r.add_term(PMonomial(), PMonomial(), c);
  return r;
}

WeylOp WeylOp::p(int i) {
  WeylOp r;
  if (i > 0) r.add_term(PMonomial::power(i), PMonomial(), 1);
  return r;
}

WeylOp WeylOp::pstar(int i) {
  WeylOp r;
  if (i > 0) r.add_term(PMonomial(), PMonomial::power(i), 1);
  return r;
}

WeylOp WeylOp::term(const PMonomial& create, const PMonomial& annihilate, const Coeff& c, int working_degree) {
  WeylOp r(working_degree);
  r.add_term(create, annihilate, c);
  return r;
}

void WeylOp::add_term(const PMonomial& create, const PMonomial& annihilate, const Coeff& c) {
  if (c.is_zero() || annihilate.degree() > wd_) return;
  auto [it, inserted] = terms_.try_emplace(Key{create, annihilate}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coeff WeylOp::coeff(const PMonomial& create, const PMonomial& annihilate) const {
  auto it = terms_.find(Key{create, annihilate});
  return it == terms_.end() ? Coeff() : it->second;
}

int WeylOp::jump() const {
  int j = 0;
  for (const auto& [k, c] : terms_) j = std::max(j, k.create.degree() - k.annihilate.degree());
  return j;
}

std::optional<int> WeylOp::homogeneous_degree() const {
  std::optional<int> g;
  for (const auto& [k, c] : terms_) {
    int d = k.create.degree() - k.annihilate.degree();
    if (g && *g != d) return std::nullopt;
    g = d;
  }
  return g;
}

bool WeylOp::is_homogeneous(int g) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [g](const auto& t) { return t.first.create.degree() - t.first.annihilate.degree() == g; });
}

WeylOp WeylOp::truncated(int d) const {
  if (d > wd_) {
    throw DegreeBudgetError("cannot extend an operator known to degree " + std::to_string(wd_) + " to degree " +
                            std::to_string(d));
  }
  if (d == wd_) return *this;
  WeylOp r(d);
  for (const auto& [k, c] : terms_) {
    if (k.annihilate.degree() <= d) r.terms_.emplace_hint(r.terms_.end(), k, c);
  }
  return r;
}

WeylOp WeylOp::operator-() const {
  WeylOp r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  if (o.wd_ < wd_) *this = truncated(o.wd_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  if (o.wd_ < wd_) *this = truncated(o.wd_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

WeylOp operator+(const WeylOp& a, const WeylOp& c) {
  WeylOp r = a;
  r += c;
  return r;
}

WeylOp operator-(const WeylOp& a, const WeylOp& c) {
  WeylOp r = a;
  r -= c;
  return r;
}

WeylOp WeylOp::scaled(const Coeff& c) const {
  WeylOp r(wd_);
  if (c.is_zero()) return r;
  for (const auto& [k, x] : terms_) r.add_term(k, x * c);
  return r;
}

WeylOp WeylOp::map_coeffs(const std::function<Coeff(const Coeff&)>& f) const {
  WeylOp r(wd_);
  for (const auto& [k, x] : terms_) r.add_term(k, f(x));
  return r;
}

std::string term_to_string(const WeylOp::Key& k) {
  std::string s;
  for (auto [i, e] : k.create.pairs()) {
    if (!s.empty()) s += ' ';
    s += "p" + std::to_string(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  for (auto [i, e] : k.annihilate.pairs()) {
    if (!s.empty()) s += ' ';
    s += "p" + std::to_string(i) + "*";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string WeylOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    std::string cs = c.to_string();
    bool compound = cs.find_first_of("+ /") != std::string::npos;
    if (compound) cs = "(" + cs + ")";
    bool unit = k.create.is_one() && k.annihilate.is_one();
    if (unit) {
      s += cs;
    } else if (c.is_one()) {
      s += term_to_string(k);
    } else {
      s += cs + " " + term_to_string(k);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const WeylOp& op) { return os << op.to_string(); }

// ---------------------------------------------------------------------------
// Action and products

namespace {

// prod over i of i^{beta_i} * gamma_i! / (gamma_i - beta_i)!, for beta | gamma.
Rational derivative_weight(const PMonomial& beta, const PMonomial& gamma) {
  Rational w(1);
  for (std::size_t k = 0; k < beta.num_vars(); ++k) {
    long long i = beta.index_at(k);
    int b = beta.exponent_at(k);
    int g = gamma.exponent(static_cast<int>(i));
    for (int t = 0; t < b; ++t) w *= Rational(i * (g - t));
  }
  return w;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

struct Contraction {
  PMonomial k;  // contracted multi-exponent
  Rational weight;
};

// Wick contractions of (p*)^beta against p^alpha: sum over k <= min(beta, alpha) of
// prod C(beta_i, k_i) alpha_i!/(alpha_i-k_i)! i^{k_i}.
std::vector<Contraction> contractions(const PMonomial& beta, const PMonomial& alpha) {
  std::vector<std::pair<int, int>> limits;  // (index, max k) with weights computed below
  for (std::size_t x = 0; x < beta.num_vars(); ++x) {
    int i = beta.index_at(x);
    int a = alpha.exponent(i);
    if (a > 0) limits.emplace_back(i, std::min(beta.exponent_at(x), a));
  }
  std::vector<Contraction> out;
  out.push_back({PMonomial(), Rational(1)});
  for (auto [i, kmax] : limits) {
    int b = beta.exponent(i);
    int a = alpha.exponent(i);
    std::vector<Contraction> next;
    next.reserve(out.size() * (kmax + 1));
    for (const auto& c : out) {
      Rational falling(1);
      long long ipow = 1;
      for (int k = 0; k <= kmax; ++k) {
        if (k > 0) {
          falling *= Rational(a - k + 1);
          ipow *= i;
        }
        Rational w = c.weight * falling * Rational(binomial(b, k) * ipow);
        next.push_back({k == 0 ? c.k : c.k * PMonomial::power(i, k), w});
      }
    }
    out = std::move(next);
  }
  return out;
}

struct TermRef {
  const WeylOp::Key* key;
  const Coeff* c;
};

std::vector<TermRef> by_annihilation_degree(const WeylOp& op) {
  std::vector<TermRef> v;
  v.reserve(op.size());
  for (const auto& [k, c] : op.terms()) v.push_back({&k, &c});
  std::stable_sort(v.begin(), v.end(),
                   [](const TermRef& x, const TermRef& y) { return x.key->annihilate.degree() < y.key->annihilate.degree(); });
  return v;
}

// Accumulates sign * (o1 o2) truncated at d into out; with contracted_only the
// k = 0 terms (identical in o1 o2 and o2 o1) are skipped.
void accumulate_product(const WeylOp& o1, const WeylOp& o2, int d, bool contracted_only, int sign, WeylOp& out) {
  auto left = by_annihilation_degree(o1);
  for (const auto& [k2, c2] : o2.terms()) {
    int b2 = k2.annihilate.degree();
    if (b2 > d) continue;
    int bound = d - b2 + k2.create.degree();
    for (const auto& t1 : left) {
      const PMonomial& b1 = t1.key->annihilate;
      if (b1.degree() > bound) break;
      if (contracted_only && (b1.is_one() || k2.create.is_one())) continue;
      Coeff c = (*t1.c) * c2;
      if (sign < 0) c = -c;
      for (const auto& con : contractions(b1, k2.create)) {
        if (contracted_only && con.k.is_one()) continue;
        PMonomial ann = exact_quotient(b1, con.k) * k2.annihilate;
        if (ann.degree() > d) continue;
        PMonomial cre = t1.key->create * exact_quotient(k2.create, con.k);
        out.add_term(cre, ann, con.weight.is_one() ? c : c.scaled(con.weight));
      }
    }
  }
}

std::string budget_message(const char* what, int need, int have) {
  return std::string(what) + " needs working degree " + std::to_string(need) + " but the operator is known only to " +
         std::to_string(have);
}

}  // namespace

PPoly apply(const WeylOp& op, const PPoly& f) {
  int df = f.degree();
  if (df > op.working_degree()) throw DegreeBudgetError(budget_message("apply", df, op.working_degree()));
  PPoly r;
  for (const auto& [k, c] : op.terms()) {
    for (const auto& [g, cg] : f.terms()) {
      if (!g.divisible_by(k.annihilate)) continue;
      Rational w = derivative_weight(k.annihilate, g);
      r.add_term(k.create * exact_quotient(g, k.annihilate), (c * cg).scaled(w));
    }
  }
  return r;
}

int compose_budget(const WeylOp& o1, const WeylOp& o2) {
  if (o2.bounded()) return o2.working_degree();
  if (!o1.bounded()) return WeylOp::kUnbounded;
  return o1.working_degree() - o2.jump();
}

int commutator_budget(const WeylOp& a, const WeylOp& c) {
  return std::min(compose_budget(a, c), compose_budget(c, a));
}

namespace {

void check_budget(const WeylOp& o1, const WeylOp& o2, int d) {
  if (d < 0) throw DegreeBudgetError("negative working degree " + std::to_string(d));
  if (d > o2.working_degree()) throw DegreeBudgetError(budget_message("composition", d, o2.working_degree()));
  if (o2.bounded() || o1.bounded()) {
    long long need = static_cast<long long>(d) + o2.jump();
    if (need > o1.working_degree()) {
      throw DegreeBudgetError(budget_message("composition", static_cast<int>(need), o1.working_degree()));
    }
  }
}

}  // namespace

WeylOp compose_at(const WeylOp& o1, const WeylOp& o2, int d) {
  check_budget(o1, o2, d);
  WeylOp out(d);
  accumulate_product(o1, o2, d, false, 1, out);
  return out;
}

WeylOp compose(const WeylOp& o1, const WeylOp& o2) { return compose_at(o1, o2, compose_budget(o1, o2)); }

WeylOp commutator_at(const WeylOp& a, const WeylOp& c, int d) {
  check_budget(a, c, d);
  check_budget(c, a, d);
  WeylOp out(d);
  accumulate_product(a, c, d, true, 1, out);
  accumulate_product(c, a, d, true, -1, out);
  return out;
}

WeylOp commutator(const WeylOp& a, const WeylOp& c) { return commutator_at(a, c, commutator_budget(a, c)); }

bool op_equal(const WeylOp& a, const WeylOp& c, int d) { return !first_difference(a, c, d).has_value(); }

std::optional<std::string> first_difference(const WeylOp& a, const WeylOp& c, int d) {
  WeylOp x = a.truncated(d);
  WeylOp y = c.truncated(d);
  auto ix = x.terms().begin();
  auto iy = y.terms().begin();
  auto describe = [](const WeylOp::Key& k, const Coeff& l, const Coeff& r) {
    return "term " + term_to_string(k) + ": " + l.to_string() + " vs " + r.to_string();
  };
  while (ix != x.terms().end() || iy != y.terms().end()) {
    if (iy == y.terms().end() || (ix != x.terms().end() && ix->first < iy->first)) {
      return describe(ix->first, ix->second, Coeff());
    }
    if (ix == x.terms().end() || iy->first < ix->first) return describe(iy->first, Coeff(), iy->second);
    if (ix->second != iy->second) return describe(ix->first, ix->second, iy->second);
    ++ix;
    ++iy;
  }
  return std::nullopt;
}

}  // namespace bdeform
