#include "bdeform/jack.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "bdeform/errors.hpp"

namespace bdeform {

// ---------------------------------------------------------------------------
// Partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw InvalidArgument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("bad partition '" + std::string(text) + "'");
    }
    parts.push_back(v);
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::multiplicity(int i) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), i)); }

Partition Partition::transposed() const {
  std::vector<int> t;
  for (int c = 1; !parts_.empty() && c <= parts_.front(); ++c) {
    t.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [c](int p) { return p >= c; })));
  }
  return Partition(std::move(t));
}

PMonomial Partition::to_monomial() const {
  std::vector<std::pair<int, int>> pairs;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (!pairs.empty() && pairs.back().first == *it) {
      ++pairs.back().second;
    } else {
      pairs.emplace_back(*it, 1);
    }
  }
  return PMonomial::from_pairs(pairs);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw InvalidArgument("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominated_by(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return false;
  int a = 0;
  int c = 0;
  const auto& m = mu.parts();
  const auto& l = lambda.parts();
  for (std::size_t i = 0; i < std::max(m.size(), l.size()); ++i) {
    a += i < m.size() ? m[i] : 0;
    c += i < l.size() ? l[i] : 0;
    if (a > c) return false;
  }
  return true;
}

Rational z_factor(const Partition& lambda) {
  Rational z = 1;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int m = static_cast<int>(j - i);
    for (int k = 1; k <= m; ++k) z *= Rational(parts[i]) * Rational(k);
    i = j;
  }
  return z;
}

UPoly alpha_inner(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw InvalidArgument("scalar product of partitions of different sizes");
  if (lambda != mu) return {};
  return UPoly::monomial(static_cast<unsigned>(lambda.length()), z_factor(lambda));
}

// ---------------------------------------------------------------------------
// Jack polynomials

namespace {

using Expansion = std::map<Partition, RatFunc>;

// Coefficient of m_mu in p_nu: ways to distribute the parts of nu into the
// parts of mu so that each part of mu is filled exactly.
Rational p_to_m(const Partition& nu, const Partition& mu) {
  std::vector<int> room = mu.parts();
  const auto& parts = nu.parts();
  std::function<long long(std::size_t)> rec = [&](std::size_t k) -> long long {
    if (k == parts.size()) {
      return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; }) ? 1 : 0;
    }
    long long total = 0;
    for (auto& r : room) {
      if (r < parts[k]) continue;
      r -= parts[k];
      total += rec(k + 1);
      r += parts[k];
    }
    return total;
  };
  return Rational(rec(0));
}

// Rows: m_mu for mu in `basis` order, expressed over p_nu (columns in the same order).
std::vector<std::vector<Rational>> m_in_p(const std::vector<Partition>& basis) {
  const std::size_t n = basis.size();
  // Left block: a[i][j] = [m_i] p_j, the transpose of the p -> m matrix.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = p_to_m(basis[j], basis[i]);
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error("power-sum to monomial matrix is singular");
    std::swap(a[piv], a[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  // Right block is the inverse transpose: [p_nu] m_mu = a[nu][n + mu].
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = 0; nu < n; ++nu) out[mu][nu] = a[nu][n + mu];
  }
  return out;
}

RatFunc inner(const Expansion& f, const Expansion& g) {
  RatFunc acc;
  for (const auto& [nu, c] : f) {
    auto it = g.find(nu);
    if (it == g.end()) continue;
    acc += c * it->second * RatFunc(alpha_inner(nu, nu));
  }
  return acc;
}

void axpy(Expansion& y, const RatFunc& a, const Expansion& x) {
  for (const auto& [nu, c] : x) {
    auto& slot = y[nu];
    slot += a * c;
    if (slot.is_zero()) y.erase(nu);
  }
}

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

// Polynomial in u/q variables with coefficients in Q(alpha).
using AlphaCoeff = std::map<Monomial, RatFunc>;

AlphaCoeff alpha_mul(const AlphaCoeff& a, const AlphaCoeff& c) {
  AlphaCoeff out;
  for (const auto& [m1, x] : a) {
    for (const auto& [m2, y] : c) {
      auto& slot = out[m1 * m2];
      slot += x * y;
      if (slot.is_zero()) out.erase(m1 * m2);
    }
  }
  return out;
}

void alpha_add(AlphaCoeff& a, const AlphaCoeff& c) {
  for (const auto& [m, x] : c) {
    auto& slot = a[m];
    slot += x;
    if (slot.is_zero()) a.erase(m);
  }
}

Coeff alpha_to_coeff(const RatFunc& f) {
  const UPoly& den = f.den();
  if (!den.is_monomial()) {
    throw DenominatorError("denominator " + den.to_string("alpha") + " is not a power of alpha = 1 + b");
  }
  const int e = den.degree();
  // num(alpha) with alpha = 1 + b, as a polynomial in b.
  const UPoly in_b = f.num().shifted(1).scaled(Rational(1) / den.leading());
  Coeff out;
  for (int k = 0; k <= in_b.degree(); ++k) {
    if (!in_b.coeff(k).is_zero()) out += Coeff::monomial(Monomial::of(Var::b, static_cast<unsigned>(k)), in_b.coeff(k));
  }
  return e == 0 ? out : out * Coeff::inv_one_plus_b(e);
}

Coeff alpha_to_coeff(const AlphaCoeff& a) {
  Coeff out;
  for (const auto& [m, f] : a) out += alpha_to_coeff(f) * Coeff::monomial(m);
  return out;
}

UPoly box_content(int r, int c, ContentConvention conv) {
  if (conv == ContentConvention::standard) return UPoly(std::vector<Rational>{Rational(-(r - 1)), Rational(c - 1)});
  return UPoly(std::vector<Rational>{Rational(-(c - 1)), Rational(r - 1)});
}

AlphaCoeff content_alpha(const Partition& lambda, int k, ContentConvention conv) {
  AlphaCoeff out{{Monomial(), RatFunc(1)}};
  const auto& parts = lambda.parts();
  for (int r = 1; r <= lambda.length(); ++r) {
    for (int c = 1; c <= parts[static_cast<std::size_t>(r - 1)]; ++c) {
      const UPoly content = box_content(r, c, conv);
      for (int l = 1; l <= k; ++l) {
        AlphaCoeff factor{{Monomial::of(static_cast<Var>(l)), RatFunc(1)}};
        if (!content.is_zero()) factor[Monomial()] = RatFunc(content);
        out = alpha_mul(out, factor);
      }
    }
  }
  return out;
}

// J_lambda evaluated at the model's vertex weights.
AlphaCoeff jack_at_weights(const JackPoly& j, const Model& model) {
  AlphaCoeff out;
  if (model.tag() != ModelTag::bip_le3) {
    out[Monomial()] = j.coeff(ones(j.lambda.size()));
    if (out[Monomial()].is_zero()) out.clear();
    return out;
  }
  static constexpr Var qs[] = {Var::q1, Var::q2, Var::q3};
  for (const auto& [nu, c] : j.p_expansion) {
    if (nu.parts().front() > 3) continue;
    Monomial m;
    for (int part : nu.parts()) m = m * Monomial::of(qs[part - 1]);
    alpha_add(out, AlphaCoeff{{m, c}});
  }
  return out;
}

}  // namespace

RatFunc JackPoly::coeff(const Partition& mu) const {
  auto it = p_expansion.find(mu);
  return it == p_expansion.end() ? RatFunc() : it->second;
}

PPoly JackPoly::to_ppoly() const {
  PPoly out;
  for (const auto& [nu, c] : p_expansion) out.add_term(nu.to_monomial(), alpha_to_coeff(c));
  return out;
}

std::string JackPoly::to_string() const {
  std::string s;
  for (auto it = p_expansion.rbegin(); it != p_expansion.rend(); ++it) {
    if (!s.empty()) s += " + ";
    const std::string c = it->second.to_string("alpha");
    const std::string mono = it->first.length() ? it->first.to_monomial().to_string() : "1";
    s += c == "1" ? mono : "(" + c + ")*" + mono;
  }
  return s.empty() ? "0" : s;
}

std::vector<JackPoly> jack_basis(int n, int bound) {
  if (n < 0) throw InvalidArgument("negative partition size");
  if (n > bound) throw BoundExceeded("Jack polynomials are limited to |lambda| <= " + std::to_string(bound));
  std::vector<Partition> basis = partitions(n);
  std::reverse(basis.begin(), basis.end());
  const auto m = m_in_p(basis);

  std::vector<Expansion> ortho;
  std::vector<RatFunc> norms;
  std::vector<JackPoly> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Expansion mono;
    for (std::size_t nu = 0; nu < basis.size(); ++nu) {
      if (!m[i][nu].is_zero()) mono[basis[nu]] = RatFunc(UPoly(m[i][nu]));
    }
    Expansion p = mono;
    for (std::size_t k = 0; k < ortho.size(); ++k) {
      RatFunc proj = inner(mono, ortho[k]) / norms[k];
      if (!proj.is_zero()) axpy(p, -proj, ortho[k]);
    }
    ortho.push_back(p);
    norms.push_back(inner(p, p));
    const RatFunc lead = p.count(ones(n)) ? p.at(ones(n)) : RatFunc();
    if (lead.is_zero()) throw Error("Jack polynomial " + basis[i].to_string() + " has no p_1^n term");
    JackPoly j{basis[i], {}};
    for (auto& [nu, c] : p) j.p_expansion.emplace(nu, c / lead);
    out.push_back(std::move(j));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

JackPoly jack(const Partition& lambda, int bound) {
  for (auto& j : jack_basis(lambda.size(), bound)) {
    if (j.lambda == lambda) return std::move(j);
  }
  throw Error("partition " + lambda.to_string() + " missing from its basis");
}

RatFunc alpha_inner(const JackPoly& f, const JackPoly& g) { return inner(f.p_expansion, g.p_expansion); }

std::map<Partition, RatFunc> monomial_expansion(const JackPoly& j) {
  std::map<Partition, RatFunc> out;
  for (const auto& mu : partitions(j.lambda.size())) {
    RatFunc acc;
    for (const auto& [nu, c] : j.p_expansion) {
      const Rational k = p_to_m(nu, mu);
      if (!k.is_zero()) acc += c * RatFunc(UPoly(k));
    }
    if (!acc.is_zero()) out.emplace(mu, acc);
  }
  return out;
}

std::string convention_name(ContentConvention c) {
  return c == ContentConvention::standard ? "standard" : "transposed";
}

Coeff content_product(const Partition& lambda, int k, ContentConvention conv) {
  return alpha_to_coeff(content_alpha(lambda, k, conv));
}

TauSeries tau_jack(const Model& model, int order, ContentConvention conv) {
  if (order < 0) throw InvalidArgument("order must be nonnegative");
  TauSeries tau{model, {PPoly(Coeff(1))}};
  for (int n = 1; n <= order; ++n) {
    std::map<Partition, AlphaCoeff> acc;
    for (const JackPoly& j : jack_basis(n)) {
      AlphaCoeff weight = alpha_mul(jack_at_weights(j, model), content_alpha(j.lambda, model.k(), conv));
      if (weight.empty()) continue;
      const RatFunc inv_norm = RatFunc(1) / alpha_inner(j, j);
      weight = alpha_mul(weight, AlphaCoeff{{Monomial(), inv_norm}});
      for (const auto& [nu, c] : j.p_expansion) alpha_add(acc[nu], alpha_mul(weight, AlphaCoeff{{Monomial(), c}}));
    }
    PPoly slice;
    for (const auto& [nu, a] : acc) {
      if (!a.empty()) slice.add_term(nu.to_monomial(), model.specialize(alpha_to_coeff(a)));
    }
    tau.coeffs.push_back(std::move(slice));
  }
  return tau;
}

std::optional<ContentConvention> calibrate_content(const Model& model) {
  const TauSeries reference = tau_evolve(model, 2);
  for (auto conv : {ContentConvention::standard, ContentConvention::transposed}) {
    try {
      if (tau_jack(model, 2, conv).coeffs == reference.coeffs) return conv;
    } catch (const DenominatorError&) {
    }
  }
  return std::nullopt;
}

}  // namespace bdeform
