#pragma once

// Reference implementations used by the tests. They work on explicit
// exponent maps and share no code with the operator engine.

#include <map>

#include "bdeform/weyl.hpp"

namespace oracle {

using bdeform::Coeff;
using bdeform::PMonomial;
using bdeform::PPoly;
using bdeform::Rational;
using bdeform::WeylOp;

inline std::map<int, int> exponents(const PMonomial& m) {
  std::map<int, int> e;
  for (auto [i, k] : m.pairs()) e[i] = k;
  return e;
}

inline PMonomial from_exponents(const std::map<int, int>& e) {
  std::vector<std::pair<int, int>> pairs;
  for (auto [i, k] : e) {
    if (k > 0) pairs.emplace_back(i, k);
  }
  return PMonomial::from_pairs(pairs);
}

/// p^create (i d/dp_i)^annihilate applied to c * m, by the power rule.
inline PPoly apply_term(const PMonomial& create, const PMonomial& annihilate, const Coeff& c, const PMonomial& m,
                        const Coeff& mc) {
  std::map<int, int> e = exponents(m);
  Rational factor = 1;
  for (auto [i, k] : annihilate.pairs()) {
    int have = e.count(i) ? e[i] : 0;
    if (have < k) return {};
    for (int s = 0; s < k; ++s) factor *= Rational(i) * Rational(have - s);
    e[i] = have - k;
  }
  for (auto [i, k] : create.pairs()) e[i] += k;
  return PPoly::monomial(from_exponents(e), (c * mc).scaled(factor));
}

inline PPoly apply(const WeylOp& op, const PPoly& f) {
  PPoly out;
  for (const auto& [key, c] : op.terms()) {
    for (const auto& [m, mc] : f.terms()) out += apply_term(key.create, key.annihilate, c, m, mc);
  }
  return out;
}

/// Every monomial of degree exactly d in p_1..p_d.
inline std::vector<PMonomial> monomials_of_degree(int d, int max_part = -1) {
  if (max_part < 0) max_part = d;
  std::vector<PMonomial> out;
  if (d == 0) return {PMonomial()};
  for (int p = std::min(d, max_part); p >= 1; --p) {
    for (const auto& rest : monomials_of_degree(d - p, p)) out.push_back(PMonomial::power(p) * rest);
  }
  return out;
}

/// Two operators agree on every monomial of degree <= d (checked by action).
inline bool same_action(const WeylOp& a, const WeylOp& c, int d) {
  for (int k = 0; k <= d; ++k) {
    for (const auto& m : monomials_of_degree(k)) {
      PPoly f = PPoly::monomial(m);
      if (oracle::apply(a, f) != oracle::apply(c, f)) return false;
    }
  }
  return true;
}

}  // namespace oracle
