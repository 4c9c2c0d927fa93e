#include "bdeform/tau.hpp"

#include <algorithm>
#include <map>

#include "bdeform/errors.hpp"

namespace bdeform {

namespace {

std::string first_term(const PPoly& p) {
  if (p.is_zero()) return "0";
  const auto& [m, c] = *p.terms().begin();
  return "term " + (m.is_one() ? std::string("1") : m.to_string()) + ": " + c.to_string();
}

std::vector<std::pair<std::string, std::string>> series_params(const TauSeries& tau, int i_max) {
  return {{"model", tau.model.name()}, {"order", std::to_string(tau.order())}, {"imax", std::to_string(i_max)}};
}

void emit(Report& report, CheckResult r, const ResultSink& sink) {
  if (sink) sink(r);
  report.add(std::move(r));
}

Series series_mul(const Series& a, const Series& c, int order) {
  Series out(static_cast<std::size_t>(order + 1));
  for (int i = 0; i < static_cast<int>(a.size()) && i <= order; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < static_cast<int>(c.size()) && i + j <= order; ++j) {
      if (c[static_cast<std::size_t>(j)].is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

bool series_zero(const Series& s) {
  return std::all_of(s.begin(), s.end(), [](const PPoly& p) { return p.is_zero(); });
}

// Catalytic vector whose entries are t-series of polynomials rather than operators.
using FunctionVector = std::map<int, Series>;

void accumulate(FunctionVector& v, int index, const Series& s, int order) {
  if (series_zero(s)) return;
  auto [it, inserted] = v.try_emplace(index, Series(static_cast<std::size_t>(order + 1)));
  for (std::size_t n = 0; n < s.size() && n < it->second.size(); ++n) it->second[n] += s[n];
}

// (Lambda_Y + shift + W) V with J_0 = 0.
FunctionVector catalytic_step(const FunctionVector& v, const Coeff& shift, const std::vector<Series>& feedback,
                              int order) {
  const Coeff b = Coeff::var(Var::b);
  const Coeff opb = Coeff::one_plus_b();
  FunctionVector out;
  for (const auto& [j, s] : v) {
    int top = 0;
    for (const auto& p : s) top = std::max(top, p.degree());
    for (int i = 1; i <= top; ++i) {
      Series d(s.size());
      for (std::size_t n = 0; n < s.size(); ++n) d[n] = s[n].pstar(i).scaled(opb);
      accumulate(out, j + i, d, order);
    }
    for (int i = 1; i <= j; ++i) {
      Series m(s.size());
      for (std::size_t n = 0; n < s.size(); ++n) m[n] = s[n] * PPoly::p(i);
      accumulate(out, j - i, m, order);
    }
    const Coeff diag = b * Coeff(j) + shift;
    if (!diag.is_zero()) {
      Series m(s.size());
      for (std::size_t n = 0; n < s.size(); ++n) m[n] = s[n].scaled(diag);
      accumulate(out, j, m, order);
    }
    for (int a = 1; a < static_cast<int>(feedback.size()); ++a) {
      accumulate(out, j + a, series_mul(feedback[static_cast<std::size_t>(a)], s, order), order);
    }
  }
  return out;
}

}  // namespace

TauSeries tau_evolve(const Model& model, int order) {
  if (order < 0) throw InvalidArgument("order must be nonnegative");
  TauSeries tau{model, {PPoly(Coeff(1))}};
  if (order == 0) return tau;
  ConstraintFamily family(model, order);
  for (int n = 1; n <= order; ++n) {
    PPoly acc;
    for (int m = 1; m <= std::min(n, model.r()); ++m) {
      const Coeff qm = model.q(m);
      if (qm.is_zero()) continue;
      const PPoly& prev = tau.coeffs[static_cast<std::size_t>(n - m)];
      PPoly step;
      for (int i = 1; i <= n; ++i) {
        PPoly x = apply(family.mode(m, i), prev);
        if (!x.is_zero()) step += x * PPoly::p(i);
      }
      acc += step.scaled(qm);
    }
    tau.coeffs.push_back(acc.scaled(Rational(1, n)));
  }
  return tau;
}

Report check_constraints(const TauSeries& tau, int i_max, const ResultSink& sink) {
  if (i_max < 1) throw InvalidArgument("imax must be at least 1");
  Report report;
  report.command = "check-constraints";
  report.params = series_params(tau, i_max);
  const int order = tau.order();
  ConstraintFamily family(tau.model, std::max(order, 1));
  for (int i = 1; i <= i_max; ++i) {
    const TGradedOp l = family.constraint(i);
    for (int n = 0; n <= order; ++n) {
      CheckResult r{"constraint", {{"i", i}, {"n", n}}, true, "", "", false};
      PPoly total;
      for (const auto& [s, op] : l.pieces()) {
        if (s > n) continue;
        PPoly part = apply(op, tau.coeffs[static_cast<std::size_t>(n - s)]);
        const bool homogeneous = n - i >= 0 ? part.is_homogeneous(n - i) : part.is_zero();
        if (!homogeneous && r.pass) {
          r.pass = false;
          r.mismatch = "t^" + std::to_string(n) + " contribution of the t^" + std::to_string(s) +
                       " piece is not homogeneous of degree " + std::to_string(n - i);
        }
        total += part;
      }
      if (r.pass && !total.is_zero()) {
        r.pass = false;
        r.mismatch = "t^" + std::to_string(n) + " " + first_term(total);
      }
      emit(report, std::move(r), sink);
    }
  }
  return report;
}

HSeries h_series(const TauSeries& tau) {
  if (tau.coeffs.empty() || tau.coeffs[0] != PPoly(Coeff(1))) throw InvalidArgument("tau must start with 1");
  const int order = tau.order();
  // n F_n = n tau_n - sum_{k<n} k F_k tau_{n-k}, F = log tau
  Series f(static_cast<std::size_t>(order + 1));
  for (int n = 1; n <= order; ++n) {
    PPoly acc = tau.coeffs[static_cast<std::size_t>(n)].scaled(Coeff(n));
    for (int k = 1; k < n; ++k) {
      acc -= (f[static_cast<std::size_t>(k)] * tau.coeffs[static_cast<std::size_t>(n - k)]).scaled(Coeff(k));
    }
    f[static_cast<std::size_t>(n)] = acc.scaled(Rational(1, n));
  }
  HSeries h;
  for (const auto& p : f) h.coeffs.push_back(p.scaled(Coeff::one_plus_b()));
  return h;
}

Series exp_series(const HSeries& h) {
  const int order = h.order();
  if (order < 0) return {};
  if (!h.coeffs[0].is_zero()) throw InvalidArgument("H must have no constant term");
  Series g;
  for (const auto& p : h.coeffs) g.push_back(p.scaled(Coeff::inv_one_plus_b()));
  // n E_n = sum_{k<=n} k G_k E_{n-k}
  Series e{PPoly(Coeff(1))};
  for (int n = 1; n <= order; ++n) {
    PPoly acc;
    for (int k = 1; k <= n; ++k) {
      acc += (g[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(n - k)]).scaled(Coeff(k));
    }
    e.push_back(acc.scaled(Rational(1, n)));
  }
  return e;
}

Report check_rooted_fixed_point(const TauSeries& tau, int i_max, const ResultSink& sink) {
  if (i_max < 1) throw InvalidArgument("imax must be at least 1");
  Report report;
  report.command = "fixed-point";
  report.params = series_params(tau, i_max);
  const Model& model = tau.model;
  const int order = tau.order();
  const HSeries h = h_series(tau);

  // G_a = a dH/dp_a as t-series, a = 1..order (index 0 unused).
  std::vector<Series> feedback(static_cast<std::size_t>(order + 1));
  for (int a = 1; a <= order; ++a) {
    Series g(static_cast<std::size_t>(order + 1));
    for (int n = 0; n <= order; ++n) g[static_cast<std::size_t>(n)] = h.coeffs[static_cast<std::size_t>(n)].pstar(a);
    feedback[static_cast<std::size_t>(a)] = std::move(g);
  }
  std::vector<Coeff> shifts;
  for (int l = 1; l <= model.k(); ++l) shifts.push_back(model.specialize(Coeff::var(static_cast<Var>(l))));

  std::vector<Series> rhs(static_cast<std::size_t>(i_max + 1), Series(static_cast<std::size_t>(order + 1)));
  FunctionVector v;
  v[0] = Series{PPoly(Coeff(1))};
  v[0].resize(static_cast<std::size_t>(order + 1));
  for (int m = 1; m <= std::min(model.r(), order); ++m) {
    for (auto it = shifts.rbegin(); it != shifts.rend(); ++it) v = catalytic_step(v, *it, feedback, order - m);
    FunctionVector raised;
    for (auto& [j, s] : v) raised.emplace(j + 1, std::move(s));
    v = std::move(raised);
    const Coeff qm = model.q(m);
    if (qm.is_zero()) continue;
    for (int i = 1; i <= i_max; ++i) {
      auto it = v.find(i);
      if (it == v.end()) continue;
      for (int n = 0; n + m <= order && n < static_cast<int>(it->second.size()); ++n) {
        rhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + m)] += it->second[static_cast<std::size_t>(n)].scaled(qm);
      }
    }
  }

  for (int i = 1; i <= i_max; ++i) {
    CheckResult r{"fixed-point", {{"i", i}}, true, "", "", false};
    for (int n = 0; n <= order; ++n) {
      PPoly lhs = h.coeffs[static_cast<std::size_t>(n)].pstar(i);
      const PPoly& right = rhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
      if (lhs != right) {
        r.pass = false;
        r.mismatch = "t^" + std::to_string(n) + " " + first_term(lhs - right) + " (lhs - rhs)";
        break;
      }
    }
    emit(report, std::move(r), sink);
  }
  return report;
}

int max_denom_pow(const PPoly& p) {
  int e = 0;
  for (const auto& [m, c] : p.terms()) e = std::max(e, c.denom_pow());
  return e;
}

}  // namespace bdeform
