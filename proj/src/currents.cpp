#include "bdeform/currents.hpp"

#include "bdeform/errors.hpp"

namespace bdeform {

WeylOp current(int i, const Coeff& charge, int working_degree) {
  WeylOp j(working_degree);
  if (i < 0) {
    j.add_term(PMonomial::power(-i), PMonomial(), 1);
  } else if (i > 0) {
    j.add_term(PMonomial(), PMonomial::power(i), Coeff::one_plus_b());
  } else {
    j.add_term(PMonomial(), PMonomial(), charge);
  }
  return j;
}

Coeff k1_charge() { return Coeff::var(Var::u1); }

WeylOp YVector::at(int j) const {
  auto it = entries.find(j);
  return it == entries.end() ? WeylOp(working_degree) : it->second;
}

YVector seed(int working_degree, const Coeff& c) {
  YVector v{working_degree, {}};
  v.entries.emplace(0, WeylOp::scalar(c, working_degree));
  return v;
}

YVector y_plus(const YVector& v) {
  YVector r{v.working_degree, {}};
  for (const auto& [j, op] : v.entries) r.entries.emplace(j + 1, op);
  return r;
}

YVector lambda_y(const YVector& v, const Coeff& charge, const Coeff& shift) {
  const int d = v.working_degree;
  std::map<int, WeylOp> acc;
  auto add = [&](int m, const WeylOp& op) {
    if (op.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(m, op);
    if (!inserted) it->second += op;
  };
  const Coeff b = Coeff::var(Var::b);
  for (const auto& [j, op] : v.entries) {
    // J_i with i > d + jump annihilates everything op can produce from degree <= d.
    const int top = d + op.jump();
    for (int i = -j; i <= top; ++i) {
      if (i == 0) {
        if (!charge.is_zero()) add(j, op.scaled(charge));
        continue;
      }
      add(j + i, compose_at(current(i, charge), op, d));
    }
    Coeff diag = b * Coeff(j) + shift;
    if (!diag.is_zero()) add(j, op.scaled(diag));
  }
  YVector r{d, {}};
  for (auto& [m, op] : acc) {
    if (!op.is_zero()) r.entries.emplace(m, std::move(op));
  }
  return r;
}

WeylOp ModeTable::get(int r, int i) const {
  if (r < 0 || r >= rows()) throw InvalidArgument("mode table has no row " + std::to_string(r));
  const auto& row = rows_[r];
  if (i <= 0 || i >= static_cast<int>(row.size())) return WeylOp(wd_);
  return row[i];
}

namespace {

std::vector<WeylOp> row_from(const YVector& v, int i_max) {
  std::vector<WeylOp> row(i_max + 1, WeylOp(v.working_degree));
  for (const auto& [j, op] : v.entries) {
    if (j >= 1 && j <= i_max) row[j] = op;
  }
  return row;
}

}  // namespace

ModeTable a_table_catalytic(int s_max, int working_degree) {
  // A_i(s) has operator degree 1 - i, so it vanishes at this working degree once i > d + 1.
  const int d = working_degree;
  std::vector<std::vector<WeylOp>> rows;
  YVector v = seed(d, Coeff::inv_one_plus_b());
  for (int s = 0; s <= s_max; ++s) {
    if (s > 0) v = lambda_y(v, Coeff());
    rows.push_back(row_from(y_plus(v), d + 1));
  }
  return ModeTable(d, std::move(rows));
}

ModeTable a_table_recursive(int s_max, int working_degree) {
  const int d = working_degree;
  const int n_max = d + 1;
  const Coeff b = Coeff::var(Var::b);
  std::vector<std::vector<WeylOp>> rows;
  std::vector<WeylOp> row0(n_max + 1, WeylOp(d));
  row0[1] = WeylOp::scalar(Coeff::inv_one_plus_b(), d);
  rows.push_back(std::move(row0));
  for (int s = 0; s < s_max; ++s) {
    const auto& prev = rows.back();
    std::vector<WeylOp> next(n_max + 1, WeylOp(d));
    for (int i = 1; i <= n_max; ++i) {
      WeylOp acc(d);
      for (int n = 1; n <= n_max; ++n) {
        if (prev[n].is_zero()) continue;
        acc += compose_at(current(i - n), prev[n], d);
      }
      if (i > 1) acc += prev[i].scaled(b * Coeff(i - 1));
      next[i] = std::move(acc);
    }
    rows.push_back(std::move(next));
  }
  return ModeTable(d, std::move(rows));
}

namespace {

Coeff u_var(int c) {
  static constexpr Var us[] = {Var::u1, Var::u2, Var::u3};
  if (c < 1 || c > 3) throw InvalidArgument("only u1, u2, u3 exist");
  return Coeff::var(us[c - 1]);
}

}  // namespace

ModeTable m_table_catalytic(int k, int m_max, int working_degree) {
  if (k < 1 || k > 3) throw InvalidArgument("k must be 1, 2 or 3");
  // M^(k,m)_i has operator degree m - i: zero once i > d + m.
  const int d = working_degree;
  std::vector<std::vector<WeylOp>> rows;
  rows.emplace_back();
  YVector v = seed(d, Coeff::inv_one_plus_b());
  for (int m = 1; m <= m_max; ++m) {
    for (int c = 1; c <= k; ++c) v = lambda_y(v, Coeff(), u_var(c));
    v = y_plus(v);
    rows.push_back(row_from(v, d + m));
  }
  return ModeTable(d, std::move(rows));
}

ModeTable m1_table_recursive(int m_max, int working_degree) {
  const int d = working_degree;
  const Coeff u = k1_charge();
  const Coeff b = Coeff::var(Var::b);
  std::vector<std::vector<WeylOp>> rows;
  rows.emplace_back();
  if (m_max < 1) return ModeTable(d, std::move(rows));
  std::vector<WeylOp> first(d + 2, WeylOp(d));
  for (int i = 1; i <= d + 1; ++i) first[i] = current(i - 1, u, d).scaled(Coeff::inv_one_plus_b());
  rows.push_back(std::move(first));
  for (int m = 1; m < m_max; ++m) {
    const auto& prev = rows.back();
    const int n_max = d + m;
    std::vector<WeylOp> next(n_max + 2, WeylOp(d));
    for (int i = 1; i <= n_max + 1; ++i) {
      WeylOp acc(d);
      for (int n = 1; n <= n_max; ++n) {
        if (prev[n].is_zero()) continue;
        acc += compose_at(current(i - n - 1, u), prev[n], d);
      }
      if (i >= 2 && i - 1 <= n_max) acc += prev[i - 1].scaled(b * Coeff(i - 1));
      next[i] = std::move(acc);
    }
    rows.push_back(std::move(next));
  }
  return ModeTable(d, std::move(rows));
}

ModeTable m_from_a(int k, const ModeTable& a) {
  if (a.rows() < k + 1) throw InvalidArgument("A table has too few rows for k = " + std::to_string(k));
  const int d = a.working_degree();
  const int i_max = a.max_index(0);
  std::vector<WeylOp> row(i_max + 1, WeylOp(d));
  for (int i = 1; i <= i_max; ++i) {
    for (int s = 0; s <= k; ++s) row[i] += a.get(s, i).scaled(elementary_symmetric(k - s, k));
  }
  std::vector<std::vector<WeylOp>> rows;
  rows.emplace_back();
  rows.push_back(std::move(row));
  return ModeTable(d, std::move(rows));
}

WeylOp build_a(int i, int s, int working_degree) {
  if (i < 1 || s < 0) throw InvalidArgument("A_i(s) needs i >= 1 and s >= 0");
  return a_table_catalytic(s, working_degree).get(s, i);
}

WeylOp build_m(int k, int m, int i, int working_degree) {
  if (i < 1 || m < 1) throw InvalidArgument("M^(k,m)_i needs i >= 1 and m >= 1");
  return m_table_catalytic(k, m, working_degree).get(m, i);
}

}  // namespace bdeform
