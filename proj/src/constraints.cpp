#include "bdeform/constraints.hpp"

#include <algorithm>

#include "bdeform/errors.hpp"

namespace bdeform {

// ---------------------------------------------------------------------------
// Model

Model::Model(ModelTag tag, std::map<Var, Rational> fixed) : tag_(tag), fixed_(std::move(fixed)) {}

Model Model::parse(std::string_view name) {
  if (name == "bip") return Model(ModelTag::bip);
  if (name == "threeconst") return Model(ModelTag::three_const);
  if (name == "biple3") return Model(ModelTag::bip_le3);
  throw InvalidArgument("unknown model '" + std::string(name) + "' (expected bip, threeconst or biple3)");
}

int Model::k() const {
  switch (tag_) {
    case ModelTag::bip: return 2;
    case ModelTag::three_const: return 3;
    case ModelTag::bip_le3: return 1;
  }
  return 0;
}

int Model::r() const { return tag_ == ModelTag::bip_le3 ? 3 : 1; }

std::string Model::name() const {
  switch (tag_) {
    case ModelTag::bip: return "bip";
    case ModelTag::three_const: return "threeconst";
    case ModelTag::bip_le3: return "biple3";
  }
  return "";
}

Coeff Model::q(int m) const {
  if (tag_ != ModelTag::bip_le3) return m == 1 ? Coeff(1) : Coeff();
  static constexpr Var qs[] = {Var::q1, Var::q2, Var::q3};
  if (m < 1 || m > 3) return Coeff();
  return specialize(Coeff::var(qs[m - 1]));
}

Coeff Model::specialize(const Coeff& c) const { return fixed_.empty() ? c : c.substitute(fixed_); }

// ---------------------------------------------------------------------------
// TGradedOp

WeylOp TGradedOp::piece(int t_power) const {
  auto it = pieces_.find(t_power);
  return it == pieces_.end() ? WeylOp(wd_) : it->second;
}

void TGradedOp::add(int t_power, const WeylOp& op) {
  if (op.is_zero()) return;
  auto it = pieces_.find(t_power);
  if (it == pieces_.end()) {
    WeylOp t = op.truncated(wd_);
    if (!t.is_zero()) pieces_.emplace(t_power, std::move(t));
    return;
  }
  it->second += op;
  if (it->second.is_zero()) pieces_.erase(it);
}

void TGradedOp::add(const TGradedOp& o, int t_shift, const Coeff& c) {
  if (c.is_zero()) return;
  for (const auto& [t, op] : o.pieces_) add(t + t_shift, c.is_one() ? op : op.scaled(c));
}

TGradedOp TGradedOp::truncated(int d) const {
  TGradedOp r(d);
  for (const auto& [t, op] : pieces_) r.add(t, op.truncated(d));
  return r;
}

TGradedOp TGradedOp::map_coeffs(const std::function<Coeff(const Coeff&)>& f) const {
  TGradedOp r(wd_);
  for (const auto& [t, op] : pieces_) r.add(t, op.map_coeffs(f));
  return r;
}

std::string TGradedOp::to_string() const {
  if (pieces_.empty()) return "0";
  std::string s;
  for (const auto& [t, op] : pieces_) {
    if (!s.empty()) s += "\n";
    s += "t^" + std::to_string(t) + ": " + op.to_string();
  }
  return s;
}

TGradedOp commutator_at(const TGradedOp& a, const TGradedOp& c, int d) {
  TGradedOp r(d);
  for (const auto& [ta, x] : a.pieces()) {
    for (const auto& [tc, y] : c.pieces()) r.add(ta + tc, commutator_at(x, y, d));
  }
  return r;
}

TGradedOp compose_at(const WeylOp& left, const TGradedOp& x, int d, int t_shift) {
  TGradedOp r(d);
  for (const auto& [t, op] : x.pieces()) r.add(t + t_shift, compose_at(left, op, d));
  return r;
}

std::optional<std::string> first_difference(const TGradedOp& a, const TGradedOp& c, int d) {
  std::vector<int> powers;
  for (const auto& [t, op] : a.pieces()) powers.push_back(t);
  for (const auto& [t, op] : c.pieces()) powers.push_back(t);
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
  for (int t : powers) {
    if (auto diff = first_difference(a.piece(t), c.piece(t), d)) return "t^" + std::to_string(t) + " " + *diff;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constraint families

ConstraintFamily::ConstraintFamily(Model model, int working_degree)
    : model_(std::move(model)), wd_(working_degree), modes_(m_table_catalytic(model_.k(), model_.r(), working_degree)) {}

WeylOp ConstraintFamily::mode(int m, int i) const {
  if (m < 1 || m > model_.r()) return WeylOp(wd_);
  WeylOp op = modes_.get(m, i);
  if (!model_.fixed().empty()) op = op.map_coeffs([this](const Coeff& c) { return model_.specialize(c); });
  return op;
}

TGradedOp ConstraintFamily::constraint(int i) const {
  if (i < 1) throw InvalidArgument("constraints are indexed by i >= 1");
  TGradedOp l(wd_);
  WeylOp minus_pstar(wd_);
  minus_pstar.add_term(PMonomial(), PMonomial::power(i), -1);
  l.add(0, minus_pstar);
  for (int m = 1; m <= model_.r(); ++m) {
    Coeff qm = model_.q(m);
    if (!qm.is_zero()) l.add(m, mode(m, i).scaled(qm));
  }
  return l;
}

TGradedOp build_l(const Model& model, int i, int working_degree) {
  return ConstraintFamily(model, working_degree).constraint(i);
}

// ---------------------------------------------------------------------------
// Structure operators

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

Coeff b_var() { return Coeff::var(Var::b); }

}  // namespace

WeylOp build_d(int s, int i, int j, int l, int working_degree) {
  if (s < 0 || s > 3) throw InvalidArgument("D_{ij,l}(s) is defined for 0 <= s <= 3");
  WeylOp r(working_degree);
  if (s <= 1) return r;
  const int top = i + j - 1;
  if (s == 2) {
    if (l == top) r.add_term(PMonomial(), PMonomial(), Coeff(i - j));
    return r;
  }
  const int mu = std::min(i, j);
  const int big = std::max(i, j);
  long long c = 0;
  if (l >= big) c += 2LL * (i - j);
  if (big <= l && l <= top) c += i - j;
  if (mu <= l && l <= big - 1) c += sgn(i - j) * (2LL * l - 3LL * mu + 1);
  if (c != 0) r += current(top - l).scaled(Coeff(c));
  if (l == top) r += WeylOp::scalar(b_var() * Coeff(static_cast<long long>(i - j) * (i + j - 2)));
  return r;
}

WeylOp build_dtilde(int m, int i, int j, int l, int working_degree) {
  if (m < 1 || m > 3) throw InvalidArgument("D~_{ij,l}(m) is defined for 1 <= m <= 3");
  WeylOp r(working_degree);
  if (m == 1) return r;
  if (m == 2) {
    if (l == i + j - 2) r.add_term(PMonomial(), PMonomial(), Coeff(i - j));
    return r;
  }
  const int top = i + j - 3;
  const int mu = std::min(i, j);
  const int big = std::max(i, j);
  long long c = 0;
  if (l >= big - 1) c += 2LL * (i - j);
  if (big - 1 <= l && l <= top) c += i - j;
  if (mu - 1 <= l && l <= big - 2) c += sgn(i - j) * (2LL * l - 3LL * mu + 3);
  if (c != 0) r += current(top - l, k1_charge()).scaled(Coeff(c));
  if (l == top) r += WeylOp::scalar(b_var() * Coeff(static_cast<long long>(i - j) * (i + j - 3)));
  return r;
}

// ---------------------------------------------------------------------------
// Theorem sweeps

namespace {

class RhsBuilder {
 public:
  RhsBuilder(const std::vector<TGradedOp>& ls, int d) : ls_(ls), out_(d), d_(d) {}

  /// out += c t^shift (left o L_l); L_l vanishes for l <= 0 and past the table.
  void add(const Coeff& c, int shift, const WeylOp* left, int l) {
    if (c.is_zero() || l <= 0 || l >= static_cast<int>(ls_.size())) return;
    if (left) {
      out_.add(compose_at(*left, ls_[l], d_, shift), 0, c);
    } else {
      out_.add(ls_[l], shift, c);
    }
  }
  int l_limit() const { return static_cast<int>(ls_.size()) - 1; }
  TGradedOp& result() { return out_; }

 private:
  const std::vector<TGradedOp>& ls_;
  TGradedOp out_;
  int d_;
};

// How p*_0 is read in the grouped right-hand side: as zero, or as J_0/(1+b)
// with the u-term folded back into the first sum.
enum class ZeroModeReading { vanishing, charge };

// Pairs whose truth depends on the reading of p*_0.
bool reading_sensitive(const Model& model, int i, int j) {
  return model.tag() == ModelTag::bip_le3 && std::min(i, j) == 1 && i + j - 3 >= 1;
}

TGradedOp explicit_rhs(const Model& model, const std::vector<TGradedOp>& ls, int i, int j, int d,
                       ZeroModeReading reading = ZeroModeReading::vanishing) {
  RhsBuilder rhs(ls, d);
  const int mu = std::min(i, j);
  const int big = std::max(i, j);
  const Coeff ij(i - j);
  const Coeff b = b_var();
  const Coeff opb = Coeff::one_plus_b();
  switch (model.tag()) {
    case ModelTag::bip:
      rhs.add(ij, 1, nullptr, i + j - 1);
      break;
    case ModelTag::three_const: {
      for (int n = 1; i + j + n - 1 <= rhs.l_limit(); ++n) {
        WeylOp pn = WeylOp::p(n);
        rhs.add(ij * 2, 1, &pn, i + j + n - 1);
      }
      rhs.add(b * ij * Coeff(i + j - 2), 1, nullptr, i + j - 1);
      for (int n = 1; n <= mu - 1; ++n) {
        WeylOp ps = WeylOp::pstar(n);
        rhs.add(opb * ij * 3, 1, &ps, i + j - 1 - n);
      }
      for (int n = mu; n <= big - 1; ++n) {
        WeylOp ps = WeylOp::pstar(n);
        rhs.add(opb * Coeff(sgn(i - j) * (2 * big - 2 * n - mu - 1)), 1, &ps, i + j - 1 - n);
      }
      rhs.add(model.specialize(elementary_symmetric(1, 3)) * ij, 1, nullptr, i + j - 1);
      break;
    }
    case ModelTag::bip_le3: {
      const Coeff q2 = model.q(2);
      const Coeff q3 = model.q(3);
      const Coeff u = model.specialize(k1_charge());
      for (int n = 1; i + j + n - 3 <= rhs.l_limit(); ++n) {
        WeylOp pn = WeylOp::p(n);
        rhs.add(q3 * ij * 2, 3, &pn, i + j + n - 3);
      }
      rhs.add(q3 * b * ij * Coeff(i + j - 3), 3, nullptr, i + j - 3);
      const bool charge = reading == ZeroModeReading::charge;
      const WeylOp zero_mode = WeylOp::scalar(u * Coeff::inv_one_plus_b());
      auto pstar = [&](int n) { return n == 0 ? zero_mode : WeylOp::pstar(n); };
      for (int n = charge ? 0 : 1; n <= mu - 2; ++n) {
        WeylOp ps = pstar(n);
        rhs.add(opb * q3 * ij * 3, 3, &ps, i + j - 3 - n);
      }
      for (int n = std::max(charge ? 0 : 1, mu - 1); n <= big - 2; ++n) {
        WeylOp ps = pstar(n);
        rhs.add(opb * q3 * Coeff(sgn(i - j) * (2 * big - 2 * n - mu - 3)), 3, &ps, i + j - 3 - n);
      }
      if (!charge) rhs.add(q3 * u * ij * 3, 3, nullptr, i + j - 3);
      rhs.add(q2 * ij, 2, nullptr, i + j - 2);
      break;
    }
  }
  return std::move(rhs.result());
}

TGradedOp structure_rhs(const Model& model, const std::vector<TGradedOp>& ls, int i, int j, int d) {
  RhsBuilder rhs(ls, d);
  for (int l = 1; l <= rhs.l_limit(); ++l) {
    if (model.r() == 1) {
      const int k = model.k();
      WeylOp op(WeylOp::kUnbounded);
      for (int s = 0; s <= k; ++s) {
        Coeff e = model.specialize(elementary_symmetric(k - s, k));
        if (!e.is_zero()) op += build_d(s, i, j, l).scaled(e);
      }
      if (!op.is_zero()) rhs.add(1, 1, &op, l);
    } else {
      for (int m = 1; m <= 3; ++m) {
        WeylOp op = build_dtilde(m, i, j, l).map_coeffs([&](const Coeff& c) { return model.specialize(c); });
        if (!op.is_zero()) rhs.add(model.q(m), m, &op, l);
      }
    }
  }
  return std::move(rhs.result());
}

CheckResult compare(std::string check, std::vector<std::pair<std::string, int>> keys, const TGradedOp& lhs,
                    const TGradedOp& rhs, int d, const std::optional<Rational>& b_eval) {
  CheckResult r{std::move(check), std::move(keys), true, "", "", false};
  std::optional<std::string> diff;
  if (b_eval) {
    auto spec = [&](const Coeff& c) { return c.substitute(Var::b, *b_eval); };
    diff = first_difference(lhs.map_coeffs(spec), rhs.map_coeffs(spec), d);
  } else {
    diff = first_difference(lhs, rhs, d);
  }
  if (diff) {
    r.pass = false;
    r.mismatch = *diff;
  }
  return r;
}

void emit(Report& report, CheckResult r, const VerifyOptions& opts) {
  if (opts.sink) opts.sink(r);
  report.add(std::move(r));
}

std::vector<std::pair<std::string, std::string>> base_params(int i_max, int d, const VerifyOptions& opts) {
  std::vector<std::pair<std::string, std::string>> p{{"imax", std::to_string(i_max)}, {"deg", std::to_string(d)}};
  if (opts.b_eval) p.emplace_back("b", opts.b_eval->to_string());
  return p;
}

}  // namespace

Report verify_theorem(const Model& model, int i_max, int d, const VerifyOptions& opts) {
  if (i_max < 1) throw InvalidArgument("imax must be at least 1");
  if (d < 0) throw InvalidArgument("working degree must be nonnegative");
  Report report;
  report.command = "verify";
  report.params = base_params(i_max, d, opts);
  report.params.insert(report.params.begin(), {"model", model.name()});

  // The t^m pieces of L_j raise degree by at most m - 1, so the commutator at
  // degree d needs the constraints known to degree d + r - 1.
  ConstraintFamily family(model, d + model.r() - 1);
  const int l_max = std::max(family.max_constraint_index(d), i_max);
  std::vector<TGradedOp> wide;
  std::vector<TGradedOp> ls;
  wide.emplace_back(family.working_degree());
  ls.emplace_back(d);
  for (int l = 1; l <= l_max; ++l) {
    wide.push_back(family.constraint(l));
    ls.push_back(wide.back().truncated(d));
  }
  for (int i = 1; i <= i_max; ++i) {
    for (int j = 1; j <= i_max; ++j) {
      TGradedOp lhs = commutator_at(wide[i], wide[j], d);
      std::vector<std::pair<std::string, int>> keys{{"i", i}, {"j", j}};
      TGradedOp printed = explicit_rhs(model, ls, i, j, d);
      std::optional<TGradedOp> folded;
      if (reading_sensitive(model, i, j)) {
        folded = explicit_rhs(model, ls, i, j, d, ZeroModeReading::charge);
        if (!first_difference(printed, *folded, d)) folded.reset();
      }
      if (folded) {
        CheckResult literal = compare("theorem", keys, lhs, printed, d, opts.b_eval);
        literal.separate = true;
        literal.note = "p*_0 read as 0";
        emit(report, std::move(literal), opts);
        CheckResult charge = compare("theorem", keys, lhs, *folded, d, opts.b_eval);
        charge.note = "p*_0 read as u/(1+b)";
        emit(report, std::move(charge), opts);
      } else {
        emit(report, compare("theorem", keys, lhs, printed, d, opts.b_eval), opts);
      }
      emit(report, compare("structure", keys, lhs, structure_rhs(model, ls, i, j, d), d, opts.b_eval), opts);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Simplified relations

std::optional<SimplifiedProp> parse_prop(std::string_view s) {
  if (s == "dstruct") return SimplifiedProp::dstruct;
  if (s == "mixed") return SimplifiedProp::mixed;
  if (s == "pstar") return SimplifiedProp::pstar;
  if (s == "final") return SimplifiedProp::final;
  return std::nullopt;
}

std::string prop_name(SimplifiedProp p) {
  switch (p) {
    case SimplifiedProp::dstruct: return "dstruct";
    case SimplifiedProp::mixed: return "mixed";
    case SimplifiedProp::pstar: return "pstar";
    case SimplifiedProp::final: return "final";
  }
  return "";
}

namespace {

struct SimplifiedSetup {
  ModeFamily family;
  int d;
  ModeTable table;
  int first_row;  // 0 for A(s), 1 for M^(1,m)

  WeylOp x(int row, int i) const { return table.get(row, i); }
  int l_max(int row) const { return family == ModeFamily::a ? d + 1 : d + row; }
  WeylOp dop(int row, int i, int j, int l) const {
    return family == ModeFamily::a ? build_d(row, i, j, l) : build_dtilde(row, i, j, l);
  }
  /// sum_l D_{ij,l}(srow) X_l(xrow)
  WeylOp structure_sum(int srow, int xrow, int i, int j) const {
    WeylOp out(d);
    for (int l = 1; l <= l_max(xrow); ++l) {
      WeylOp dl = dop(srow, i, j, l);
      if (!dl.is_zero()) out += compose_at(dl, x(xrow, l), d);
    }
    return out;
  }
};

TGradedOp as_graded(const WeylOp& op, int d) {
  TGradedOp t(d);
  t.add(0, op);
  return t;
}

// Final displayed commutators: the row-3 relation written out term by term.
WeylOp final_rhs(const SimplifiedSetup& st, int i, int j) {
  const int d = st.d;
  const int mu = std::min(i, j);
  const int big = std::max(i, j);
  const bool a = st.family == ModeFamily::a;
  const int shift = a ? 1 : 3;  // J index is i + j - shift - n
  const int lo = a ? big : big - 1;
  const Coeff charge = a ? Coeff() : k1_charge();
  WeylOp out(d);
  auto add = [&](long long c, int n) {
    if (c == 0 || n < 1 || n > st.l_max(3)) return;
    out += compose_at(current(i + j - shift - n, charge), st.x(3, n), d).scaled(Coeff(c));
  };
  for (int n = lo; n <= st.l_max(3); ++n) add(2LL * (i - j), n);
  for (int n = lo; n <= i + j - shift; ++n) add(i - j, n);
  if (a) {
    for (int n = mu; n <= big - 1; ++n) add(sgn(i - j) * (2LL * n - 3LL * mu + 1), n);
  } else {
    for (int n = mu - 1; n <= big - 2; ++n) add(sgn(j - i) * (3LL * mu - 2LL * n - 3), n);
  }
  int top = i + j - (a ? 1 : 3);
  if (top >= 1) out += st.x(3, top).truncated(d).scaled(b_var() * Coeff(static_cast<long long>(i - j) * (a ? i + j - 2 : i + j - 3)));
  return out;
}

}  // namespace

Report verify_simplified(ModeFamily family, SimplifiedProp prop, int i_max, int d, const VerifyOptions& opts) {
  if (i_max < 1) throw InvalidArgument("imax must be at least 1");
  if (d < 0) throw InvalidArgument("working degree must be nonnegative");
  Report report;
  report.command = "verify";
  report.params = base_params(i_max, d, opts);
  const std::string fam = family == ModeFamily::a ? "A" : "M";
  report.params.insert(report.params.begin(), {{"family", fam}, {"prop", prop_name(prop)}});

  // M^(1,m)_i raises degree by up to m - 1 <= 2; A_i(s) never raises degree.
  const int wide = family == ModeFamily::a ? d : d + 2;
  SimplifiedSetup st{family, d,
                     family == ModeFamily::a ? a_table_catalytic(3, wide) : m_table_catalytic(1, 3, wide),
                     family == ModeFamily::a ? 0 : 1};
  const std::string check = fam + " " + prop_name(prop);
  const char* row_key = family == ModeFamily::a ? "s" : "m";
  const std::string row_key2 = std::string(row_key) + "'";

  auto run = [&](std::vector<std::pair<std::string, int>> keys, const WeylOp& lhs, const WeylOp& rhs) {
    emit(report, compare(check, std::move(keys), as_graded(lhs, d), as_graded(rhs, d), d, opts.b_eval), opts);
  };

  for (int i = 1; i <= i_max; ++i) {
    for (int j = 1; j <= i_max; ++j) {
      switch (prop) {
        case SimplifiedProp::dstruct:
          for (int s = st.first_row; s <= 3; ++s) {
            run({{"i", i}, {"j", j}, {row_key, s}}, commutator_at(st.x(s, i), st.x(s, j), d), st.structure_sum(s, s, i, j));
          }
          break;
        case SimplifiedProp::mixed:
          for (int s = st.first_row; s <= 3; ++s) {
            for (int s2 = s + 1; s2 <= 3; ++s2) {
              WeylOp lhs = commutator_at(st.x(s, i), st.x(s2, j), d) - commutator_at(st.x(s, j), st.x(s2, i), d);
              WeylOp rhs = st.structure_sum(s2, s, i, j) + st.structure_sum(s, s2, i, j);
              run({{"i", i}, {"j", j}, {row_key, s}, {row_key2, s2}}, lhs, rhs);
            }
          }
          break;
        case SimplifiedProp::pstar:
          for (int s = st.first_row; s <= 3; ++s) {
            WeylOp lhs = commutator_at(WeylOp::pstar(i), st.x(s, j), d) - commutator_at(WeylOp::pstar(j), st.x(s, i), d);
            WeylOp rhs(d);
            for (int l = 1; l <= d; ++l) {
              WeylOp dl = st.dop(s, i, j, l);
              if (!dl.is_zero()) rhs += compose_at(dl, WeylOp::pstar(l), d);
            }
            run({{"i", i}, {"j", j}, {row_key, s}}, lhs, rhs);
          }
          break;
        case SimplifiedProp::final:
          run({{"i", i}, {"j", j}}, commutator_at(st.x(3, i), st.x(3, j), d), final_rhs(st, i, j));
          break;
      }
    }
  }
  return report;
}

}  // namespace bdeform
