// bdeform: exact checks of b-deformed constraint operators.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

#include "bdeform/constraints.hpp"
#include "bdeform/errors.hpp"
#include "bdeform/jack.hpp"
#include "bdeform/serialize.hpp"
#include "bdeform/tau.hpp"

using namespace bdeform;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "q1=0,q3=0"
std::map<Var, Rational> parse_assignments(const std::string& text) {
  std::map<Var, Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected var=value in --set, got '" + item + "'");
    auto v = var_from_name(item.substr(0, eq));
    if (!v) throw UsageError("unknown variable '" + item.substr(0, eq) + "'");
    out[*v] = Rational::parse(item.substr(eq + 1));
  }
  return out;
}

Model make_model(const std::string& name, const std::string& set) {
  Model base = Model::parse(name);
  if (set.empty()) return base;
  return Model(base.tag(), parse_assignments(set));
}

class Stopwatch {
 public:
  ~Stopwatch() {
    const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << "elapsed " << dt << " s\n";
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int finish(const Report& report, bool as_json, bool streamed) {
  if (as_json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else if (streamed) {
    std::cout << (report.passed() ? "ok" : "FAILED") << ": " << report.counted() - report.failures() << "/"
              << report.counted() << " checks passed";
    if (report.counted() != report.items.size()) std::cout << ", " << report.items.size() - report.counted() << " reported separately";
    std::cout << "\n";
  } else {
    print_report(std::cout, report);
  }
  return report.passed() ? kPass : kFail;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string model;
  int imax = 0;
  int deg = 6;
  std::string b_eval;
  std::string prop;
  std::string set;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  if (a.imax < 1) throw UsageError("--imax must be at least 1");
  if (a.deg < 0) throw UsageError("--deg must be nonnegative");
  Model model = make_model(a.model, a.set);
  VerifyOptions opts;
  if (!a.b_eval.empty()) opts.b_eval = Rational::parse(a.b_eval);
  if (!a.json) {
    opts.sink = [](const CheckResult& r) { std::cout << format_result(r) << "\n" << std::flush; };
  }
  Stopwatch watch;
  Report report;
  if (!a.prop.empty()) {
    auto prop = parse_prop(a.prop);
    if (!prop) throw UsageError("--prop must be dstruct, mixed, pstar or final");
    const ModeFamily family = model.r() == 1 ? ModeFamily::a : ModeFamily::m1;
    if (!a.json) std::cout << "verify family=" << (family == ModeFamily::a ? "A" : "M") << " prop=" << a.prop << "\n";
    report = verify_simplified(family, *prop, a.imax, a.deg, opts);
    report.params.insert(report.params.begin(), {"model", model.name()});
  } else {
    if (!a.json) std::cout << "verify model=" << model.name() << " imax=" << a.imax << " deg=" << a.deg << "\n";
    report = verify_theorem(model, a.imax, a.deg, opts);
  }
  return finish(report, a.json, !a.json);
}

// ---------------------------------------------------------------------------

struct TauArgs {
  std::string model;
  int order = -1;
  int check_constraints = 0;
  int fixed_point = 0;
  bool oracle = false;
  std::string set;
  bool json = false;
};

std::optional<std::string> first_series_difference(const Series& a, const Series& c) {
  for (std::size_t n = 0; n < std::max(a.size(), c.size()); ++n) {
    PPoly x = n < a.size() ? a[n] : PPoly();
    PPoly y = n < c.size() ? c[n] : PPoly();
    if (x == y) continue;
    PPoly diff = x - y;
    const auto& [m, coeff] = *diff.terms().begin();
    return "t^" + std::to_string(n) + " " + (m.is_one() ? std::string("1") : m.to_string()) + ": " +
           x.coeff(m).to_string() + " vs " + y.coeff(m).to_string();
  }
  return std::nullopt;
}

Report oracle_report(const Model& model, const TauSeries& tau) {
  Report report;
  report.command = "oracle";
  report.params = {{"model", model.name()}, {"order", std::to_string(tau.order())}};
  auto conv = calibrate_content(model);
  CheckResult calib{"calibration", {}, conv.has_value(), "", "", false};
  if (conv) {
    calib.note = "content convention " + convention_name(*conv);
  } else {
    calib.mismatch = "neither content convention reproduces t^2";
  }
  report.add(calib);
  const ContentConvention use = conv.value_or(ContentConvention::standard);
  TauSeries jack_tau = tau_jack(model, tau.order(), use);
  CheckResult eq{"jack-equals-evolution", {{"order", tau.order()}}, true, "", "", false};
  if (auto diff = first_series_difference(jack_tau.coeffs, tau.coeffs)) {
    eq.pass = false;
    eq.mismatch = *diff + " (jack vs evolution)";
  }
  report.add(eq);
  return report;
}

void merge(Report& into, const Report& from) {
  for (const auto& item : from.items) into.add(item);
}

int run_tau(const TauArgs& a) {
  if (a.order < 0) throw UsageError("--order must be nonnegative");
  if (a.check_constraints < 0 || a.fixed_point < 0) throw UsageError("check bounds must be positive");
  Model model = make_model(a.model, a.set);
  Stopwatch watch;
  TauSeries tau = tau_evolve(model, a.order);

  Report checks;
  checks.command = "tau";
  checks.params = {{"model", model.name()}, {"order", std::to_string(a.order)}};
  if (a.check_constraints > 0) merge(checks, check_constraints(tau, a.check_constraints));
  if (a.fixed_point > 0) merge(checks, check_rooted_fixed_point(tau, a.fixed_point));
  if (a.oracle) merge(checks, oracle_report(model, tau));

  std::vector<int> denoms;
  for (const auto& c : tau.coeffs) denoms.push_back(max_denom_pow(c));
  if (a.json) {
    json out{{"schema", kSchema}, {"model", model.name()}, {"series", to_json(tau.coeffs)}, {"denom_pow", denoms}};
    if (!checks.items.empty()) out["report"] = to_json(checks);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : tau.coeffs) std::cout << c.to_string() << "\n";
    if (!checks.items.empty()) {
      for (const auto& item : checks.items) std::cout << format_result(item) << "\n";
      std::cout << (checks.passed() ? "ok" : "FAILED") << ": " << checks.items.size() - checks.failures() << "/"
                << checks.items.size() << " checks passed\n";
    }
    std::cerr << "denominator powers:";
    for (int d : denoms) std::cerr << " " << d;
    std::cerr << "\n";
  }
  return checks.passed() ? kPass : kFail;
}

// ---------------------------------------------------------------------------

struct DumpArgs {
  std::string op;
  std::string model;
  std::string charge = "0";
  int i = 0;
  int j = 0;
  int l = 0;
  int s = 0;
  int m = 1;
  int k = 1;
  int deg = 6;
  bool json = false;
};

int run_dump(const DumpArgs& a) {
  if (a.deg < 0) throw UsageError("--deg must be nonnegative");
  auto need_positive = [](int v, const char* name) {
    if (v < 1) throw UsageError(std::string("--") + name + " must be at least 1");
  };
  json out;
  std::string text;
  auto set_op = [&](const WeylOp& op) {
    out = to_json(op);
    text = op.to_string();
  };
  if (a.op == "J") {
    set_op(current(a.i, Coeff::parse(a.charge), a.deg));
  } else if (a.op == "A") {
    need_positive(a.i, "i");
    if (a.s < 0) throw UsageError("--s must be nonnegative");
    set_op(build_a(a.i, a.s, a.deg));
  } else if (a.op == "M") {
    need_positive(a.i, "i");
    need_positive(a.m, "m");
    if (a.k < 1 || a.k > 3) throw UsageError("--k must be 1, 2 or 3");
    set_op(build_m(a.k, a.m, a.i, a.deg));
  } else if (a.op == "L") {
    need_positive(a.i, "i");
    if (a.model.empty()) throw UsageError("--op L needs --model");
    TGradedOp l = build_l(Model::parse(a.model), a.i, a.deg);
    out = to_json(l);
    text = l.to_string();
  } else if (a.op == "D" || a.op == "Dtilde") {
    need_positive(a.i, "i");
    need_positive(a.j, "j");
    need_positive(a.l, "l");
    set_op(a.op == "D" ? build_d(a.s, a.i, a.j, a.l, a.deg) : build_dtilde(a.m, a.i, a.j, a.l, a.deg));
  } else {
    throw UsageError("--op must be J, A, M, L, D or Dtilde");
  }
  if (a.json) {
    out["schema"] = kSchema;
    out["op"] = a.op;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------------------------

struct JackArgs {
  std::string lambda;
  bool dump = false;
  bool json = false;
};

int run_jack(const JackArgs& a) {
  JackPoly j = jack(Partition::parse(a.lambda));
  const RatFunc norm = alpha_inner(j, j);
  if (a.json) {
    json out = to_json(j);
    out["schema"] = kSchema;
    out["norm"] = norm.to_string("alpha");
    std::cout << out.dump(2) << "\n";
    return kPass;
  }
  std::cout << "J" << j.lambda.to_string() << "\n";
  if (a.dump) {
    for (auto it = j.p_expansion.rbegin(); it != j.p_expansion.rend(); ++it) {
      std::cout << "  " << (it->first.length() ? it->first.to_monomial().to_string() : "1") << ": "
                << it->second.to_string("alpha") << "\n";
    }
  }
  std::cout << "norm: " << norm.to_string("alpha") << "\n";
  return kPass;
}

struct OracleArgs {
  std::string model;
  int order = -1;
  std::string set;
  bool json = false;
};

int run_oracle(const OracleArgs& a) {
  if (a.order < 0) throw UsageError("--order must be nonnegative");
  if (a.order > kJackBound) throw UsageError("--order is limited to " + std::to_string(kJackBound));
  Model model = make_model(a.model, a.set);
  Stopwatch watch;
  return finish(oracle_report(model, tau_evolve(model, a.order)), a.json, false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for b-deformed constraint operators"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the commutation relations of a model");
  verify->add_option("--model", va.model, "bip, threeconst or biple3")->required();
  verify->add_option("--imax", va.imax, "Largest constraint index")->required();
  verify->add_option("--deg", va.deg, "Working degree");
  verify->add_option("--b-eval", va.b_eval, "Specialize b to this rational");
  verify->add_option("--prop", va.prop, "Simplified relation: dstruct, mixed, pstar or final");
  verify->add_option("--set", va.set, "Fix parameters, e.g. q1=0,q3=0");
  verify->add_flag("--json", va.json);

  TauArgs ta;
  auto* tau = app.add_subcommand("tau", "Partition function by order-by-order evolution");
  tau->add_option("--model", ta.model)->required();
  tau->add_option("--order", ta.order)->required();
  tau->add_option("--check-constraints", ta.check_constraints, "Check L_i tau = 0 for i up to this bound");
  tau->add_option("--fixed-point", ta.fixed_point, "Check the rooted fixed point for i up to this bound");
  tau->add_flag("--oracle", ta.oracle, "Compare with the Jack expansion");
  tau->add_option("--set", ta.set);
  tau->add_flag("--json", ta.json);

  DumpArgs da;
  auto* dump = app.add_subcommand("dump", "Print one operator");
  dump->add_option("--op", da.op, "J, A, M, L, D or Dtilde")->required();
  dump->add_option("--model", da.model);
  dump->add_option("--charge", da.charge, "Value of J_0");
  dump->add_option("--i", da.i);
  dump->add_option("--j", da.j);
  dump->add_option("--l", da.l);
  dump->add_option("--s", da.s);
  dump->add_option("--m", da.m);
  dump->add_option("--k", da.k);
  dump->add_option("--deg", da.deg);
  dump->add_flag("--json", da.json);

  JackArgs ja;
  auto* jackc = app.add_subcommand("jack", "Jack polynomial by Gram-Schmidt");
  jackc->add_option("--lambda", ja.lambda, "Partition, e.g. 2,1")->required();
  jackc->add_flag("--dump", ja.dump, "Print the power-sum expansion");
  jackc->add_flag("--json", ja.json);

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Compare the evolution with the Jack expansion");
  oracle->add_option("--model", oa.model)->required();
  oracle->add_option("--order", oa.order)->required();
  oracle->add_option("--set", oa.set);
  oracle->add_flag("--json", oa.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) return run_verify(va);
    if (*tau) return run_tau(ta);
    if (*dump) return run_dump(da);
    if (*jackc) return run_jack(ja);
    if (*oracle) return run_oracle(oa);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
