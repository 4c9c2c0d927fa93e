// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bdeform/constraints.hpp"
#include "bdeform/currents.hpp"
#include "bdeform/jack.hpp"
#include "bdeform/tau.hpp"
#include "oracles.hpp"
#include "random_gen.hpp"

using namespace bdeform;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> extra;
};

void fold(Outcome& out, const std::string& label, const Report& r) {
  if (!r.passed()) {
    out.pass = false;
    for (const auto& item : r.items) {
      if (!item.pass && !item.separate) {
        out.extra.push_back(label + ": " + format_result(item));
        break;
      }
    }
  }
  if (!out.detail.empty()) out.detail += ", ";
  out.detail += label + " " + std::to_string(r.counted() - r.failures()) + "/" + std::to_string(r.counted());
}

Outcome theorem(const char* name, int i_max, int d) {
  Outcome out;
  Report r = verify_theorem(Model::parse(name), i_max, d);
  fold(out, name, r);
  for (const auto& item : r.items) {
    if (item.separate) out.extra.push_back("reported separately: " + format_result(item));
  }
  return out;
}

std::vector<Model> all_models() {
  return {Model::parse("bip"), Model::parse("threeconst"), Model::parse("biple3"),
          Model(ModelTag::bip_le3, {{Var::q1, 0}, {Var::q3, 0}})};
}

std::string label(const Model& m) { return m.fixed().empty() ? m.name() : m.name() + "[q1=q3=0]"; }

Outcome c4() {
  Outcome out;
  for (auto family : {ModeFamily::a, ModeFamily::m1}) {
    for (auto prop : {SimplifiedProp::dstruct, SimplifiedProp::mixed, SimplifiedProp::pstar, SimplifiedProp::final}) {
      fold(out, std::string(family == ModeFamily::a ? "A" : "M") + "/" + prop_name(prop),
           verify_simplified(family, prop, 6, 10));
    }
  }
  return out;
}

Outcome c5() {
  Outcome out;
  for (const auto& m : all_models()) fold(out, label(m), check_constraints(tau_evolve(m, 5), 5));
  return out;
}

void expect(Outcome& out, bool ok, const std::string& what) {
  if (!ok) {
    out.pass = false;
    out.extra.push_back("mismatch: " + what);
  }
}

Outcome c6() {
  Outcome out;
  const int d = 10;
  int compared = 0;
  ModeTable a_cat = a_table_catalytic(3, d);
  ModeTable a_rec = a_table_recursive(3, d);
  ModeTable m_cat = m_table_catalytic(1, 3, d);
  ModeTable m_rec = m1_table_recursive(3, d);
  for (int s = 0; s <= 3; ++s) {
    for (int i = 1; i <= 6; ++i) {
      expect(out, op_equal(a_cat.get(s, i), a_rec.get(s, i), d), "A_" + std::to_string(i) + "(" + std::to_string(s) + ")");
      ++compared;
    }
  }
  for (int m = 1; m <= 3; ++m) {
    for (int i = 1; i <= 6; ++i) {
      expect(out, op_equal(m_cat.get(m, i), m_rec.get(m, i), d), "M^(1," + std::to_string(m) + ")_" + std::to_string(i));
      ++compared;
    }
  }
  for (int k = 1; k <= 3; ++k) {
    ModeTable direct = m_table_catalytic(k, 1, d);
    ModeTable combined = m_from_a(k, a_cat);
    for (int i = 1; i <= 6; ++i) {
      expect(out, op_equal(direct.get(1, i), combined.get(1, i), d), "e-sum k=" + std::to_string(k) + " i=" + std::to_string(i));
      ++compared;
    }
  }
  out.detail = std::to_string(compared) + " operator pairs at degree " + std::to_string(d);
  return out;
}

Outcome c7() {
  Outcome out;
  for (const auto& m : all_models()) {
    auto conv = calibrate_content(m);
    expect(out, conv == ContentConvention::standard, "content calibration for " + label(m));
    expect(out, tau_jack(m, 4, conv.value_or(ContentConvention::standard)).coeffs == tau_evolve(m, 4).coeffs,
           "Jack expansion of " + label(m));
  }
  const PPoly p1 = PPoly::p(1);
  const PPoly p2 = PPoly::p(2);
  expect(out, jack(Partition({2})).to_ppoly() == p1 * p1 + p2.scaled(Coeff::parse("1 + b")), "J_(2)");
  expect(out, jack(Partition({1, 1})).to_ppoly() == p1 * p1 - p2, "J_(1,1)");
  int pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    auto basis = jack_basis(n);
    for (std::size_t x = 0; x < basis.size(); ++x) {
      for (std::size_t y = x + 1; y < basis.size(); ++y) {
        expect(out, alpha_inner(basis[x], basis[y]).is_zero(),
               "orthogonality " + basis[x].lambda.to_string() + " " + basis[y].lambda.to_string());
        ++pairs;
      }
    }
  }
  out.detail = "4 models through t^4, " + std::to_string(pairs) + " orthogonal pairs";
  return out;
}

Outcome c8() {
  Outcome out;
  for (const auto& m : all_models()) fold(out, label(m), check_rooted_fixed_point(tau_evolve(m, 3), 3));
  return out;
}

Outcome c9() {
  Outcome out;
  const int cases = 1000;
  gen::Gen g(0xACCE97);
  int jacobi = 0, anti = 0, coherent = 0, homogeneous = 0;
  for (int n = 0; n < cases; ++n) {
    WeylOp a = g.op(3, 2);
    WeylOp b = g.op(3, 2);
    WeylOp c = g.op(3, 2);
    anti += commutator(a, b) == -commutator(b, a);
    jacobi += (commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))).is_zero();

    WeylOp x = g.op();
    WeylOp y = g.op();
    PPoly f = g.ppoly(4);
    coherent += apply(compose(x, y), f) == oracle::apply(x, oracle::apply(y, f));

    const int d1 = g.uniform(-2, 2);
    const int d2 = g.uniform(-2, 2);
    WeylOp h1 = g.homogeneous_op(d1);
    WeylOp h2 = g.homogeneous_op(d2);
    WeylOp br = commutator(h1, h2);
    homogeneous += (br.is_zero() || br.is_homogeneous(d1 + d2)) && compose(h1, h2).is_homogeneous(d1 + d2);
  }
  out.pass = jacobi == cases && anti == cases && coherent == cases && homogeneous == cases;
  std::ostringstream os;
  os << "Jacobi " << jacobi << "/" << cases << ", antisymmetry " << anti << "/" << cases << ", coherence " << coherent
     << "/" << cases << ", homogeneity " << homogeneous << "/" << cases;
  out.detail = os.str();
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"bip commutation relations, i,j <= 8, degree 12", [] { return theorem("bip", 8, 12); }},
      {"three-constellation commutation relations, i,j <= 6, degree 10", [] { return theorem("threeconst", 6, 10); }},
      {"bipartite maps of degree <= 3, i,j <= 6, degree 10", [] { return theorem("biple3", 6, 10); }},
      {"simplified relations for A and M^(1,m), i,j <= 6, degree 10", c4},
      {"tau annihilated through t^5, i <= 5", c5},
      {"catalytic and recursive constructions agree", c6},
      {"Jack expansion matches the evolution", c7},
      {"rooted fixed point through t^3, i <= 3", c8},
      {"operator algebra soundness on random inputs", c9},
  };
  bool all = true;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[n].second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && out.pass;
    std::printf("%s criterion %zu: %s (%s) [%.2fs]\n", out.pass ? "PASS" : "FAIL", n + 1, criteria[n].first.c_str(),
                out.detail.c_str(), secs);
    for (const auto& line : out.extra) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
