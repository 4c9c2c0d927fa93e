#include <doctest.h>

#include "bdeform/errors.hpp"
#include "oracles.hpp"
#include "random_gen.hpp"

using namespace bdeform;

TEST_CASE("coefficient ring axioms") {
  gen::Gen g(0xC0EFF);
  for (int n = 0; n < 300; ++n) {
    Coeff a = g.coeff();
    Coeff b = g.coeff();
    Coeff c = g.coeff();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Coeff(1) == a);
    CHECK(a.canonicalized() == a);
    CHECK(a.canonicalized().canonicalized() == a.canonicalized());
    CHECK(Coeff::parse(a.to_string()) == a);
  }
}

TEST_CASE("rational arithmetic agrees with GMP") {
  gen::Gen g(0x5EED);
  for (int n = 0; n < 500; ++n) {
    Rational a = Rational(g.uniform(-1000000, 1000000)) * Rational(1LL << 40, g.uniform(1, 97));
    Rational c = Rational(g.uniform(-1000000, 1000000), g.uniform(1, 1000)) * Rational(1LL << 41);
    CHECK((a * c).to_mpq() == a.to_mpq() * c.to_mpq());
    CHECK((a + c).to_mpq() == a.to_mpq() + c.to_mpq());
    CHECK((a - c).to_mpq() == a.to_mpq() - c.to_mpq());
    CHECK(((a * c) * c - a * (c * c)).is_zero());
  }
}

TEST_CASE("polynomial multiplication is commutative and associative") {
  gen::Gen g(0xB011);
  for (int n = 0; n < 200; ++n) {
    PPoly a = g.ppoly(3);
    PPoly b = g.ppoly(3);
    PPoly c = g.ppoly(2);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("operator action matches the power-rule oracle") {
  gen::Gen g(0xA991);
  for (int n = 0; n < 300; ++n) {
    WeylOp a = g.op();
    PPoly f = g.ppoly(5);
    CHECK(apply(a, f) == oracle::apply(a, f));
  }
}

TEST_CASE("composition is coherent with application") {
  gen::Gen g(0xC0C0);
  int nontrivial = 0;
  for (int n = 0; n < 300; ++n) {
    WeylOp a = g.op();
    WeylOp b = g.op();
    PPoly f = g.ppoly(4);
    PPoly lhs = apply(compose(a, b), f);
    CHECK(lhs == apply(a, apply(b, f)));
    nontrivial += !lhs.is_zero();
  }
  CHECK(nontrivial > 50);
}

TEST_CASE("commutators are antisymmetric and satisfy Jacobi") {
  gen::Gen g(0x7AC0);
  int nontrivial = 0;
  for (int n = 0; n < 300; ++n) {
    WeylOp a = g.op(3, 2);
    WeylOp b = g.op(3, 2);
    WeylOp c = g.op(3, 2);
    CHECK(commutator(a, b) == -commutator(b, a));
    nontrivial += !commutator(a, commutator(b, c)).is_zero() || !commutator(c, commutator(a, b)).is_zero();
    WeylOp jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    CHECK(jac.is_zero());
  }
  CHECK(nontrivial > 50);
}

TEST_CASE("commutators add homogeneous degrees") {
  gen::Gen g(0x60DE);
  for (int n = 0; n < 300; ++n) {
    const int d1 = g.uniform(-2, 2);
    const int d2 = g.uniform(-2, 2);
    WeylOp a = g.homogeneous_op(d1);
    WeylOp b = g.homogeneous_op(d2);
    REQUIRE(a.is_homogeneous(d1));
    WeylOp c = commutator(a, b);
    CHECK((c.is_zero() || c.is_homogeneous(d1 + d2)));
    CHECK(compose(a, b).is_homogeneous(d1 + d2));
  }
}

TEST_CASE("truncation commutes with composition") {
  gen::Gen g(0x7C7C);
  for (int n = 0; n < 200; ++n) {
    WeylOp a = g.op();
    WeylOp b = g.op();
    const int d = g.uniform(0, 4);
    WeylOp full = compose(a, b).truncated(d);
    WeylOp at = compose_at(a.truncated(d + b.jump()), b.truncated(d), d);
    CHECK(op_equal(full, at, d));
  }
}
