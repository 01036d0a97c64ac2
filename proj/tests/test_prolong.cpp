#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

using namespace testing;

using Strs = std::vector<std::string>;

namespace {

AffineScheme curve() {
  auto r = ring({"x"}, {"t"});
  return AffineScheme(r, {P("x^2 - t", r)});
}

}  // namespace

TEST_CASE("prolongation of a curve along d/dt") {
  const auto x = curve();
  const auto tau = prolong(x, derivation(dual(), base_ring_of(x.ring)));
  CHECK(strings(tau.scheme.gens) == Strs{"x_0^2 - t", "2*x_0*x_1 - 1"});
}

TEST_CASE("standard structure gives the tangent bundle; trivial algebra gives X back") {
  auto r = ring({"x", "y"});
  AffineScheme x(r, {P("x^2 + y^2 - 1", r)});
  auto k = base_ring_of(r);
  const auto t = prolong(x, OperatorE::standard(dual(), k));
  CHECK(strings(t.scheme.gens) == Strs{"x_0^2 + y_0^2 - 1", "2*x_0*x_1 + 2*y_0*y_1"});
  const auto same = prolong(x, OperatorE::standard(make_trivial(QQ), k));
  CHECK(strings(same.scheme.gens) == Strs{"x_0^2 + y_0^2 - 1"});
}

TEST_CASE("derivation prolongation matches the Jacobian formula on random systems") {
  auto r = ring({"x", "y", "z"}, {"t"});
  auto k = base_ring_of(r);
  auto e = derivation(dual(), k);
  Sampler rng(21);
  std::vector<std::size_t> all = {0, 1, 2, 3};
  for (int trial = 0; trial < 10; ++trial) {
    AffineScheme x(r, {rng.poly(r, all, 3, 4), rng.poly(r, all, 3, 4)});
    const auto tau = prolong(x, e);
    const auto& tr = tau.scheme.ring;
    // x_i -> x_i_0; first-order part: sum dP/dx_i (x_0) * x_i_1 + dP/dt (x_0)
    std::vector<Poly> base_sub, expected;
    for (std::size_t i = 0; i < 3; ++i) base_sub.push_back(Poly::variable(tr, 2 * i));
    base_sub.push_back(Poly::variable(tr, "t"));
    for (const auto& g : x.gens) {
      const Poly p0 = g.substitute(tr, base_sub);
      Poly p1 = oracle::derivative(g, 3).substitute(tr, base_sub);
      for (std::size_t i = 0; i < 3; ++i) p1 += oracle::derivative(g, i).substitute(tr, base_sub) * Poly::variable(tr, 2 * i + 1);
      if (!p0.is_zero()) expected.push_back(p0);
      if (!p1.is_zero()) expected.push_back(p1);
    }
    CHECK(strings(tau.scheme.gens) == strings(expected));
  }
}

TEST_CASE("nabla lands in the prolongation") {
  auto r = ring({"x", "y"}, {"t"});
  AffineScheme x(r, {P("x^2 + y^2 - t^2", r)});
  auto e = derivation(dual(), base_ring_of(r));
  const auto a = point(r, {"3/5*t", "4/5*t"});
  const auto n = nabla(x, e, a);
  CHECK(strings(n) == Strs{"3/5*t", "3/5", "4/5*t", "4/5"});
  for (const auto& res : residuals(prolong(x, e).scheme, n)) CHECK(res.is_zero());
  CHECK_THROWS_AS(nabla(x, e, point(r, {"t", "t"})), InvalidPointError);
}

TEST_CASE("prolonged morphisms: identity, composition and naturality") {
  auto r = ring({"x", "y"}, {"t"});
  AffineScheme x(r, {P("y - x^2 - t", r)});
  auto k = base_ring_of(r);
  auto e = derivation(make_truncated(QQ, 1, 2), k);
  auto ur = ring({"u", "v"}, {"t"});
  AffineScheme y(ur, {P("v - u^4 - 2*u^2*t - t^2", ur)});
  PolyMorphism f(x, y, {P("x", r), P("y^2", r)});
  CHECK(is_well_defined(f));
  auto wr = ring({"w"}, {"t"});
  PolyMorphism g(y, AffineScheme(wr, {}), {P("u*v + t", ur)});
  const auto tf = prolong_morphism(f, e);
  const auto tg = prolong_morphism(g, e);
  CHECK(is_well_defined(tf));
  CHECK(agree_modulo_source(prolong_morphism(compose(g, f), e), compose(tg, tf)));
  CHECK(agree_modulo_source(prolong_morphism(identity_morphism(x), e), identity_morphism(prolong(x, e).scheme)));
  const auto a = point(r, {"t^2", "t^4 + t"});
  CHECK(apply_morphism(tf, nabla(x, e, a)) == nabla(y, e, apply_morphism(f, a)));
}

TEST_CASE("morphisms check their shape") {
  const auto x = curve();
  auto other = ring({"x"}, {"s"});
  CHECK_THROWS_AS(PolyMorphism(x, AffineScheme(other, {}), {P("x", x.ring)}), ContextError);
  CHECK_THROWS_AS(PolyMorphism(x, x, {}), ContextError);
  PolyMorphism bad(x, x, {P("x + 1", x.ring)});
  CHECK_FALSE(is_well_defined(bad));
}

TEST_CASE("comparison maps between algebras") {
  auto r = ring({"x", "y"}, {"t"});
  AffineScheme x(r, {P("y - x^2 - t", r)});
  auto k = base_ring_of(r);
  auto e = derivation(make_truncated(QQ, 1, 2), k);
  auto f = derivation(dual(), k);
  ExactMatrix drop(QQ, {{S("1"), S("0"), S("0")}, {S("0"), S("1"), S("0")}}, 3);
  const auto ahat = compare_map(x, drop, e, f);
  CHECK(strings(ahat.images) == Strs{"x_0", "x_1", "y_0", "y_1"});
  CHECK(is_well_defined(ahat));
  const auto a = point(r, {"t^3", "t^6 + t"});
  CHECK(apply_morphism(ahat, nabla(x, e, a)) == nabla(x, f, a));

  const auto id = compare_map(x, ExactMatrix::identity(QQ, 3), e, e);
  CHECK(agree_modulo_source(id, identity_morphism(prolong(x, e).scheme)));

  ExactMatrix not_unital(QQ, {{S("0"), S("0"), S("0")}, {S("0"), S("1"), S("0")}}, 3);
  CHECK_THROWS_AS(validate_comparison(not_unital, e, f), ComparisonError);
  ExactMatrix scaled(QQ, {{S("1"), S("0"), S("0")}, {S("0"), S("2"), S("0")}}, 3);
  CHECK_THROWS_AS(validate_comparison(scaled, e, f), ComparisonError);
  // eta^2 -> eta breaks multiplicativity: eta * eta = eta^2 must map to 0 in the dual numbers.
  ExactMatrix not_mult(QQ, {{S("1"), S("0"), S("0")}, {S("0"), S("1"), S("1")}}, 3);
  try {
    validate_comparison(not_mult, e, f);
    FAIL("expected a comparison error");
  } catch (const ComparisonError& err) {
    CHECK_FALSE(err.witness().empty());
  }
}

TEST_CASE("composed prolongation equals the iterated one") {
  const auto x = curve();
  auto k = base_ring_of(x.ring);
  auto e = derivation(dual(), k);
  const auto pc = prolong_composed(x, e, e);
  CHECK(strings(pc.composed.scheme.gens) ==
        Strs{"x_0^2 - t", "2*x_0*x_1 - 1", "2*x_0*x_2 - 1", "2*x_0*x_3 + 2*x_1*x_2"});
  CHECK(pc.iterated.scheme.vars() == Strs{"x_0_0", "x_0_1", "x_1_0", "x_1_1"});
  CHECK(ideal_equal(pc.composed.scheme.gens, pc.reindexed));

  auto triv = OperatorE::standard(make_trivial(QQ), k);
  const auto pt = prolong_composed(x, e, triv);
  CHECK(strings(pt.composed.scheme.gens) == strings(prolong(x, e).scheme.gens));
}

TEST_CASE("composed nabla is the iterated nabla") {
  auto r = ring({"x", "y"}, {"t"});
  AffineScheme x(r, {P("y - x^3", r)});
  auto k = base_ring_of(r);
  auto e = derivation(dual(), k);
  auto p = make_product(QQ, 2);
  OperatorE s(p, k, {AlgebraElement(p, {P("t", k), P("t^2 - t", k)})});
  const auto ef = compose_operators(e, s);
  const auto a = point(r, {"t + 1", "t^3 + 3*t^2 + 3*t + 1"});
  CHECK(nabla(x, ef.op, a) == nabla(prolong(x, e).scheme, s, nabla(x, e, a)));
}

TEST_CASE("tensor swap identifies the two orders for commuting operators only") {
  auto r = ring({"x"}, {"t"});
  AffineScheme x(r, {P("x^3 - t*x", r)});
  auto k = base_ring_of(r);
  auto d = derivation(dual(), k);
  auto t2 = derivation(make_truncated(QQ, 1, 2), k);
  const auto ef = compose_operators(d, t2);
  const auto fe = compose_operators(t2, d);
  const auto a = prolong(x, ef.op), b = prolong(x, fe.op);
  CHECK(ideal_equal(swap_tensor_slots(a.scheme.gens, b.scheme.ring, 1, 2, 3), b.scheme.gens));

  auto p = make_product(QQ, 2);
  OperatorE s(p, k, {AlgebraElement(p, {P("t", k), P("t^2 - t", k)})});
  const auto ds = compose_operators(d, s), sd = compose_operators(s, d);
  const auto c = prolong(x, ds.op), e2 = prolong(x, sd.op);
  CHECK_FALSE(ideal_equal(swap_tensor_slots(c.scheme.gens, e2.scheme.ring, 1, 2, 2), e2.scheme.gens));
  const auto elt = swap_tensor_element(ds.op.image(0), sd.algebra, 2, 2);
  CHECK(elt.rank() == 4);
}
