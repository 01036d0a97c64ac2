#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace testing;

using Strs = std::vector<std::string>;

namespace {

AlgebraValuedScheme valued(const AlgebraPtr& a, const RingPtr& r, const std::vector<std::vector<const char*>>& gens) {
  std::vector<AlgebraElement> out;
  for (const auto& g : gens) {
    std::vector<Poly> c;
    for (const auto* s : g) c.push_back(P(s, r));
    out.emplace_back(a, c);
  }
  return AlgebraValuedScheme(r, a, out);
}

}  // namespace

TEST_CASE("Weil restriction over the dual numbers") {
  auto r = ring({"x"}, {"t"});
  auto y = valued(dual(), r, {{"x^2 - t", "-1"}});
  const auto w = weil_restrict(y);
  CHECK(w.scheme.vars() == Strs{"x_0", "x_1"});
  CHECK(strings(w.scheme.gens) == Strs{"x_0^2 - t", "2*x_0*x_1 - 1"});
  CHECK(strings(w.substitution[0].coords()) == Strs{"x_0", "x_1"});
}

TEST_CASE("Weil restriction over a product algebra") {
  auto r = ring({"x"});
  auto y = valued(make_product(QQ, 2), r, {{"x^2 - 1", "0"}});
  CHECK(strings(weil_restrict(y).scheme.gens) == Strs{"x_0^2 - 1", "2*x_0*x_1 + x_1^2"});
}

TEST_CASE("Weil restriction orders variables i-major and drops zero components") {
  auto r = ring({"x", "y"});
  auto a = make_truncated(QQ, 1, 2);
  auto y = valued(a, r, {{"x - y", "0", "0"}});
  const auto w = weil_restrict(y);
  CHECK(w.scheme.vars() == Strs{"x_0", "x_1", "x_2", "y_0", "y_1", "y_2"});
  CHECK(strings(w.scheme.gens) == Strs{"x_0 - y_0", "x_1 - y_1", "x_2 - y_2"});
  auto z = valued(a, r, {{"x^2", "0", "0"}});
  CHECK(strings(weil_restrict(z).scheme.gens) == Strs{"x_0^2", "2*x_0*x_1", "2*x_0*x_2 + x_1^2"});
}

TEST_CASE("trivial algebra only renames") {
  auto r = ring({"x", "y"}, {"t"});
  auto y = valued(make_trivial(QQ), r, {{"x*y - t"}});
  const auto w = weil_restrict(y);
  CHECK(w.scheme.vars() == Strs{"x_0", "y_0"});
  CHECK(strings(w.scheme.gens) == Strs{"x_0*y_0 - t"});
}

TEST_CASE("points move between E(k) and the restriction") {
  auto r = ring({"x"});
  auto a = dual();
  auto y = valued(a, r, {{"x^2 - 1", "-1"}});
  auto k = base_ring_of(r);
  AlgebraPoint p = {AlgebraElement(a, {P("1", k), P("1/2", k)})};
  const auto down = point_down(y, p);
  CHECK(strings(down) == Strs{"1", "1/2"});
  const auto w = weil_restrict(y);
  for (const auto& res : residuals(w.scheme, down)) CHECK(res.is_zero());
  CHECK(point_up(y, down) == p);
  AlgebraPoint bad = {AlgebraElement(a, {P("1", k), P("1", k)})};
  CHECK_THROWS_AS(point_down(y, bad), InvalidPointError);
}

TEST_CASE("weil restriction of a random scheme and its points agree") {
  auto r = ring({"x", "y"}, {"t"});
  auto a = make_truncated(QQ, 1, 2);
  auto k = base_ring_of(r);
  Sampler rng(9);
  std::vector<std::size_t> all = {0, 1, 2};
  for (int trial = 0; trial < 20; ++trial) {
    // Build a scheme through a known E(k)-point by subtracting the value there.
    AlgebraPoint p;
    for (int i = 0; i < 2; ++i) {
      p.emplace_back(a, std::vector<Poly>{rng.base_poly(k, 2, 2), rng.base_poly(k, 2, 2), rng.base_poly(k, 1, 2)});
    }
    std::vector<AlgebraElement> gens;
    for (int g = 0; g < 2; ++g) {
      const Poly q = rng.poly(r, all, 3, 3);
      std::vector<AlgebraElement> im = {p[0], p[1], AlgebraElement::embed_scalar(a, P("t", k))};
      const auto v = evaluate_in_algebra(q, a, k, im);
      std::vector<Poly> coords;
      for (const auto& c : v.coords()) coords.push_back(-c.embed(r));
      coords[0] += q;
      gens.emplace_back(a, coords);
    }
    AlgebraValuedScheme y(r, a, gens);
    for (const auto& res : residuals(y, p)) CHECK(res.is_zero());
    const auto w = weil_restrict(y);
    for (const auto& res : residuals(w.scheme, point_down(y, p))) CHECK(res.is_zero());
  }
}

TEST_CASE("base change transports coefficients") {
  auto r = ring({"x"}, {"t"});
  AffineScheme x(r, {P("x^2 - t^2", r)});
  auto k = base_ring_of(r);
  auto e = derivation(dual(), k);
  const auto y = base_change_scheme(x, e);
  REQUIRE(y.gens.size() == 1);
  CHECK(strings(y.gens[0].coords()) == Strs{"x^2 - t^2", "-2*t"});
  BaseMap sq{k, {P("t^2", k)}};
  CHECK(strings(base_change_scheme(x, sq).gens) == Strs{"-t^4 + x^2"});
}
