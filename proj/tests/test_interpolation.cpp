#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

using namespace testing;

using Strs = std::vector<std::string>;

namespace {

/// The same map with every multinomial weight dropped.
PolyMorphism unweighted(const InterpolationMap& im) {
  const auto& alg = im.tau.algebra();
  const std::size_t l = alg->rank();
  const std::size_t rl = im.tau.scheme.num_vars();
  const auto& src = im.source.scheme.ring;
  std::vector<Poly> images(im.morphism.images.begin(), im.morphism.images.begin() + static_cast<std::ptrdiff_t>(rl));
  for (std::size_t b = 0; b < im.terms.size(); ++b) {
    for (std::size_t j = 0; j < l; ++j) {
      Poly acc(src);
      for (const auto& t : im.terms[b][j]) {
        const auto w = multinomial_weight(alg->field(), im.source.lambda[t.gamma], l);
        acc += (t.coeff / w) * Poly::variable(src, im.source.z_index(t.gamma));
      }
      images.push_back(std::move(acc));
    }
  }
  return PolyMorphism(im.source.scheme, im.target.scheme, std::move(images));
}

}  // namespace

TEST_CASE("gamma sets and multinomial weights") {
  const std::vector<std::uint32_t> beta{2};
  CHECK(gamma_set(beta, 2) == std::vector<std::vector<std::uint32_t>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(gamma_set(std::vector<std::uint32_t>{1, 1}, 2).size() == 4);
  CHECK(gamma_set(std::vector<std::uint32_t>{3, 0}, 3).size() == 10);
  CHECK(beta_hat(std::vector<std::uint32_t>{2, 1}, 3) == std::vector<std::uint32_t>{2, 0, 0, 1, 0, 0});
  CHECK(multinomial_weight(QQ, std::vector<std::uint32_t>{1, 1}, 2) == S("2"));
  CHECK(multinomial_weight(QQ, std::vector<std::uint32_t>{1, 1, 1, 2, 0, 1}, 3) == S("18"));
  CHECK(multinomial_weight(QQ, std::vector<std::uint32_t>{2, 0, 0, 1}, 2) == S("1"));
}

TEST_CASE("the affine line with dual numbers at order two") {
  auto r = ring({"x"}, {"t"});
  const auto im = interpolation_map(AffineScheme(r, {}), 2, derivation(dual(), base_ring_of(r)));
  CHECK(im.target.scheme.vars() == Strs{"x_0", "x_1", "z_1_0", "z_1_1", "z_2_0", "z_2_1"});
  CHECK(strings(im.morphism.images) == Strs{"x_0", "x_1", "z_1_0", "z_0_1", "z_2_0", "2*z_1_1"});
}

TEST_CASE("trivial algebra gives the identity on coordinates") {
  auto r = ring({"x", "y"}, {"t"});
  AffineScheme x(r, {P("x^2 + y^2 - t", r)});
  const auto e = OperatorE::standard(make_trivial(QQ), base_ring_of(r));
  const auto im = interpolation_map(x, 2, e);
  const auto& src = im.source.scheme.vars();
  const auto& tgt = im.target.scheme.vars();
  REQUIRE(src.size() == tgt.size());
  for (std::size_t v = 0; v < src.size(); ++v) CHECK(im.morphism.images[v].to_string() == src[v]);
  CHECK(is_well_defined(im.morphism));
}

TEST_CASE("coefficients are the expansion of the Weil power") {
  const std::vector<AlgebraPtr> algs = {dual(), make_truncated(QQ, 1, 2), make_truncated(QQ, 2, 1),
                                        make_product(QQ, 2), make_dring(S("3")),
                                        tensor(dual(), dual())};
  for (const auto& alg : algs) {
    const std::size_t l = alg->rank();
    for (std::size_t r = 1; r <= 2; ++r) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < r; ++i) names.push_back("x" + std::to_string(i));
      auto rg = ring(names, {"t"});
      const auto im = interpolation_map(AffineScheme(rg, {}), 3, OperatorE::standard(alg, base_ring_of(rg)));
      CHECK(coefficient_law_violations(im).empty());
      for (std::size_t b = 0; b < im.jet.lambda.size(); ++b) {
        const auto expected = oracle::weil_power(alg, im.jet.lambda[b]);
        std::map<std::vector<std::uint32_t>, std::vector<Scalar>> got;
        for (std::size_t j = 0; j < l; ++j) {
          for (const auto& t : im.terms[b][j]) {
            auto& v = got[im.source.lambda[t.gamma]];
            if (v.empty()) v.assign(l, Scalar::zero(QQ));
            v[j] = t.coeff;
          }
        }
        CAPTURE(alg->name());
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("interpolation map is well defined") {
  auto r = ring({"x"}, {"t"});
  AffineScheme x(r, {P("x^2 - t", r)});
  for (const auto& alg : {dual(), make_truncated(QQ, 1, 2)}) {
    for (unsigned m = 1; m <= 2; ++m) {
      const auto im = interpolation_map(x, m, derivation(alg, base_ring_of(r)));
      CHECK(is_well_defined(im.morphism));
    }
  }
  auto r2 = ring({"x", "y"}, {"t"});
  AffineScheme circle(r2, {P("x^2 + y^2 - t^2", r2)});
  CHECK(is_well_defined(interpolation_map(circle, 2, derivation(dual(), base_ring_of(r2))).morphism));
  AffineScheme parabola(r2, {P("y - x^2 - t", r2)});
  CHECK(is_well_defined(interpolation_map(parabola, 2, derivation(make_truncated(QQ, 1, 2), base_ring_of(r2))).morphism));
}

TEST_CASE("dropping the multinomial weights breaks well-definedness") {
  auto r = ring({"x"}, {"t"});
  AffineScheme x(r, {P("x^2 - t*x", r)});
  for (const auto& alg : {dual(), make_truncated(QQ, 1, 2)}) {
    const auto im1 = interpolation_map(x, 1, derivation(alg, base_ring_of(r)));
    CHECK(is_well_defined(unweighted(im1)));
    const auto im = interpolation_map(x, 2, derivation(alg, base_ring_of(r)));
    CHECK(is_well_defined(im.morphism));
    CHECK_FALSE(is_well_defined(unweighted(im)));
  }
}

TEST_CASE("surjectivity on fibers") {
  auto r = ring({"x", "y"}, {"t"});
  const auto k = base_ring_of(r);
  AffineScheme conic(r, {P("x^2 + y^2 - t^2", r)});
  const auto p = point(r, {"t", "0"});
  const auto base = scalars({"3"});
  for (const auto& alg : {dual(), make_truncated(QQ, 1, 2)}) {
    for (unsigned m = 1; m <= 2; ++m) {
      const auto rep = check_surjectivity(interpolation_map(conic, m, derivation(alg, k)), p, base, 1);
      CAPTURE(rep.detail);
      CHECK(rep.status == SurjectivityReport::Status::Pass);
      CHECK(rep.image_inside_target);
      CHECK(rep.jacobian_rank == 1);
    }
  }

  AffineScheme node(r, {P("x*y", r)});
  const auto skip = check_surjectivity(interpolation_map(node, 1, derivation(dual(), k)), point(r, {"0", "0"}),
                                       scalars({"0"}), 1);
  CHECK(skip.status == SurjectivityReport::Status::Skip);
  CHECK(to_string(skip.status) == "skip");

  const auto plane = check_surjectivity(interpolation_map(AffineScheme(r, {}), 2, derivation(dual(), k)),
                                        point(r, {"2", "-3"}), scalars({"5"}), 2);
  CHECK(plane.status == SurjectivityReport::Status::Pass);
  CHECK(plane.target_kernel == plane.image_rank);

  CHECK_THROWS_AS(check_surjectivity(interpolation_map(conic, 1, derivation(dual(), k)), point(r, {"t", "t"}),
                                     base, 1),
                  InvalidPointError);
}

TEST_CASE("fiber matrices carry labels") {
  auto r = ring({"x"}, {"t"});
  AffineScheme x(r, {P("x^2 - t^2", r)});
  const auto im = interpolation_map(x, 1, derivation(dual(), base_ring_of(r)));
  const auto fm = fiber_matrices_at(im, point(r, {"t"}), scalars({"2"}));
  CHECK(fm.phi.row_labels == Strs{"z_1_0", "z_1_1"});
  CHECK(fm.phi.col_labels == Strs{"z_1_0", "z_0_1"});
  CHECK(fm.phi.rows() == 2);
  CHECK(fm.phi.cols() == 2);
  CHECK(fm.nabla_point.size() == 2);
}
