#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

using namespace testing;

TEST_CASE("rational scalars stay reduced") {
  CHECK(S("6/4").to_string() == "3/2");
  CHECK(S("-2/-4").to_string() == "1/2");
  CHECK((S("1/3") + S("1/6")).to_string() == "1/2");
  CHECK((S("1/3") - S("1/3")).is_zero());
  CHECK(S("0/5") == Scalar::zero(QQ));
  CHECK_THROWS_AS(S("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(S("abc"), std::invalid_argument);
  CHECK_THROWS(Scalar::zero(QQ).inverse());
}

TEST_CASE("scalars survive overflow of the machine-word range") {
  Scalar big = S("9223372036854775807");
  Scalar sq = big * big;
  CHECK(sq.to_string() == "85070591730234615847396907784232501249");
  CHECK((sq / big) == big);
  Scalar frac = S("1/9223372036854775807") + S("1/9223372036854775806");
  CHECK((frac - S("1/9223372036854775806")) == S("1/9223372036854775807"));
  CHECK(S("-9223372036854775808").to_string() == "-9223372036854775808");
}

TEST_CASE("prime field arithmetic") {
  const Field f7 = Field::prime(7);
  CHECK(Scalar(f7, 10L).to_string() == "3");
  CHECK(Scalar(f7, -1L).to_string() == "6");
  CHECK((Scalar(f7, 3L) * Scalar(f7, 5L)).to_string() == "1");
  CHECK(Scalar(f7, 3L).inverse() == Scalar(f7, 5L));
  CHECK(Scalar::parse(f7, "1/2") == Scalar(f7, 4L));
  CHECK_THROWS_AS(Scalar::parse(f7, "1/7"), std::domain_error);
  CHECK_THROWS_AS(Field::prime(8), std::invalid_argument);
  CHECK_THROWS_AS(Scalar(f7, 1L) + S("1"), ContextError);
}

TEST_CASE("printing is canonical graded-lex") {
  auto r = ring({"x", "y"}, {"t"});
  CHECK(P("1 + x + x^2", r).to_string() == "x^2 + x + 1");
  CHECK(P("y*x - x*y", r).to_string() == "0");
  CHECK(P("-x + 1", r).to_string() == "-x + 1");
  CHECK(P("t*x + x^2 - 1/2", r).to_string() == "x^2 + x*t - 1/2");
  CHECK(P("(x + y)^2", r).to_string() == "x^2 + 2*x*y + y^2");
  CHECK(P("2*x*y^3 - 3/4*t", r).degree() == 4);
}

TEST_CASE("parser rejects malformed input with positions") {
  auto r = ring({"x"}, {"t"});
  CHECK_THROWS_AS(P("x +", r), ParseError);
  CHECK_THROWS_AS(P("x ^ -1", r), ParseError);
  CHECK_THROWS_AS(P("(x", r), ParseError);
  try {
    P("x + w", r);
    FAIL("expected an unknown identifier");
  } catch (const UnknownIdentifierError& e) {
    CHECK(e.token() == "w");
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("print then parse is the identity on random polynomials") {
  auto r = ring({"x", "y", "z"}, {"t", "s"});
  Sampler rng(11);
  std::vector<std::size_t> all = {0, 1, 2, 3, 4};
  for (int i = 0; i < 200; ++i) {
    const Poly p = rng.poly(r, all, 4, 5);
    CHECK(P(p.to_string(), r) == p);
  }
}

TEST_CASE("ring arithmetic laws on random inputs") {
  auto r = ring({"x", "y"}, {"t"});
  Sampler rng(3);
  std::vector<std::size_t> all = {0, 1, 2};
  for (int i = 0; i < 50; ++i) {
    const Poly a = rng.poly(r, all, 3, 4), b = rng.poly(r, all, 3, 4), c = rng.poly(r, all, 2, 3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Poly(r));
  }
}

TEST_CASE("divided-power derivatives match the factorial oracle") {
  auto r = ring({"x", "y"}, {"t"});
  const Poly p = P("x^3 + 3*x^2*y + t*x*y^2 - 5*y + t^2", r);
  Monomial a(r->size());
  a[0] = 2;
  CHECK(hasse_derivative(p, a).to_string() == "3*x + 3*y");
  CHECK(hasse_derivative(P("x^5", r), a).to_string() == "10*x^3");
  Sampler rng(5);
  std::vector<std::size_t> all = {0, 1, 2};
  for (int i = 0; i < 40; ++i) {
    const Poly q = rng.poly(r, all, 5, 6);
    for (const auto& alpha : oracle::multi_indices(2, 0, 4)) {
      Monomial m(r->size());
      m[0] = alpha[0];
      m[1] = alpha[1];
      CHECK(hasse_derivative(q, m) == oracle::divided_derivative(q, alpha));
    }
  }
}

TEST_CASE("divided powers are characteristic free") {
  const Field f2 = Field::prime(2);
  auto r = ring({"x"}, {}, f2);
  Monomial a(1);
  a[0] = 2;
  CHECK(hasse_derivative(parse_poly("x^2", r), a).to_string() == "1");
  CHECK(partial_derivative(parse_poly("x^2", r), 0).is_zero());
}

TEST_CASE("taylor shift lists nonzero derivatives with alpha = 0 first") {
  auto r = ring({"x"}, {"t"});
  const auto ts = taylor_shift(P("x^2 - t", r), 2);
  REQUIRE(ts.size() == 3);
  CHECK(ts[0].second.to_string() == "x^2 - t");
  CHECK(ts[1].second.to_string() == "2*x");
  CHECK(ts[2].second.to_string() == "1");
}

TEST_CASE("substitution is a ring homomorphism") {
  auto r = ring({"x", "y"}, {"t"});
  auto target = ring({"u"}, {"t"});
  std::vector<Poly> im = {P("u + t", target), P("u^2", target), P("t", target)};
  const Poly a = P("x*y - t", r), b = P("x + y^2", r);
  CHECK((a * b).substitute(target, im) == a.substitute(target, im) * b.substitute(target, im));
  CHECK(a.substitute(target, im).to_string() == "u^3 + u^2*t - t");
}

TEST_CASE("exponent enumeration order") {
  const auto e = exponents_up_to(2, 1, 2);
  REQUIRE(e.size() == 5);
  CHECK(e[0] == std::vector<std::uint32_t>{1, 0});
  CHECK(e[1] == std::vector<std::uint32_t>{0, 1});
  CHECK(e[2] == std::vector<std::uint32_t>{2, 0});
  CHECK(e[3] == std::vector<std::uint32_t>{1, 1});
  CHECK(e[4] == std::vector<std::uint32_t>{0, 2});
}
