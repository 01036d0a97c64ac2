#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "prol/interpolation.hpp"
#include "prol/random.hpp"

namespace prol {

using Json = nlohmann::ordered_json;

/// A fixture file that does not match the schema.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An E-ring structure read from JSON.
struct OperatorSpec {
  AlgebraPtr algebra;
  std::optional<OperatorE> op;
};

/// Samples points of X: coordinates num_i(s) / den(s) at random parameter values. With a
/// denominator, parameters are random scalars; without one, random polynomials in the base.
struct PointSampler {
  RingPtr ring;  // parameters as scheme variables, same base generators
  std::vector<Poly> numerators;
  std::optional<Poly> denominator;
};

struct NamedMorphism {
  std::string name;
  PolyMorphism map;
};

struct Fixture {
  std::string name;
  Json raw;
  Field field;
  RingPtr ring;  // scheme variables of X, then base generators
  RingPtr base;
  std::optional<AffineScheme> scheme;
  std::optional<AlgebraValuedScheme> valued;  // "ideal" entries given as slot vectors
  std::optional<OperatorSpec> first;
  std::optional<OperatorSpec> second;
  std::optional<ExactMatrix> alpha;
  std::vector<Point> points;
  std::optional<PointSampler> sampler;
  std::vector<Scalar> base_values;
  std::optional<std::size_t> dim;
  std::vector<unsigned> orders;
  std::vector<NamedMorphism> morphisms;
  std::vector<std::string> family;  // additive maps for the Hasse / D-ring suites
  bool commuting = false;
  GroebnerOptions groebner;  // "pair_limit"
};

Fixture load_fixture(const Json& j, const std::string& name = "");
Fixture load_fixture_file(const std::string& path);
/// Every *.json under a directory (sorted by name), or the single file.
std::vector<Fixture> load_fixtures(const std::string& path);

AlgebraPtr parse_algebra(const Json& j, Field field);
OperatorE parse_operator(const Json& j, const AlgebraPtr& alg, const RingPtr& base);
OperatorSpec parse_operator_spec(const Json& j, Field field, const RingPtr& base);
ExactMatrix parse_matrix(const Json& j, Field field);
Scalar parse_scalar(const Json& j, Field field);
/// Point given as {"x": "...", ...} in the order of the ring's scheme variables.
Point parse_point(const Json& j, const RingPtr& ring);

/// Additive self-maps of the base ring by name: "id", "zero", "diff:<t>", "hasse:<t>:<k>".
AdditiveMap named_map(const std::string& spec, const RingPtr& base);

/// Sampled point (coordinates over the base ring); nullopt if the denominator vanished.
std::optional<Point> sample_point(const PointSampler& s, Sampler& rng, bool scalar_params);

Json to_json(const Poly& p);
Json to_json(const AffineScheme& x);
Json to_json(const ExactMatrix& m);
Json to_json(const AlgebraElement& a);
Json to_json(const Point& p, const RingPtr& ring);
Json to_json(const PolyMorphism& f);

}  // namespace prol
