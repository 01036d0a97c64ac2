#include "prol/fixture.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "prol/parse.hpp"
#include "prol/random.hpp"

namespace prol {

namespace {

std::string as_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw FixtureError("expected a string or integer, got " + j.dump());
}

Field parse_field(const Json& j) {
  if (j.is_null()) return Field::rationals();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Q" || s == "QQ") return Field::rationals();
    if (s.rfind("F_", 0) == 0) return Field::prime(std::stoull(s.substr(2)));
    throw FixtureError("unknown field '" + s + "'");
  }
  if (j.is_number_unsigned() || j.is_number_integer()) return Field::prime(j.get<std::uint64_t>());
  if (j.is_object() && j.contains("prime")) return Field::prime(j.at("prime").get<std::uint64_t>());
  throw FixtureError("bad field " + j.dump());
}

std::vector<std::string> string_list(const Json& j) {
  std::vector<std::string> out;
  if (j.is_null()) return out;
  for (const auto& v : j) out.push_back(v.get<std::string>());
  return out;
}

AffineScheme parse_plain_scheme(const Json& j, const RingPtr& ring) {
  std::vector<Poly> gens;
  for (const auto& g : j.value("ideal", Json::array())) gens.push_back(parse_poly(as_text(g), ring));
  return AffineScheme(ring, std::move(gens));
}

}  // namespace

Scalar parse_scalar(const Json& j, Field field) { return Scalar::parse(field, as_text(j)); }

AlgebraPtr parse_algebra(const Json& j, Field field) {
  if (j.contains("builtin")) {
    const auto kind = j.at("builtin").get<std::string>();
    if (kind == "trivial") return make_trivial(field);
    if (kind == "truncated") return make_truncated(field, j.value("vars", 1u), j.at("order").get<unsigned>());
    if (kind == "dual") return make_truncated(field, 1, 1);
    if (kind == "product") return make_product(field, j.at("n").get<unsigned>());
    if (kind == "dring") return make_dring(parse_scalar(j.at("c"), field));
    throw FixtureError("unknown builtin algebra '" + kind + "'");
  }
  if (!j.contains("basis") || !j.contains("mult")) throw FixtureError("algebra needs 'builtin' or 'basis' and 'mult'");
  auto basis = string_list(j.at("basis"));
  AlgebraScheme::Table table;
  for (const auto& row : j.at("mult")) {
    std::vector<std::vector<Scalar>> r;
    for (const auto& cell : row) {
      std::vector<Scalar> v;
      for (const auto& c : cell) v.push_back(parse_scalar(c, field));
      r.push_back(std::move(v));
    }
    table.push_back(std::move(r));
  }
  return std::make_shared<const AlgebraScheme>(field, j.value("name", std::string("custom")), std::move(basis),
                                               std::move(table));
}

OperatorE parse_operator(const Json& j, const AlgebraPtr& alg, const RingPtr& base) {
  auto op = OperatorE::standard(alg, base);
  std::vector<AlgebraElement> images = op.images();
  const Json imgs = j.is_object() ? j.value("images", Json::object()) : Json::object();
  for (auto it = imgs.begin(); it != imgs.end(); ++it) {
    auto idx = base->index_of(it.key());
    if (!idx) throw FixtureError("operator image for unknown base generator '" + it.key() + "'");
    if (it.value().size() != alg->rank()) {
      throw FixtureError("operator image for '" + it.key() + "' needs " + std::to_string(alg->rank()) + " slots");
    }
    std::vector<Poly> coords;
    for (const auto& c : it.value()) coords.push_back(parse_poly(as_text(c), base));
    images[*idx] = AlgebraElement(alg, std::move(coords));
  }
  return OperatorE(alg, base, std::move(images));
}

OperatorSpec parse_operator_spec(const Json& j, Field field, const RingPtr& base) {
  OperatorSpec out;
  out.algebra = parse_algebra(j.at("algebra"), field);
  out.op = parse_operator(j.value("operator", Json::object()), out.algebra, base);
  return out;
}

ExactMatrix parse_matrix(const Json& j, Field field) {
  std::vector<std::vector<Scalar>> rows;
  std::size_t cols = 0;
  const Json& body = j.is_object() ? j.at("rows") : j;
  for (const auto& r : body) {
    std::vector<Scalar> row;
    for (const auto& c : r) row.push_back(parse_scalar(c, field));
    cols = row.size();
    rows.push_back(std::move(row));
  }
  return ExactMatrix(field, std::move(rows), cols);
}

Point parse_point(const Json& j, const RingPtr& ring) {
  const Json& body = j.contains("point") ? j.at("point") : j;
  const auto k = base_ring_of(ring);
  Point out;
  for (const auto& v : ring->scheme_vars()) {
    if (!body.contains(v)) throw FixtureError("point is missing coordinate '" + v + "'");
    out.push_back(parse_poly(as_text(body.at(v)), k));
  }
  return out;
}

Fixture load_fixture(const Json& j, const std::string& name) {
  Fixture f;
  f.raw = j;
  f.name = j.value("name", name);
  f.field = parse_field(j.value("field", Json()));
  const auto base_gens = string_list(j.value("base", Json::array()));
  f.base = make_ring(f.field, {}, base_gens);
  const Json scheme = j.value("scheme", Json::object());
  f.ring = make_ring(f.field, string_list(scheme.value("vars", Json::array())), base_gens);

  if (j.contains("algebra")) {
    OperatorSpec s;
    s.algebra = parse_algebra(j.at("algebra"), f.field);
    s.op = parse_operator(j.value("operator", Json::object()), s.algebra, f.base);
    f.first = std::move(s);
  }
  if (j.contains("scheme")) {
    const auto ideal = scheme.value("ideal", Json::array());
    const bool valued = std::any_of(ideal.begin(), ideal.end(), [](const Json& g) { return g.is_array(); });
    if (valued) {
      if (!f.first) throw FixtureError("slot-vector generators need an algebra");
      std::vector<AlgebraElement> gens;
      for (const auto& g : ideal) {
        std::vector<Poly> coords(f.first->algebra->rank(), Poly(f.ring));
        if (g.is_array()) {
          if (g.size() != coords.size()) throw FixtureError("generator " + g.dump() + " has the wrong number of slots");
          for (std::size_t s = 0; s < coords.size(); ++s) coords[s] = parse_poly(as_text(g[s]), f.ring);
        } else {
          coords[0] = parse_poly(as_text(g), f.ring);
        }
        gens.emplace_back(f.first->algebra, std::move(coords));
      }
      f.valued = AlgebraValuedScheme(f.ring, f.first->algebra, std::move(gens));
    } else {
      f.scheme = parse_plain_scheme(scheme, f.ring);
    }
  }
  if (j.contains("second")) f.second = parse_operator_spec(j.at("second"), f.field, f.base);
  if (j.contains("alpha")) f.alpha = parse_matrix(j.at("alpha"), f.field);
  for (const auto& p : j.value("points", Json::array())) f.points.push_back(parse_point(p, f.ring));
  if (j.contains("sampler")) {
    const auto& s = j.at("sampler");
    PointSampler ps;
    ps.ring = make_ring(f.field, string_list(s.at("params")), base_gens);
    for (const auto& v : f.ring->scheme_vars()) {
      if (!s.at("coords").contains(v)) throw FixtureError("sampler is missing coordinate '" + v + "'");
      ps.numerators.push_back(parse_poly(as_text(s.at("coords").at(v)), ps.ring));
    }
    if (s.contains("denominator")) ps.denominator = parse_poly(as_text(s.at("denominator")), ps.ring);
    f.sampler = std::move(ps);
  }
  const Json bv = j.value("base_values", Json::object());
  for (const auto& g : base_gens) {
    f.base_values.push_back(bv.contains(g) ? parse_scalar(bv.at(g), f.field) : Scalar::zero(f.field));
  }
  if (j.contains("dim")) f.dim = j.at("dim").get<std::size_t>();
  if (j.contains("orders")) {
    for (const auto& o : j.at("orders")) f.orders.push_back(o.get<unsigned>());
  } else if (j.contains("order")) {
    f.orders.push_back(j.at("order").get<unsigned>());
  }
  for (const auto& m : j.value("morphisms", Json::array())) {
    if (!f.scheme) throw FixtureError("morphisms need a plain scheme");
    const auto& t = m.at("target");
    auto tring = make_ring(f.field, string_list(t.value("vars", Json::array())), base_gens);
    auto target = parse_plain_scheme(t, tring);
    std::vector<Poly> images;
    for (const auto& v : tring->scheme_vars()) {
      if (!m.at("images").contains(v)) throw FixtureError("morphism is missing an image for '" + v + "'");
      images.push_back(parse_poly(as_text(m.at("images").at(v)), f.ring));
    }
    f.morphisms.push_back({m.value("name", std::string("f")), PolyMorphism(*f.scheme, target, std::move(images))});
  }
  f.family = string_list(j.value("family", Json::array()));
  f.commuting = j.value("commuting", false);
  if (j.contains("pair_limit")) f.groebner.max_pair_reductions = j.at("pair_limit").get<std::size_t>();
  return f;
}

Fixture load_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FixtureError(path + ": " + e.what());
  }
  return load_fixture(j, std::filesystem::path(path).stem().string());
}

std::vector<Fixture> load_fixtures(const std::string& path) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(path)) return {load_fixture_file(path)};
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(path)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());
  std::vector<Fixture> out;
  for (const auto& p : files) out.push_back(load_fixture_file(p));
  std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
  return out;
}

AdditiveMap named_map(const std::string& spec, const RingPtr& base) {
  if (spec == "id") return [](const Poly& p) { return p; };
  if (spec == "zero") return [](const Poly& p) { return Poly(p.ring()); };
  auto gen_index = [&](const std::string& name) {
    auto idx = base->index_of(name);
    if (!idx) throw FixtureError("unknown base generator '" + name + "' in map '" + spec + "'");
    return *idx;
  };
  if (spec.rfind("diff:", 0) == 0) {
    const std::size_t g = gen_index(spec.substr(5));
    return [g](const Poly& p) { return partial_derivative(p, g); };
  }
  if (spec.rfind("hasse:", 0) == 0) {
    const auto rest = spec.substr(6);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw FixtureError("map '" + spec + "' needs the form hasse:<t>:<k>");
    const std::size_t g = gen_index(rest.substr(0, colon));
    const auto k = static_cast<std::uint32_t>(std::stoul(rest.substr(colon + 1)));
    return [g, k](const Poly& p) {
      Monomial a(p.ring()->size());
      a[g] = k;
      return hasse_derivative(p, a);
    };
  }
  throw FixtureError("unknown additive map '" + spec + "'");
}

std::optional<Point> sample_point(const PointSampler& s, Sampler& rng, bool scalar_params) {
  const auto k = base_ring_of(s.ring);
  std::vector<Poly> images;
  const bool scalars = scalar_params || s.denominator.has_value();
  for (std::size_t i = 0; i < s.ring->num_scheme(); ++i) {
    images.push_back(scalars ? Poly::constant(k, rng.scalar(k->field())) : rng.base_poly(k, 2, 2));
  }
  for (std::size_t g = 0; g < k->num_base(); ++g) images.push_back(Poly::variable(k, g));
  Point out;
  if (s.denominator) {
    Poly d = s.denominator->substitute(k, images);
    if (d.is_zero() || !d.is_constant()) return std::nullopt;
    const Scalar inv = d.constant_term().inverse();
    for (const auto& n : s.numerators) out.push_back(n.substitute(k, images).scaled(inv));
  } else {
    for (const auto& n : s.numerators) out.push_back(n.substitute(k, images));
  }
  return out;
}

Json to_json(const Poly& p) { return p.to_string(); }

Json to_json(const AffineScheme& x) {
  Json ideal = Json::array();
  for (const auto& g : x.gens) ideal.push_back(g.to_string());
  return {{"vars", x.ring->scheme_vars()}, {"base", x.ring->base_gens()}, {"ideal", ideal}};
}

Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& c : m.row(r)) row.push_back(c.to_string());
    rows.push_back(row);
  }
  Json out = {{"cols", m.col_labels}, {"rows", rows}};
  if (!m.row_labels.empty()) out["row_labels"] = m.row_labels;
  return out;
}

Json to_json(const AlgebraElement& a) {
  Json out = Json::array();
  for (const auto& c : a.coords()) out.push_back(c.to_string());
  return out;
}

Json to_json(const Point& p, const RingPtr& ring) {
  Json out = Json::object();
  for (std::size_t i = 0; i < p.size(); ++i) out[ring->name(i)] = p[i].to_string();
  return out;
}

Json to_json(const PolyMorphism& f) {
  Json images = Json::array();
  for (std::size_t i = 0; i < f.images.size(); ++i) {
    images.push_back({f.target.ring->name(i), f.images[i].to_string()});
  }
  return {{"source_vars", f.source.ring->scheme_vars()}, {"target_vars", f.target.ring->scheme_vars()}, {"images", images}};
}

}  // namespace prol
