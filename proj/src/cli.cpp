#include "prol/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "prol/parse.hpp"
#include "prol/suites.hpp"

namespace prol {

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string format = "text";
  std::uint64_t seed = 0;
  unsigned trials = 100;
  std::optional<unsigned> order;
  std::string at;
  std::optional<std::size_t> dim;
  bool check_surjectivity = false;
  std::string compose;
  std::string alpha;
  std::string suite = "all";
};

/// Failure that maps to a specific exit code, with optional structured detail.
struct CliError {
  int code;
  std::string kind;
  std::string message;
  Json detail;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitUsage, "io", "cannot open " + path, Json()};
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw CliError{kExitUsage, "json", path + ": " + e.what(), Json()};
  }
}

Fixture single_fixture(const Options& o) {
  if (o.input.empty()) throw CliError{kExitUsage, "usage", "--input is required", Json()};
  if (std::filesystem::is_directory(o.input)) {
    throw CliError{kExitUsage, "usage", "'" + o.command + "' takes a single fixture file", Json()};
  }
  return load_fixture_file(o.input);
}

const AffineScheme& need_scheme(const Fixture& f) {
  if (!f.scheme) throw CliError{kExitUsage, "fixture", "fixture '" + f.name + "' has no plain scheme", Json()};
  return *f.scheme;
}

const OperatorE& need_operator(const Fixture& f) {
  if (!f.first) throw CliError{kExitUsage, "fixture", "fixture '" + f.name + "' has no algebra", Json()};
  return *f.first->op;
}

OperatorE second_operator(const Fixture& f, const std::string& path) {
  if (!path.empty()) return *parse_operator_spec(read_json(path), f.field, f.base).op;
  if (!f.second) throw CliError{kExitUsage, "usage", "needs --compose or a 'second' operator in the fixture", Json()};
  return *f.second->op;
}

unsigned order_of(const Options& o, const Fixture& f) {
  const unsigned m = o.order ? *o.order : (f.orders.empty() ? 1 : f.orders.front());
  if (m == 0) throw CliError{kExitUsage, "usage", "--order must be at least 1", Json()};
  return m;
}

Point point_from(const std::string& path, const Fixture& f) { return parse_point(read_json(path), f.ring); }

Json scheme_json(const AffineScheme& x) {
  Json out = to_json(x);
  out["num_vars"] = x.num_vars();
  return out;
}

Json algebra_json(const AlgebraPtr& a) { return {{"name", a->name()}, {"rank", a->rank()}, {"basis", a->basis()}}; }

Json cmd_weil(const Options& o) {
  const auto f = single_fixture(o);
  AlgebraValuedScheme y;
  if (f.valued) {
    y = *f.valued;
  } else {
    const auto& x = need_scheme(f);
    need_operator(f);
    y = base_change_scheme(x, OperatorE::standard(f.first->algebra, f.base));
  }
  const auto w = weil_restrict(y);
  return {{"command", "weil"}, {"fixture", f.name}, {"algebra", algebra_json(w.alg)}, {"scheme", scheme_json(w.scheme)}};
}

Json cmd_prolong(const Options& o) {
  const auto f = single_fixture(o);
  const auto& x = need_scheme(f);
  const auto& e = need_operator(f);
  Json out = {{"command", "prolong"}, {"fixture", f.name}, {"algebra", algebra_json(e.algebra())}};
  if (o.compose.empty()) {
    out["scheme"] = scheme_json(prolong(x, e).scheme);
    return out;
  }
  const auto g = second_operator(f, o.compose);
  const auto pc = prolong_composed(x, e, g);
  out["algebra"] = algebra_json(pc.composed.algebra());
  out["scheme"] = scheme_json(pc.composed.scheme);
  out["iterated"] = scheme_json(pc.iterated.scheme);
  out["iterated_equal"] = ideal_equal(pc.composed.scheme.gens, pc.reindexed, f.groebner);
  return out;
}

Json fiber_json(const ExactMatrix& m) {
  Json out = to_json(m);
  out["kernel_dim"] = m.cols() - rank(m);
  return out;
}

Json cmd_jet(const Options& o) {
  const auto f = single_fixture(o);
  const auto& x = need_scheme(f);
  const unsigned n = order_of(o, f);
  const auto js = jet_scheme(x, n);
  Json out = {{"command", "jet"}, {"fixture", f.name}, {"order", n}, {"scheme", scheme_json(js.scheme)}};
  if (!o.at.empty()) {
    const auto p = point_from(o.at, f);
    require_point(x, p);
    const auto q = specialize_point(p, f.base_values);
    JetScheme specialized = js;
    specialized.source = specialize_base(js.source, f.base_values);
    specialized.scheme = specialize_base(js.scheme, f.base_values);
    out["point"] = to_json(p, x.ring);
    out["fiber"] = fiber_json(jet_fiber(specialized, q));
  }
  return out;
}

Json surjectivity_json(const SurjectivityReport& r, const Point& p, const RingPtr& ring) {
  return {{"point", to_json(p, ring)},       {"status", to_string(r.status)},
          {"jacobian_rank", r.jacobian_rank}, {"source_kernel", r.source_kernel},
          {"target_kernel", r.target_kernel}, {"image_rank", r.image_rank},
          {"detail", r.detail}};
}

Json cmd_interpolate(const Options& o, int& code) {
  const auto f = single_fixture(o);
  const auto& x = need_scheme(f);
  const auto& e = need_operator(f);
  const unsigned m = order_of(o, f);
  const auto im = interpolation_map(x, m, e);
  Json assignment = Json::array();
  for (std::size_t i = 0; i < im.morphism.images.size(); ++i) {
    assignment.push_back({im.morphism.target.ring->name(i), im.morphism.images[i].to_string()});
  }
  Json out = {{"command", "interpolate"},
              {"fixture", f.name},
              {"order", m},
              {"source_vars", im.source.scheme.vars()},
              {"target_vars", im.target.scheme.vars()},
              {"assignment", assignment}};
  std::optional<Point> at;
  if (!o.at.empty()) {
    at = point_from(o.at, f);
    const auto fm = fiber_matrices_at(im, *at, f.base_values);
    out["point"] = to_json(*at, x.ring);
    out["nabla"] = to_json(fm.nabla_point, im.tau.scheme.ring);
    out["source_fiber"] = fiber_json(fm.source);
    out["target_fiber"] = fiber_json(fm.target);
    out["phi"] = to_json(fm.phi);
  }
  if (o.check_surjectivity) {
    const auto dim = o.dim ? o.dim : f.dim;
    if (!dim) throw CliError{kExitUsage, "usage", "--check-surjectivity needs --dim", Json()};
    std::vector<Point> pts;
    if (at) {
      pts.push_back(*at);
    } else {
      pts = f.points;
      if (f.sampler) {
        Sampler rng(o.seed);
        for (std::size_t tries = 0; pts.size() < 10 && tries < 200; ++tries) {
          if (auto p = sample_point(*f.sampler, rng, true)) pts.push_back(std::move(*p));
        }
      }
    }
    if (pts.empty()) throw CliError{kExitUsage, "usage", "--check-surjectivity needs --at or fixture points", Json()};
    Json reports = Json::array();
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& p : pts) {
      const auto r = check_surjectivity(im, p, f.base_values, *dim);
      reports.push_back(surjectivity_json(r, p, x.ring));
      if (r.status == SurjectivityReport::Status::Pass) ++pass;
      if (r.status == SurjectivityReport::Status::Fail) ++fail;
      if (r.status == SurjectivityReport::Status::Skip) ++skip;
    }
    const std::string status = fail ? "fail" : (pass ? "pass" : "skip");
    out["surjectivity"] = {{"status", status}, {"pass", pass}, {"fail", fail}, {"skip", skip}, {"points", reports}};
    if (fail) code = kExitFail;
  }
  return out;
}

Json cmd_nabla(const Options& o) {
  const auto f = single_fixture(o);
  const auto& x = need_scheme(f);
  const auto& e = need_operator(f);
  if (o.at.empty()) throw CliError{kExitUsage, "usage", "nabla needs --at", Json()};
  const auto p = point_from(o.at, f);
  const auto np = nabla(x, e, p);
  const auto ring = weil_ring(x.ring, e.algebra()->rank());
  return {{"command", "nabla"}, {"fixture", f.name}, {"point", to_json(p, x.ring)}, {"nabla", to_json(np, ring)}};
}

Json cmd_compose(const Options& o) {
  const auto f = single_fixture(o);
  const auto& e = need_operator(f);
  const auto g = second_operator(f, o.compose);
  const auto ef = compose_operators(e, g);
  Json images = Json::object();
  for (std::size_t i = 0; i < ef.op.images().size(); ++i) images[f.base->name(i)] = to_json(ef.op.image(i));
  return {{"command", "compose"}, {"fixture", f.name}, {"algebra", algebra_json(ef.algebra)}, {"images", images}};
}

Json cmd_compare(const Options& o) {
  const auto f = single_fixture(o);
  const auto& x = need_scheme(f);
  const auto& e = need_operator(f);
  const auto g = second_operator(f, o.compose);
  std::optional<ExactMatrix> alpha;
  if (!o.alpha.empty()) {
    alpha = parse_matrix(read_json(o.alpha), f.field);
  } else if (f.alpha) {
    alpha = f.alpha;
  } else {
    throw CliError{kExitUsage, "usage", "compare needs --alpha or an 'alpha' entry in the fixture", Json()};
  }
  validate_comparison(*alpha, e, g);
  const auto map = compare_map(x, *alpha, e, g);
  return {{"command", "compare"},
          {"fixture", f.name},
          {"alpha", to_json(*alpha)},
          {"map", to_json(map)},
          {"well_defined", is_well_defined(map, f.groebner)}};
}

Json cmd_check(const Options& o, int& code) {
  if (o.input.empty()) throw CliError{kExitUsage, "usage", "--input is required", Json()};
  const auto& names = suite_names();
  if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end()) {
    throw CliError{kExitUsage, "usage", "unknown suite '" + o.suite + "'", Json()};
  }
  const auto fixtures = load_fixtures(o.input);
  const auto reports = run_suites(o.suite, fixtures, o.seed, o.trials);
  const auto status = aggregate_status(reports);
  Json list = Json::array();
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    pass += r.pass;
    fail += r.fail;
    skip += r.skip;
  }
  if (status == SuiteReport::Status::Fail) code = kExitFail;
  if (status == SuiteReport::Status::Inconclusive) code = kExitInconclusive;
  return {{"command", "check"}, {"suite", o.suite}, {"seed", o.seed}, {"trials", o.trials},
          {"status", to_string(status)}, {"pass", pass}, {"fail", fail}, {"skip", skip}, {"reports", list}};
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (is_scalar(it.value())) {
        os << pad << it.key() << ": " << scalar_text(it.value()) << "\n";
      } else if (it.value().empty()) {
        os << pad << it.key() << ": " << (it.value().is_array() ? "[]" : "{}") << "\n";
      } else {
        os << pad << it.key() << ":\n";
        render(it.value(), os, indent + 2);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& v : j) {
      if (is_scalar(v)) {
        os << pad << scalar_text(v) << "\n";
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
        os << pad << "[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
        os << "]\n";
      } else {
        os << pad << "-\n";
        render(v, os, indent + 2);
      }
    }
    return;
  }
  os << pad << scalar_text(j) << "\n";
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    render(j, out, 0);
  }
}

int report_error(const CliError& e, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.format == "json") {
    Json j = {{"error", {{"kind", e.kind}, {"message", e.message}}}, {"exit_code", e.code}};
    if (!e.detail.is_null()) j["error"]["detail"] = e.detail;
    out << j.dump(2) << "\n";
  } else {
    err << "error: " << e.message << "\n";
    if (e.detail.is_array()) {
      for (const auto& d : e.detail) err << "  " << scalar_text(d) << "\n";
    }
  }
  return e.code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Prolongation spaces, jet schemes and the interpolating map"};
  app.add_option("command", o.command, "weil | prolong | jet | interpolate | nabla | compose | compare | check")
      ->required()
      ->check(CLI::IsMember({"weil", "prolong", "jet", "interpolate", "nabla", "compose", "compare", "check"}));
  app.add_option("--input", o.input, "fixture file or directory");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "sampling seed");
  app.add_option("--trials", o.trials, "trials per suite");
  app.add_option("--order", o.order, "jet order");
  app.add_option("--at", o.at, "point file");
  app.add_option("--dim", o.dim, "expected dimension of X");
  app.add_flag("--check-surjectivity", o.check_surjectivity, "check phi on fibers");
  app.add_option("--compose", o.compose, "second algebra and operator");
  app.add_option("--alpha", o.alpha, "comparison matrix");
  app.add_option("--suite", o.suite, "suite name or all");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    return report_error({kExitUsage, "usage", e.what(), Json()}, o, out, err);
  }

  int code = kExitPass;
  try {
    Json result;
    if (o.command == "weil") {
      result = cmd_weil(o);
    } else if (o.command == "prolong") {
      result = cmd_prolong(o);
    } else if (o.command == "jet") {
      result = cmd_jet(o);
    } else if (o.command == "interpolate") {
      result = cmd_interpolate(o, code);
    } else if (o.command == "nabla") {
      result = cmd_nabla(o);
    } else if (o.command == "compose") {
      result = cmd_compose(o);
    } else if (o.command == "compare") {
      result = cmd_compare(o);
    } else {
      result = cmd_check(o, code);
    }
    emit(result, o, out);
    return code;
  } catch (const CliError& e) {
    return report_error(e, o, out, err);
  } catch (const InvalidPointError& e) {
    return report_error({kExitFail, "invalid_point", e.what(), Json(e.residuals())}, o, out, err);
  } catch (const ComparisonError& e) {
    return report_error({kExitFail, "comparison", e.what(), Json::array({e.witness()})}, o, out, err);
  } catch (const InconclusiveError& e) {
    return report_error({kExitInconclusive, "inconclusive", e.what(), Json()}, o, out, err);
  } catch (const ParseError& e) {
    return report_error({kExitUsage, "parse", e.what(), Json()}, o, out, err);
  } catch (const FixtureError& e) {
    return report_error({kExitUsage, "fixture", e.what(), Json()}, o, out, err);
  } catch (const Json::exception& e) {
    return report_error({kExitUsage, "fixture", e.what(), Json()}, o, out, err);
  } catch (const std::invalid_argument& e) {
    return report_error({kExitUsage, "input", e.what(), Json()}, o, out, err);
  } catch (const std::exception& e) {
    return report_error({kExitUsage, "error", e.what(), Json()}, o, out, err);
  }
}

}  // namespace prol
