#include "prol/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "prol/parse.hpp"

namespace prol {

namespace {

constexpr std::size_t kMaxValidatedVars = 24;
constexpr std::size_t kSurjectivityPoints = 10;

/// Accumulates verdicts; keeps the first failure.
class Tally {
 public:
  Tally(std::string suite, const Fixture& f, std::uint64_t seed, unsigned trials) : fixture_(f) {
    report_.suite = std::move(suite);
    report_.fixture = f.name;
    report_.seed = seed;
    report_.trials = trials;
  }

  void pass(std::size_t n = 1) { report_.pass += n; }
  void skip(const std::string& why) {
    ++report_.skip;
    note(why);
  }
  void note(const std::string& s) {
    if (std::find(report_.notes.begin(), report_.notes.end(), s) == report_.notes.end()) report_.notes.push_back(s);
  }
  void fail(const std::string& detail, const std::optional<Json>& patch = std::nullopt) {
    ++report_.fail;
    if (report_.witness) return;
    Json fx = fixture_.raw;
    if (patch) {
      for (auto it = patch->begin(); it != patch->end(); ++it) {
        if (it.value().is_null()) {
          fx.erase(it.key());
        } else {
          fx[it.key()] = it.value();
        }
      }
    }
    report_.witness = Json{{"fixture", fx}, {"detail", detail}, {"seed", report_.seed}};
  }
  void check(bool ok, const std::string& detail, const std::optional<Json>& patch = std::nullopt) {
    if (ok) {
      pass();
    } else {
      fail(detail, patch);
    }
  }
  void inconclusive(const std::string& what) {
    inconclusive_ = true;
    note("inconclusive: " + what);
  }

  SuiteReport finish() {
    using S = SuiteReport::Status;
    if (inconclusive_) {
      report_.status = S::Inconclusive;
    } else if (report_.fail > 0) {
      report_.status = S::Fail;
    } else if (report_.pass > 0) {
      report_.status = S::Pass;
    } else {
      report_.status = S::Skip;
    }
    return std::move(report_);
  }

 private:
  const Fixture& fixture_;
  SuiteReport report_;
  bool inconclusive_ = false;
};

Json point_patch(const Point& p, const RingPtr& ring) {
  return Json{{"points", Json::array({to_json(p, ring)})}, {"sampler", nullptr}};
}

std::string show(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ", " : "") + p[i].to_string();
  return out + ")";
}

/// Explicit points first, then sampled ones, up to `count`.
std::vector<Point> gather_points(const Fixture& f, Sampler& rng, std::size_t count, bool scalar) {
  std::vector<Point> out;
  for (const auto& p : f.points) {
    if (out.size() == count) return out;
    out.push_back(p);
  }
  if (!f.sampler) return out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 20 * count + 20; ++attempt) {
    if (auto p = sample_point(*f.sampler, rng, scalar)) out.push_back(std::move(*p));
  }
  return out;
}

/// Random morphism X -> A^n with images of degree <= 2.
PolyMorphism random_to_affine(const AffineScheme& x, std::size_t n, Sampler& rng, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  auto ring = make_ring(x.ring->field(), names, x.ring->base_gens());
  std::vector<std::size_t> vars(x.ring->size());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(rng.poly(x.ring, vars, 2, 3));
  return PolyMorphism(x, AffineScheme(ring, {}), std::move(images));
}

bool needs(Tally& t, bool present, const std::string& what) {
  if (!present) t.skip("fixture has no " + what);
  return present;
}

void roundtrip_suite(Tally& t, const Fixture& f, Sampler& rng, unsigned trials) {
  auto round = [&](const Poly& p) {
    const auto text = p.to_string();
    Poly q = parse_poly(text, p.ring());
    t.check(q == p, "print/parse changed '" + text + "' into '" + q.to_string() + "'");
  };
  std::vector<std::size_t> vars(f.ring->size());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  for (unsigned i = 0; i < trials; ++i) round(rng.poly(f.ring, vars, 3, 4));
  if (f.scheme) {
    for (const auto& g : f.scheme->gens) round(g);
    if (f.first) {
      for (const auto& g : prolong(*f.scheme, *f.first->op).scheme.gens) round(g);
    }
  }
}

void hasse_suite(Tally& t, const Fixture& f, std::uint64_t seed, unsigned trials) {
  std::vector<AdditiveMap> maps;
  std::string kind;
  LawReport law;
  if (!f.family.empty()) {
    for (const auto& s : f.family) maps.push_back(named_map(s, f.base));
    if (f.first && f.first->algebra->rank() == maps.size()) {
      kind = "algebra law for " + f.first->algebra->name();
      law = check_algebra_law(f.first->algebra, maps, f.base, trials, seed);
    } else {
      kind = "Hasse axioms";
      law = check_hasse_axioms(maps, f.base, trials, seed);
    }
  } else if (f.first) {
    maps = operator_family(*f.first->op);
    kind = "algebra law for " + f.first->algebra->name();
    law = check_algebra_law(f.first->algebra, maps, f.base, trials, seed);
  } else {
    t.skip("fixture has no family or operator");
    return;
  }
  if (law.pass) {
    t.pass(law.trials);
    return;
  }
  std::string detail = kind + " fails: " + law.detail;
  if (law.witness_x) detail += "; x = " + law.witness_x->to_string();
  if (law.witness_y) detail += "; y = " + law.witness_y->to_string();
  t.fail(detail);
}

/// Differences between the two coordinate maps, checked against one shared basis.
class ModuloSource {
 public:
  ModuloSource(const AffineScheme& s, GroebnerOptions opts) : s_(s), opts_(opts) {}

  bool agree(const PolyMorphism& a, const PolyMorphism& b) {
    std::vector<Poly> diffs;
    for (std::size_t i = 0; i < a.images.size(); ++i) diffs.push_back(a.images[i] - rename_positional(b.images[i], a.source.ring));
    return contains(diffs);
  }
  bool contains(std::span<const Poly> polys) {
    for (const auto& p : polys) {
      if (p.is_zero() || ideal_member_fast(p)) continue;
      if (!gb_) gb_ = groebner(s_.gens, s_.ring, opts_);
      if (!gb_->contains(p)) return false;
    }
    return true;
  }

 private:
  bool ideal_member_fast(const Poly& p) const {
    for (const auto& g : s_.gens) {
      if (g.num_terms() != p.num_terms() || g.is_zero()) continue;
      const Scalar c = p.terms().front().coeff / g.terms().front().coeff;
      if (g.scaled(c) == p) return true;
    }
    return false;
  }

  const AffineScheme& s_;
  GroebnerOptions opts_;
  std::optional<GroebnerBasis> gb_;
};

void functor_suite(Tally& t, const Fixture& f, Sampler& rng, unsigned trials) {
  if (!needs(t, f.scheme.has_value(), "plain scheme") || !needs(t, f.first.has_value(), "operator")) return;
  const auto& x = *f.scheme;
  const auto& e = *f.first->op;
  const auto tau = prolong(x, e);
  ModuloSource mod_tau(tau.scheme, f.groebner);
  const auto id_tau = identity_morphism(tau.scheme);
  t.check(mod_tau.agree(prolong_morphism(identity_morphism(x), tau, tau), id_tau), "tau(id) is not the identity");

  const unsigned m = f.orders.empty() ? 1 : f.orders.front();
  const auto jx = jet_scheme(x, m);
  ModuloSource mod_jet(jx.scheme, f.groebner);
  t.check(mod_jet.agree(jet_morphism(identity_morphism(x), jx, jx), identity_morphism(jx.scheme)),
          "Jet^" + std::to_string(m) + "(id) is not the identity");

  for (const auto& nm : f.morphisms) {
    const auto tf = prolong_morphism(nm.map, e);
    std::vector<Poly> pulled;
    for (const auto& g : tf.target.gens) pulled.push_back(pullback(tf, g));
    t.check(mod_tau.contains(pulled), "tau(" + nm.name + ") does not land in the target prolongation");
    if (jx.scheme.num_vars() <= kMaxValidatedVars) {
      const auto jf = jet_morphism(nm.map, m);
      std::vector<Poly> jpulled;
      for (const auto& g : jf.target.gens) jpulled.push_back(pullback(jf, g));
      t.check(mod_jet.contains(jpulled), "Jet(" + nm.name + ") does not land in the target jet scheme");
    }
  }

  for (unsigned i = 0; i < trials; ++i) {
    const auto g1 = random_to_affine(x, 2, rng, "u");
    const auto g2 = random_to_affine(g1.target, 1, rng, "v");
    const auto gf = compose(g2, g1);
    const auto t1 = prolong_morphism(g1, e);
    const auto t2 = prolong_morphism(g2, e);
    const Json patch = {{"morphisms", Json::array({to_json(g1), to_json(g2)})}};
    t.check(mod_tau.agree(prolong_morphism(gf, e), compose(t2, t1)), "tau(g o f) != tau(g) o tau(f)", patch);
    if (i < 10) {
      const auto j1 = jet_morphism(g1, m);
      const auto j2 = jet_morphism(g2, m);
      t.check(mod_jet.agree(jet_morphism(gf, m), compose(j2, j1)), "Jet(g o f) != Jet(g) o Jet(f)", patch);
    }
  }
}

void nabla_suite(Tally& t, const Fixture& f, Sampler& rng, unsigned trials) {
  if (!needs(t, f.scheme.has_value(), "plain scheme") || !needs(t, f.first.has_value(), "operator")) return;
  const auto pts = gather_points(f, rng, trials, false);
  if (!needs(t, !pts.empty(), "points or sampler")) return;
  const auto& x = *f.scheme;
  const auto& e = *f.first->op;
  const auto tau = prolong(x, e);
  std::optional<ComposedOperator> ef;
  std::optional<ProlongationResult> tau_ef;
  if (f.second) {
    ef = compose_operators(e, *f.second->op);
    tau_ef = prolong(x, ef->op);
  }
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto& a = pts[k];
    const Json patch = point_patch(a, x.ring);
    const auto bad = residuals(x, a);
    if (std::any_of(bad.begin(), bad.end(), [](const Poly& r) { return !r.is_zero(); })) {
      t.fail("sampled point " + show(a) + " is not on X", patch);
      continue;
    }
    const auto na = nabla(x, e, a);
    const auto res = residuals(tau.scheme, na);
    t.check(std::all_of(res.begin(), res.end(), [](const Poly& r) { return r.is_zero(); }),
            "nabla" + show(a) + " leaves tau(X)", patch);
    for (const auto& nm : f.morphisms) {
      const auto lhs = apply_morphism(prolong_morphism(nm.map, e), na);
      const auto rhs = nabla(nm.map.target, e, apply_morphism(nm.map, a));
      t.check(lhs == rhs, "tau(" + nm.name + ") o nabla != nabla o " + nm.name + " at " + show(a), patch);
    }
    const auto h = random_to_affine(x, 2, rng, "u");
    const auto lhs = apply_morphism(prolong_morphism(h, e), na);
    const auto rhs = nabla(h.target, e, apply_morphism(h, a));
    Json hpatch = patch;
    hpatch["morphisms"] = Json::array({to_json(h)});
    t.check(lhs == rhs, "tau(h) o nabla != nabla o h at " + show(a), hpatch);
    if (ef) {
      const auto direct = nabla(x, ef->op, a);
      const auto iterated = nabla(tau.scheme, *f.second->op, na);
      t.check(direct == iterated, "nabla for ef differs from the iterated nabla at " + show(a), patch);
      const auto r2 = residuals(tau_ef->scheme, direct);
      t.check(std::all_of(r2.begin(), r2.end(), [](const Poly& r) { return r.is_zero(); }),
              "nabla for ef leaves tau(X, EF)", patch);
    }
  }
}

void composition_suite(Tally& t, const Fixture& f) {
  if (!needs(t, f.scheme.has_value(), "plain scheme") || !needs(t, f.first.has_value(), "operator") ||
      !needs(t, f.second.has_value(), "second operator")) {
    return;
  }
  const auto& e = *f.first->op;
  const auto& g = *f.second->op;
  const auto pc = prolong_composed(*f.scheme, e, g);
  t.check(ideal_equal(pc.composed.scheme.gens, pc.reindexed, f.groebner),
          "tau(tau(X, E), F) and tau(X, EF) differ under re-indexing");
  if (!f.commuting) {
    t.note("swap check needs \"commuting\": true");
    return;
  }
  const auto fe = compose_operators(g, e);
  const auto tau_fe = prolong(*f.scheme, fe.op);
  const auto swapped = swap_tensor_slots(pc.composed.scheme.gens, tau_fe.scheme.ring, f.scheme->num_vars(),
                                         e.algebra()->rank(), g.algebra()->rank());
  t.check(ideal_equal(swapped, tau_fe.scheme.gens, f.groebner), "tau for EF and tau for FE differ under the tensor swap");
}

void comparison_suite(Tally& t, const Fixture& f, Sampler& rng, unsigned trials) {
  if (!needs(t, f.scheme.has_value(), "plain scheme") || !needs(t, f.first.has_value(), "operator") ||
      !needs(t, f.second.has_value(), "second operator") || !needs(t, f.alpha.has_value(), "alpha")) {
    return;
  }
  const auto& x = *f.scheme;
  const auto& e = *f.first->op;
  const auto& g = *f.second->op;
  try {
    validate_comparison(*f.alpha, e, g);
  } catch (const ComparisonError& err) {
    t.fail(err.what());
    return;
  }
  t.pass();
  const auto ahat = compare_map(x, *f.alpha, e, g);
  t.check(is_well_defined(ahat, f.groebner), "alpha-hat does not land in tau(X, F)");
  for (const auto& a : gather_points(f, rng, trials, false)) {
    const auto lhs = apply_morphism(ahat, nabla(x, e, a));
    t.check(lhs == nabla(x, g, a), "alpha-hat o nabla_E != nabla_F at " + show(a), point_patch(a, x.ring));
  }
}

void diagrams_suite(Tally& t, const Fixture& f, Sampler& rng) {
  if (!needs(t, f.scheme.has_value(), "plain scheme") || !needs(t, f.first.has_value(), "operator")) return;
  const auto& x = *f.scheme;
  const auto& e = *f.first->op;
  const std::vector<unsigned> orders = f.orders.empty() ? std::vector<unsigned>{1} : f.orders;
  for (unsigned m : orders) {
    const std::string at = " (m = " + std::to_string(m) + ")";
    const Json patch = {{"orders", Json::array({m})}};
    const auto im = interpolation_map(x, m, e);
    const auto laws = coefficient_law_violations(im);
    t.check(laws.empty(), laws.empty() ? "" : laws.front() + at, patch);
    if (im.source.scheme.num_vars() <= kMaxValidatedVars) {
      t.check(is_well_defined(im.morphism, f.groebner), "phi does not land in tau(Jet X)" + at, patch);
    } else {
      t.note("phi validation skipped above " + std::to_string(kMaxValidatedVars) + " source variables");
    }
    std::vector<NamedMorphism> gs = f.morphisms;
    gs.push_back({"random", random_to_affine(x, 1, rng, "u")});
    for (const auto& g : gs) {
      const auto bad = diagram_mismatches(functoriality_paths(g.map, m, e), f.groebner);
      Json gp = patch;
      gp["morphisms"] = Json::array({to_json(g.map)});
      t.check(bad.empty(), "functoriality square for " + g.name + " fails at " + (bad.empty() ? "" : bad.front()) + at,
              gp);
    }
    if (f.second) {
      const auto bad = diagram_mismatches(composition_paths(x, m, e, *f.second->op), f.groebner);
      t.check(bad.empty(), "composition triangle fails at " + (bad.empty() ? "" : bad.front()) + at, patch);
      bool valid_alpha = f.alpha.has_value();
      if (valid_alpha) {
        try {
          validate_comparison(*f.alpha, e, *f.second->op);
        } catch (const ComparisonError&) {
          valid_alpha = false;
          t.note("comparison square skipped: alpha is not a valid comparison");
        }
      }
      if (valid_alpha) {
        const auto bad2 = diagram_mismatches(comparison_paths(x, m, *f.alpha, e, *f.second->op), f.groebner);
        t.check(bad2.empty(), "comparison square fails at " + (bad2.empty() ? "" : bad2.front()) + at, patch);
      }
    }
  }
}

void surjectivity_suite(Tally& t, const Fixture& f, Sampler& rng) {
  if (!needs(t, f.scheme.has_value(), "plain scheme") || !needs(t, f.first.has_value(), "operator") ||
      !needs(t, f.dim.has_value(), "dim")) {
    return;
  }
  const auto pts = gather_points(f, rng, kSurjectivityPoints, true);
  if (!needs(t, !pts.empty(), "points or sampler")) return;
  const std::vector<unsigned> orders = f.orders.empty() ? std::vector<unsigned>{1} : f.orders;
  for (unsigned m : orders) {
    const auto im = interpolation_map(*f.scheme, m, *f.first->op);
    for (const auto& p : pts) {
      Json patch = point_patch(p, f.ring);
      patch["orders"] = Json::array({m});
      const auto r = check_surjectivity(im, p, f.base_values, *f.dim);
      const std::string at = " at " + show(p) + " (m = " + std::to_string(m) + ")";
      switch (r.status) {
        case SurjectivityReport::Status::Pass:
          t.pass();
          break;
        case SurjectivityReport::Status::Skip:
          t.skip("not smooth" + at);
          break;
        case SurjectivityReport::Status::Fail:
          t.fail("phi is not onto the target fiber" + at + ": " + r.detail, patch);
          break;
      }
    }
  }
}

}  // namespace

std::string to_string(SuiteReport::Status s) {
  switch (s) {
    case SuiteReport::Status::Pass:
      return "pass";
    case SuiteReport::Status::Fail:
      return "fail";
    case SuiteReport::Status::Skip:
      return "skip";
    case SuiteReport::Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Json to_json(const SuiteReport& r) {
  Json out = {{"suite", r.suite},   {"fixture", r.fixture}, {"seed", r.seed},  {"trials", r.trials},
              {"pass", r.pass},     {"fail", r.fail},       {"skip", r.skip},  {"status", to_string(r.status)},
              {"notes", r.notes}};
  out["witness"] = r.witness ? *r.witness : Json();
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"roundtrip",   "hasse_axioms", "functor_laws",
                                                 "nabla_naturality", "composition", "comparison",
                                                 "interpolation_diagrams", "surjectivity"};
  return names;
}

SuiteReport run_suite(const std::string& suite, const Fixture& f, std::uint64_t seed, unsigned trials) {
  Tally t(suite, f, seed, trials);
  Sampler rng(seed);
  try {
    if (suite == "roundtrip") {
      roundtrip_suite(t, f, rng, trials);
    } else if (suite == "hasse_axioms") {
      hasse_suite(t, f, seed, trials);
    } else if (suite == "functor_laws") {
      functor_suite(t, f, rng, trials);
    } else if (suite == "nabla_naturality") {
      nabla_suite(t, f, rng, trials);
    } else if (suite == "composition") {
      composition_suite(t, f);
    } else if (suite == "comparison") {
      comparison_suite(t, f, rng, trials);
    } else if (suite == "interpolation_diagrams") {
      diagrams_suite(t, f, rng);
    } else if (suite == "surjectivity") {
      surjectivity_suite(t, f, rng);
    } else {
      throw std::invalid_argument("unknown suite '" + suite + "'");
    }
  } catch (const InconclusiveError& e) {
    t.inconclusive(e.what());
  } catch (const std::invalid_argument& e) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) throw;
    t.fail(std::string("error: ") + e.what());
  } catch (const std::exception& e) {
    t.fail(std::string("error: ") + e.what());
  }
  return t.finish();
}

std::vector<SuiteReport> run_suites(const std::string& suite, const std::vector<Fixture>& fixtures,
                                    std::uint64_t seed, unsigned trials) {
  std::vector<std::string> which = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  std::vector<const Fixture*> sorted;
  for (const auto& f : fixtures) sorted.push_back(&f);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Fixture* a, const Fixture* b) { return a->name < b->name; });
  std::vector<SuiteReport> out;
  for (const auto& s : which) {
    for (const auto* f : sorted) out.push_back(run_suite(s, *f, seed, trials));
  }
  return out;
}

SuiteReport::Status aggregate_status(const std::vector<SuiteReport>& reports) {
  using S = SuiteReport::Status;
  auto rank = [](S s) {
    switch (s) {
      case S::Inconclusive:
        return 3;
      case S::Fail:
        return 2;
      case S::Pass:
        return 1;
      case S::Skip:
        return 0;
    }
    return 0;
  };
  S worst = S::Skip;
  for (const auto& r : reports) {
    if (rank(r.status) > rank(worst)) worst = r.status;
  }
  return worst;
}

Poly rename_positional(const Poly& p, const RingPtr& target) {
  if (same_ring(p.ring(), target)) return p;
  if (p.ring()->size() != target->size()) throw ContextError("rings have different sizes");
  std::vector<Poly> images;
  for (std::size_t i = 0; i < target->size(); ++i) images.push_back(Poly::variable(target, i));
  return p.substitute(target, images);
}

PolyMorphism rebase_morphism(const PolyMorphism& f, const AffineScheme& source, const AffineScheme& target) {
  if (f.images.size() != target.num_vars()) throw ContextError("targets have different sizes");
  std::vector<Poly> images;
  for (const auto& p : f.images) images.push_back(rename_positional(p, source.ring));
  return PolyMorphism(source, target, std::move(images));
}

DiagramPaths functoriality_paths(const PolyMorphism& g, unsigned m, const OperatorE& e) {
  const auto phi_x = interpolation_map(g.source, m, e);
  const auto phi_y = interpolation_map(g.target, m, e);
  const auto tau_g = prolong_morphism(g, phi_x.tau, phi_y.tau);
  const auto first = compose(phi_y.morphism, jet_morphism(tau_g, phi_x.source, phi_y.source));
  const auto jet_g = jet_morphism(g, phi_x.jet, phi_y.jet);
  const auto second = compose(prolong_morphism(jet_g, phi_x.target, phi_y.target), phi_x.morphism);
  return {first, second};
}

DiagramPaths composition_paths(const AffineScheme& x, unsigned m, const OperatorE& e, const OperatorE& f) {
  const auto ef = compose_operators(e, f);
  const auto phi_ef = interpolation_map(x, m, ef.op);
  const auto phi_e = interpolation_map(x, m, e);
  const auto phi_f = interpolation_map(phi_e.tau.scheme, m, f);
  const auto tau_phi = prolong_morphism(phi_e.morphism, phi_f.target, prolong(phi_e.target.scheme, f));
  const auto second = compose(tau_phi, phi_f.morphism);
  return {phi_ef.morphism, rebase_morphism(second, phi_ef.morphism.source, phi_ef.morphism.target)};
}

DiagramPaths comparison_paths(const AffineScheme& x, unsigned m, const ExactMatrix& alpha, const OperatorE& e,
                              const OperatorE& f) {
  const auto phi_e = interpolation_map(x, m, e);
  const auto phi_f = interpolation_map(x, m, f);
  const auto a_x = compare_map(x, alpha, e, f);
  const auto first = compose(phi_f.morphism, jet_morphism(a_x, phi_e.source, phi_f.source));
  const auto a_jet = rebase_morphism(compare_map(phi_e.jet.scheme, alpha, e, f), phi_e.target.scheme,
                                     phi_f.target.scheme);
  const auto second = compose(a_jet, phi_e.morphism);
  return {first, second};
}

std::vector<std::string> diagram_mismatches(const DiagramPaths& d, const GroebnerOptions& opts) {
  if (d.first.images.size() != d.second.images.size()) throw ContextError("diagram paths have different targets");
  std::vector<Poly> diffs;
  for (std::size_t i = 0; i < d.first.images.size(); ++i) {
    diffs.push_back(d.first.images[i] - rename_positional(d.second.images[i], d.first.source.ring));
  }
  std::vector<std::string> out;
  std::optional<GroebnerBasis> gb;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i].is_zero()) continue;
    if (!gb) gb = groebner(d.first.source.gens, d.first.source.ring, opts);
    if (!gb->contains(diffs[i])) out.push_back(d.first.target.ring->name(i));
  }
  return out;
}

}  // namespace prol
