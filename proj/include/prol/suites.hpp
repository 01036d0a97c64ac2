#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prol/fixture.hpp"

namespace prol {

/// Outcome of one property suite on one fixture.
struct SuiteReport {
  enum class Status { Pass, Fail, Skip, Inconclusive };

  std::string suite;
  std::string fixture;
  std::uint64_t seed = 0;
  unsigned trials = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  Status status = Status::Skip;
  /// First failure: a fixture that replays it plus what went wrong.
  std::optional<Json> witness;
  std::vector<std::string> notes;
};

std::string to_string(SuiteReport::Status s);
Json to_json(const SuiteReport& r);

/// roundtrip, hasse_axioms, functor_laws, nabla_naturality, composition, comparison,
/// interpolation_diagrams, surjectivity.
const std::vector<std::string>& suite_names();

/// Runs one suite; fixtures lacking the suite's fields come back as Skip.
SuiteReport run_suite(const std::string& suite, const Fixture& f, std::uint64_t seed, unsigned trials);

/// `suite` may be "all". Reports are ordered by suite, then fixture name.
std::vector<SuiteReport> run_suites(const std::string& suite, const std::vector<Fixture>& fixtures,
                                    std::uint64_t seed, unsigned trials);

/// Worst status across reports: Inconclusive over Fail over Pass over Skip.
SuiteReport::Status aggregate_status(const std::vector<SuiteReport>& reports);

/// Renames the variables of p by position into a ring of the same size.
Poly rename_positional(const Poly& p, const RingPtr& target);
/// A morphism with source and target replaced by positionally matching schemes.
PolyMorphism rebase_morphism(const PolyMorphism& f, const AffineScheme& source, const AffineScheme& target);

/// Two ways around a square, as maps with the same source and target.
struct DiagramPaths {
  PolyMorphism first;
  PolyMorphism second;
};

/// phi_Y o Jet^m(tau(g)) and tau(Jet^m(g)) o phi_X.
DiagramPaths functoriality_paths(const PolyMorphism& g, unsigned m, const OperatorE& e);
/// phi for ef, and tau_F(phi_E) o phi_F for tau_E X (positionally rebased onto the first).
DiagramPaths composition_paths(const AffineScheme& x, unsigned m, const OperatorE& e, const OperatorE& f);
/// phi_F o Jet^m(alpha-hat) and alpha-hat o phi_E.
DiagramPaths comparison_paths(const AffineScheme& x, unsigned m, const ExactMatrix& alpha, const OperatorE& e,
                              const OperatorE& f);

/// Coordinate functions that differ modulo the source ideal (names of the target variables).
std::vector<std::string> diagram_mismatches(const DiagramPaths& d, const GroebnerOptions& opts = {});

}  // namespace prol
