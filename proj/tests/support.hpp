#pragma once

#include <string>
#include <vector>

#include "prol/fixture.hpp"
#include "prol/parse.hpp"
#include "prol/suites.hpp"

namespace testing {

using namespace prol;

inline const Field QQ = Field::rationals();

inline RingPtr ring(std::vector<std::string> vars, std::vector<std::string> base = {}, Field f = QQ) {
  return make_ring(f, std::move(vars), std::move(base));
}

inline Poly P(const std::string& text, const RingPtr& r) { return parse_poly(text, r); }

inline Scalar S(const std::string& text, Field f = QQ) { return Scalar::parse(f, text); }

inline std::vector<Poly> Ps(std::initializer_list<const char*> texts, const RingPtr& r) {
  std::vector<Poly> out;
  for (const auto* t : texts) out.push_back(P(t, r));
  return out;
}

inline std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

inline AlgebraPtr dual() { return make_truncated(QQ, 1, 1); }

/// e(t) = t + eta on Q[t] (or any algebra whose slot 1 is the first-order part).
inline OperatorE derivation(const AlgebraPtr& alg, const RingPtr& base) {
  std::vector<Poly> coords(alg->rank(), Poly(base));
  coords[0] = Poly::variable(base, 0);
  coords[1] = Poly::constant(base, 1);
  return OperatorE(alg, base, {AlgebraElement(alg, coords)});
}

inline Point point(const RingPtr& r, std::initializer_list<const char*> coords) {
  const auto k = base_ring_of(r);
  Point out;
  for (const auto* c : coords) out.push_back(P(c, k));
  return out;
}

inline std::vector<Scalar> scalars(std::initializer_list<const char*> vs) {
  std::vector<Scalar> out;
  for (const auto* v : vs) out.push_back(S(v));
  return out;
}

inline Fixture fixture_file(const std::string& name) {
  return load_fixture_file(std::string(PROL_FIXTURE_DIR) + "/" + name);
}

}  // namespace testing
