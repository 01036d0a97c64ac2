#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "prol/operators.hpp"

namespace prol {

/// Spec(k[x]/I): generators of I over a ring whose scheme variables are x.
struct AffineScheme {
  RingPtr ring;
  std::vector<Poly> gens;

  AffineScheme() = default;
  AffineScheme(RingPtr r, std::vector<Poly> g);

  std::size_t num_vars() const { return ring->num_scheme(); }
  std::vector<std::string> vars() const { return ring->scheme_vars(); }
};

/// A scheme over E(k): each generator is sum_j G_j e_j with G_j in k[x].
struct AlgebraValuedScheme {
  RingPtr ring;
  AlgebraPtr alg;
  std::vector<AlgebraElement> gens;

  AlgebraValuedScheme() = default;
  AlgebraValuedScheme(RingPtr r, AlgebraPtr a, std::vector<AlgebraElement> g);
};

/// Point with coordinates in the base ring k, one per scheme variable.
using Point = std::vector<Poly>;
/// Point with coordinates in E(k).
using AlgebraPoint = std::vector<AlgebraElement>;

/// A point that does not satisfy the defining equations.
class InvalidPointError : public std::invalid_argument {
 public:
  InvalidPointError(const std::string& what, std::vector<std::string> residuals)
      : std::invalid_argument(what), residuals_(std::move(residuals)) {}
  const std::vector<std::string>& residuals() const { return residuals_; }

 private:
  std::vector<std::string> residuals_;
};

/// Generators evaluated at the point (all zero iff the point is valid).
std::vector<Poly> residuals(const AffineScheme& x, const Point& p);
std::vector<AlgebraElement> residuals(const AlgebraValuedScheme& y, const AlgebraPoint& p);
/// Throws InvalidPointError carrying the nonzero residuals.
void require_point(const AffineScheme& x, const Point& p);
void require_point(const AlgebraValuedScheme& y, const AlgebraPoint& p);

/// Name of the j-th basis component of variable `var`.
std::string slot_name(const std::string& var, std::size_t j);

struct WeilRestriction {
  AffineScheme scheme;
  AlgebraPtr alg;
  /// x_i -> sum_j y_{i,j} e_j, as elements of E(k[y]).
  std::vector<AlgebraElement> substitution;
};

/// Restriction of scalars from E(k) to k. Variables y_{i,j} are named
/// "<x_i>_<j>" (i major, j minor); generators are the basis components of each
/// input generator after substituting x_i -> sum_j y_{i,j} e_j (input order
/// major, slot minor, zero components dropped).
WeilRestriction weil_restrict(const AlgebraValuedScheme& y);

/// The ring of the Weil restriction without computing generators.
RingPtr weil_ring(const RingPtr& ring, std::size_t rank);

/// Reads off the basis components of an E(k)-point (validated on both sides).
Point point_down(const AlgebraValuedScheme& y, const AlgebraPoint& p);
/// Reassembles x_i = sum_j y_{i,j} e_j from a k-point of the restriction.
AlgebraPoint point_up(const AlgebraValuedScheme& y, const Point& p);

/// X x_k E^e(k): every coefficient transported through e.
AlgebraValuedScheme base_change_scheme(const AffineScheme& x, const OperatorE& e);

/// Ring map on base generators: images[g] (over `target_base`) for base generator g.
struct BaseMap {
  RingPtr target_base;
  std::vector<Poly> images;
};

/// The identity base map of a ring's base generators.
BaseMap identity_base_map(const RingPtr& ring);
/// Coefficients of every generator transported through phi.
AffineScheme base_change_scheme(const AffineScheme& x, const BaseMap& phi);
/// Same map applied to an algebra-valued scheme, coordinatewise.
AlgebraValuedScheme base_change_scheme(const AlgebraValuedScheme& y, const BaseMap& phi);
/// Applies phi to one polynomial living over a ring with the source base generators.
Poly apply_base_map(const Poly& p, const BaseMap& phi, const RingPtr& target);
/// Ring with the same scheme variables and phi's target base generators.
RingPtr base_changed_ring(const RingPtr& ring, const BaseMap& phi);

}  // namespace prol
