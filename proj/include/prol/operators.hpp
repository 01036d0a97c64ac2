#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prol/algebra.hpp"

namespace prol {

/// Input outside an operation's domain (e.g. scheme variables passed to an operator on k).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An E-ring structure e: k -> E(k) on k = F[t_1..t_s], fixed by the images of
/// the generators t_i and extended as the unique ring homomorphism with
/// e(c) = c * e_0 on scalars.
class OperatorE {
 public:
  /// `images[g]` is e(t_g); every image lives over `base` (a ring without scheme variables).
  OperatorE(AlgebraPtr alg, RingPtr base, std::vector<AlgebraElement> images);

  /// The standard structure s: t -> t * e_0.
  static OperatorE standard(AlgebraPtr alg, RingPtr base);

  const AlgebraPtr& algebra() const { return alg_; }
  const RingPtr& base() const { return base_; }
  const AlgebraElement& image(std::size_t g) const { return images_[g]; }
  const std::vector<AlgebraElement>& images() const { return images_; }

  /// Images of the generators moved into `ring`, which must carry the same base generators.
  std::vector<AlgebraElement> images_in(const RingPtr& ring) const;
  /// Variable images for extending e to a ring with scheme variables:
  /// scheme variable x -> x * e_0, base generator t -> e(t).
  std::vector<AlgebraElement> coefficient_images(const RingPtr& ring) const;

 private:
  AlgebraPtr alg_;
  RingPtr base_;
  std::vector<AlgebraElement> images_;
};

/// e(P) for P in the base ring (P may live in a larger ring but must not mention scheme variables).
AlgebraElement extend_operator(const OperatorE& e, const Poly& p);

/// Slot projection d_j = psi_j o e.
Poly operator_slot(const OperatorE& e, const Poly& p, std::size_t j);

struct ComposedOperator {
  AlgebraPtr algebra;  // tensor(E, F)
  OperatorE op;        // ef = E(f) o e
};

/// ef(t) = E(f)(e(t)): apply f to every coordinate of e(t) and re-index into the (j, j') tensor basis.
ComposedOperator compose_operators(const OperatorE& e, const OperatorE& f);

/// Additive self-map of the base ring.
using AdditiveMap = std::function<Poly(const Poly&)>;

/// Slot projections of an operator as a family of additive maps.
std::vector<AdditiveMap> operator_family(const OperatorE& e);

struct LawReport {
  bool pass = true;
  std::size_t trials = 0;
  /// First failing pair (x, y); for unit-law failures y is unset.
  std::optional<Poly> witness_x;
  std::optional<Poly> witness_y;
  std::string detail;
};

/// Checks D_0 = id and D_m(xy) = sum_{a+b=m} D_a(x) D_b(y) on seeded random pairs from `base`.
LawReport check_hasse_axioms(std::span<const AdditiveMap> family, const RingPtr& base, unsigned trials,
                             std::uint64_t seed);

/// Checks that x -> sum_j D_j(x) e_j is a unital additive multiplicative map k -> E(k)
/// on seeded random pairs (the D-ring law for E = dring(c)).
LawReport check_algebra_law(const AlgebraPtr& alg, std::span<const AdditiveMap> family, const RingPtr& base,
                            unsigned trials, std::uint64_t seed);

}  // namespace prol
