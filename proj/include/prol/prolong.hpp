#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "prol/groebner.hpp"
#include "prol/matrix.hpp"
#include "prol/scheme.hpp"

namespace prol {

/// tau(X, E, e) with the data it came from.
struct ProlongationResult {
  AffineScheme scheme;
  AffineScheme source;
  OperatorE op;
  /// x_i -> sum_j y_{i,j} e_j over the ring of `scheme`.
  std::vector<AlgebraElement> substitution;

  const AlgebraPtr& algebra() const { return op.algebra(); }
};

/// weil_restrict(base_change_scheme(X, e)).
ProlongationResult prolong(const AffineScheme& x, const OperatorE& e);

/// Applies e to every coordinate of a k-point and reads off the slots (i major, j minor).
Point nabla(const AffineScheme& x, const OperatorE& e, const Point& a);

/// Polynomial map source -> target: one image (over the source ring) per target scheme variable.
struct PolyMorphism {
  AffineScheme source;
  AffineScheme target;
  std::vector<Poly> images;

  PolyMorphism() = default;
  PolyMorphism(AffineScheme s, AffineScheme t, std::vector<Poly> im);
};

PolyMorphism identity_morphism(const AffineScheme& x);
/// g o f.
PolyMorphism compose(const PolyMorphism& g, const PolyMorphism& f);
/// q(f(x)) for q over the target ring.
Poly pullback(const PolyMorphism& f, const Poly& q);
/// Image of a k-point (coordinates over the base ring).
Point apply_morphism(const PolyMorphism& f, const Point& p);
/// Every target generator pulls back into the source ideal.
bool is_well_defined(const PolyMorphism& f, const GroebnerOptions& opts = {});
/// Same coordinate functions modulo the source ideal.
bool agree_modulo_source(const PolyMorphism& a, const PolyMorphism& b, const GroebnerOptions& opts = {});

/// tau(f): target slot variable (i, j) -> slot j of f_i evaluated at the source substitution,
/// with coefficients transported through e.
PolyMorphism prolong_morphism(const PolyMorphism& f, const OperatorE& e);
/// Same, reusing already computed prolongations of source and target.
PolyMorphism prolong_morphism(const PolyMorphism& f, const ProlongationResult& src, const ProlongationResult& tgt);

/// alpha is not a ring-scheme map compatible with the two operators.
class ComparisonError : public std::invalid_argument {
 public:
  ComparisonError(const std::string& what, std::string witness)
      : std::invalid_argument(what + ": " + witness), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

/// Checks that alpha (rank F x rank E, columns are images of e_j) is unital, multiplicative
/// and carries e to f on base generators; throws ComparisonError otherwise.
void validate_comparison(const ExactMatrix& alpha, const OperatorE& e, const OperatorE& f);
/// alpha-hat: tau(X, E, e) -> tau(X, F, f), z_{i,j'} -> sum_j alpha_{j'j} y_{i,j}.
PolyMorphism compare_map(const AffineScheme& x, const ExactMatrix& alpha, const OperatorE& e, const OperatorE& f);

struct ComposedProlongation {
  ProlongationResult composed;  // tau(X, EF, ef)
  ProlongationResult inner;     // tau(X, E, e)
  ProlongationResult iterated;  // tau(tau(X, E, e), F, f)
  /// Generators of `iterated` rewritten in the ring of `composed` ("x_j_j'" -> "x_{j*lF+j'}").
  std::vector<Poly> reindexed;
};

ComposedProlongation prolong_composed(const AffineScheme& x, const OperatorE& e, const OperatorE& f);

/// Renames iterated slot variables (i, j, j') into the flat tensor slot i, j*lF + j'.
std::vector<Poly> reindex_iterated(const AffineScheme& iterated, const RingPtr& composed_ring);

/// Rewrites polynomials over tau(X, EF) into tau(X, FE) via the basis swap (j, j') -> (j', j).
std::vector<Poly> swap_tensor_slots(std::span<const Poly> gens, const RingPtr& target, std::size_t num_vars,
                                    std::size_t rank_e, std::size_t rank_f);

/// Rewrites an element of EF(R) in the basis of FE(R).
AlgebraElement swap_tensor_element(const AlgebraElement& a, const AlgebraPtr& fe, std::size_t rank_e,
                                   std::size_t rank_f);

}  // namespace prol
