#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "prol/poly.hpp"

namespace prol {

/// The pair-reduction budget ran out before the basis was complete. Callers
/// must treat the question as undecided.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerOptions {
  std::size_t max_pair_reductions = 50000;
};

/// Reduced Groebner basis under graded reverse lex on the ring's variable
/// order (scheme variables first, base generators last and therefore smallest).
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Poly> gens, std::size_t pair_reductions)
      : ring_(std::move(ring)), gens_(std::move(gens)), pair_reductions_(pair_reductions) {}

  const RingPtr& ring() const { return ring_; }
  /// Monic, pairwise tail-irreducible, sorted by leading monomial.
  const std::vector<Poly>& gens() const { return gens_; }
  bool reduced() const { return true; }
  bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero(); }
  std::size_t pair_reductions() const { return pair_reductions_; }

  Poly normal_form(const Poly& p) const;
  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::size_t pair_reductions_;
};

GroebnerBasis groebner(std::span<const Poly> gens, const RingPtr& ring, const GroebnerOptions& opts = {});

/// Leading monomial of p under graded reverse lex.
Monomial grevlex_leading(const Poly& p);

/// Whether every S-polynomial of the list reduces to zero modulo the list.
bool satisfies_buchberger_criterion(std::span<const Poly> basis);

/// Zero, a scalar multiple of a generator, or zero normal form.
bool ideal_member(const Poly& p, std::span<const Poly> gens, const GroebnerOptions& opts = {});
/// Every generator of `sub` lies in the ideal generated by `gens`.
bool ideal_contains(std::span<const Poly> gens, std::span<const Poly> sub, const GroebnerOptions& opts = {});
/// Mutual containment of the generated ideals.
bool ideal_equal(std::span<const Poly> a, std::span<const Poly> b, const GroebnerOptions& opts = {});

}  // namespace prol
