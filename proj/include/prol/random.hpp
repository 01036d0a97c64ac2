#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "prol/poly.hpp"

namespace prol {

/// Deterministic generator used by the property suites.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  /// Small nonzero-biased rational p/q with |p| <= 5 and 1 <= q <= 3.
  Scalar scalar(Field f);
  Scalar nonzero_scalar(Field f);
  /// Random polynomial in the listed variables with at most `max_terms` terms of degree <= max_deg.
  Poly poly(const RingPtr& ring, std::span<const std::size_t> vars, unsigned max_deg, unsigned max_terms);
  /// Random polynomial in all base generators of the ring.
  Poly base_poly(const RingPtr& ring, unsigned max_deg, unsigned max_terms);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace prol
