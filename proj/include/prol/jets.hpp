#pragma once

#include <vector>

#include "prol/matrix.hpp"
#include "prol/prolong.hpp"

namespace prol {

/// Jet^n(X): variables x, then z_alpha for 0 < |alpha| <= n (graded-lex), then base generators.
struct JetScheme {
  AffineScheme scheme;
  AffineScheme source;
  unsigned order = 0;
  std::vector<std::vector<std::uint32_t>> lambda;

  std::size_t z_offset() const { return source.num_vars(); }
  std::size_t z_index(std::size_t a) const { return source.num_vars() + a; }
};

/// Exponent vectors 0 < |alpha| <= n over r variables, degree ascending.
std::vector<std::vector<std::uint32_t>> jet_multi_indices(std::size_t r, unsigned n);
/// "z_a1_a2_..."
std::string jet_var_name(std::span<const std::uint32_t> alpha);

/// For every generator P: P itself, then sum_alpha D^alpha(x^delta P) z_alpha for each
/// scheme monomial x^delta with |delta| <= n - 1 (delta = 0 first, degree ascending).
JetScheme jet_scheme(const AffineScheme& x, unsigned n);

/// z-linear generators at a scalar point as a matrix over the field (columns = z variables).
/// X must not mention base generators; see specialize_base.
ExactMatrix jet_fiber(const JetScheme& j, const std::vector<Scalar>& p);
ExactMatrix jet_fiber(const AffineScheme& x, unsigned n, const std::vector<Scalar>& p);

/// Substitutes scalar values for every base generator (the result has no base generators).
AffineScheme specialize_base(const AffineScheme& x, std::span<const Scalar> values);
/// Point coordinates as scalars; throws DomainError if a coordinate is not constant.
std::vector<Scalar> scalar_point(const Point& p);
Point constant_point(const RingPtr& ring, std::span<const Scalar> p);

/// Jet^n(f): x-coordinates map by f, z'_beta -> sum_alpha c_{beta,alpha}(x) z_alpha with
/// c_{beta,alpha} the u^alpha coefficient of prod_i (f_i(x + u) - f_i(x))^{beta_i} mod (u)^{n+1}.
PolyMorphism jet_morphism(const PolyMorphism& f, unsigned n);
PolyMorphism jet_morphism(const PolyMorphism& f, const JetScheme& src, const JetScheme& tgt);

/// Matrix of a jet morphism on fiber coordinates over a scalar point of the source.
ExactMatrix jet_linear_part(const PolyMorphism& jf, const JetScheme& src, const JetScheme& tgt,
                            const std::vector<Scalar>& p);

/// Matrix of z-linear forms whose ring consists only of the fiber coordinates.
ExactMatrix linear_form_matrix(const std::vector<Poly>& forms, const RingPtr& ring);
/// Substitutes scalar values for the base generators of a point.
std::vector<Scalar> specialize_point(const Point& p, std::span<const Scalar> base_values);

/// Jacobian of the generators at a scalar point.
ExactMatrix jacobian_at(const AffineScheme& x, const std::vector<Scalar>& p);

}  // namespace prol
