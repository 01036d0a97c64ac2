#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prol/scalar.hpp"

namespace prol {

/// Variable context k[x] = F[t_1..t_s][x_1..x_r]. Scheme variables come first,
/// base-ring generators last; that order is the storage, printing and
/// elimination order everywhere.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> scheme_vars, std::vector<std::string> base_gens = {});

  Field field() const { return field_; }
  std::size_t size() const { return names_.size(); }
  std::size_t num_scheme() const { return num_scheme_; }
  std::size_t num_base() const { return names_.size() - num_scheme_; }
  bool is_base(std::size_t i) const { return i >= num_scheme_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::vector<std::string> scheme_vars() const;
  std::vector<std::string> base_gens() const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.num_scheme_ == b.num_scheme_ && a.names_ == b.names_;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  std::size_t num_scheme_;
  std::unordered_map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> scheme_vars, std::vector<std::string> base_gens = {});
/// The base ring k of a context: same field and base generators, no scheme variables.
RingPtr base_ring_of(const RingPtr& ring);
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Dense exponent vector sized to its ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  std::uint64_t degree() const;
  bool is_one() const;
  /// True when this divides o componentwise.
  bool divides(const Monomial& o) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::vector<std::uint32_t> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded lexicographic comparison: true when a > b.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial over a Ring. Terms are kept in descending graded-lex
/// order with no zero coefficients; the zero polynomial has no terms.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, std::vector<Term> terms);

  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly constant(RingPtr ring, long c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly variable(RingPtr ring, std::string_view name);
  static Poly monomial(RingPtr ring, Monomial m, Scalar c);

  const RingPtr& ring() const { return ring_; }
  Field field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term, zero if none.
  Scalar constant_term() const;
  std::int64_t degree() const;  // -1 for zero
  /// Degree in the given subset of variables.
  std::int64_t degree_in(std::span<const std::size_t> vars) const;
  bool mentions(std::size_t var) const;
  bool mentions_scheme_vars() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly scaled(const Scalar& c) const;
  Poly pow(unsigned n) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& p) { return p.scaled(c); }
  friend bool operator==(const Poly& a, const Poly& b);

  /// Ring homomorphism: variable i of this ring maps to images[i] (all in `target`).
  Poly substitute(const RingPtr& target, std::span<const Poly> images) const;
  /// Moves this polynomial into a ring that contains all its variables by name.
  Poly embed(const RingPtr& target) const;
  /// Coefficient of x^mono.
  Scalar coefficient(const Monomial& mono) const;

  std::string to_string() const;

 private:
  void check_ring(const Poly& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Combines like terms, drops zeros and sorts into canonical order.
std::vector<Term> normalize_terms(std::vector<Term> terms);

/// Sorts a generator list into canonical order and removes zeros.
std::vector<Poly> canonical_sort(std::vector<Poly> gens);
/// Total order on polynomials of one ring used by canonical_sort.
bool poly_less(const Poly& a, const Poly& b);

/// Divided-power operator D^alpha: x^beta -> binom(beta, alpha) x^(beta - alpha).
/// `alpha` is indexed like the ring's variables.
Poly hasse_derivative(const Poly& p, const Monomial& alpha);

/// Ordinary partial derivative with respect to variable `var`.
Poly partial_derivative(const Poly& p, std::size_t var);

/// All exponent vectors over `nvars` slots with total degree in [lo, hi],
/// in graded-lex descending-within-degree order (degree ascending).
std::vector<std::vector<std::uint32_t>> exponents_up_to(std::size_t nvars, unsigned lo, unsigned hi);

/// Pairs (alpha, D^alpha P) for all alpha over the scheme variables with
/// |alpha| <= bound whose derivative is nonzero; alpha = 0 first.
std::vector<std::pair<Monomial, Poly>> taylor_shift(const Poly& p, unsigned bound);

}  // namespace prol
