#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "prol/poly.hpp"

namespace prol {

/// A structure-constant table that is not a commutative unital associative algebra.
class AlgebraValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite free algebra scheme given by a basis e_0 = 1, e_1, ..., e_{l-1} and
/// structure constants e_i * e_j = sum_k c_ij^k e_k over the scalar field.
class AlgebraScheme {
 public:
  using Table = std::vector<std::vector<std::vector<Scalar>>>;

  /// Validates the unit law for e_0, commutativity and associativity.
  AlgebraScheme(Field field, std::string name, std::vector<std::string> basis, Table mult);

  Field field() const { return field_; }
  const std::string& name() const { return name_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  /// Coefficient vector of e_i * e_j.
  const std::vector<Scalar>& product(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  const Table& table() const { return mult_; }

  /// Multiplies two coefficient vectors of scalars.
  std::vector<Scalar> multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;

 private:
  Field field_;
  std::string name_;
  std::vector<std::string> basis_;
  Table mult_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraScheme>;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// The scalar algebra S itself (rank 1).
AlgebraPtr make_trivial(Field field);
/// F[eta_1..eta_r]/(eta)^{order+1} with its monomial basis ordered graded-lex, e_0 = 1.
AlgebraPtr make_truncated(Field field, unsigned vars, unsigned order);
/// S^n with the diagonal unit, re-based as e_0 = 1, e_j = f_j (j >= 1) where the
/// f_j are the coordinate idempotents.
AlgebraPtr make_product(Field field, unsigned n);
/// Basis (1, e) with e^2 = c e.
AlgebraPtr make_dring(const Scalar& c);
/// Basis e_j (x) f_j' ordered lexicographically by (j, j').
AlgebraPtr tensor(const AlgebraPtr& e, const AlgebraPtr& f);
/// Index of e_j (x) f_j' in tensor(E, F).
inline std::size_t tensor_index(std::size_t j, std::size_t jp, std::size_t rank_f) { return j * rank_f + jp; }

/// Coefficients of prod_j e_j^{gamma_j} in the basis.
std::vector<Scalar> basis_power_expansion(const AlgebraScheme& alg, std::span<const std::uint32_t> gamma);

/// Element of E(R) where R is a polynomial ring: one polynomial per basis slot.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(AlgebraPtr alg, std::vector<Poly> coords);

  static AlgebraElement zero(AlgebraPtr alg, const RingPtr& ring);
  static AlgebraElement one(AlgebraPtr alg, const RingPtr& ring);
  /// p * e_0.
  static AlgebraElement embed_scalar(AlgebraPtr alg, const Poly& p);
  /// p * e_j.
  static AlgebraElement basis_multiple(AlgebraPtr alg, const Poly& p, std::size_t j);

  const AlgebraPtr& algebra() const { return alg_; }
  const RingPtr& ring() const { return coords_.front().ring(); }
  std::size_t rank() const { return coords_.size(); }
  const Poly& operator[](std::size_t j) const { return coords_[j]; }
  const std::vector<Poly>& coords() const { return coords_; }
  bool is_zero() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator-() const;
  /// Multiplication by an element of R (acting through e_0).
  AlgebraElement scaled(const Poly& p) const;
  AlgebraElement pow(unsigned n) const;

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  /// Applies a ring map to every coordinate.
  AlgebraElement map_coords(const RingPtr& target, std::span<const Poly> images) const;

  std::string to_string() const;

 private:
  void check_same(const AlgebraElement& o) const;

  AlgebraPtr alg_;
  std::vector<Poly> coords_;
};

/// Ring homomorphism R -> E(T): evaluates p with variable i of p's ring sent
/// to images[i] (all elements of E(T)) and scalars sent to c * e_0.
AlgebraElement evaluate_in_algebra(const Poly& p, const AlgebraPtr& alg, const RingPtr& target,
                                   std::span<const AlgebraElement> images);

}  // namespace prol
