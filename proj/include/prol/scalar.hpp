#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace prol {

/// Raised when values from incompatible contexts are combined.
class ContextError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Coefficient field: the rationals or a prime field F_p.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is a prime below 2^63.
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint64_t characteristic() const { return p_; }

  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Exact field element. Rationals are kept reduced with a positive denominator;
/// prime-field residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& q);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }
  /// Parses "a" or "a/b" (optionally signed).
  static Scalar parse(Field f, const std::string& text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Sign used for printing; prime-field values are never negative.
  int sign() const;

  /// The rational value; for prime fields, the residue as an integer.
  mpq_class to_rational() const;
  std::uint64_t residue() const { return static_cast<std::uint64_t>(n_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar abs() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void check_same(const Scalar& o) const;
  /// Stores q, using the inline representation whenever it fits.
  void assign(const mpq_class& q);
  /// Stores the reduced fraction n/d (d > 0) computed in 128 bits.
  void assign_wide(__int128 n, __int128 d);
  bool is_big() const { return big_ != nullptr; }

  Field field_{};
  // Rationals: n_/d_ reduced with d_ > 0 unless big_ is set. Prime fields: residue in n_.
  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

/// Binomial coefficient over the integers.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace prol
