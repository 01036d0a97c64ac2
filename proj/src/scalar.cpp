#include "prol/scalar.hpp"

#include <functional>
#include <limits>

namespace prol {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class m;
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(m.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
  std::uint64_t out = 0;
  if (m != 0) mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, m.get_mpz_t());
  return out;
}

u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 u = abs128(v);
  const std::uint64_t parts[2] = {static_cast<std::uint64_t>(u >> 64), static_cast<std::uint64_t>(u)};
  mpz_class z;
  mpz_import(z.get_mpz_t(), 2, 1, sizeof(std::uint64_t), 0, 0, parts);
  if (neg) z = -z;
  return z;
}

bool fits(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min(); }

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 63)) throw std::invalid_argument("field characteristic out of range");
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

std::string Field::to_string() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

void Scalar::assign(const mpq_class& q) {
  if (fits(q.get_num()) && fits(q.get_den())) {
    n_ = q.get_num().get_si();
    d_ = q.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_shared<const mpq_class>(q);
  }
}

void Scalar::assign_wide(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    n_ = 0;
    d_ = 1;
    big_.reset();
    return;
  }
  const u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (abs128(n) <= static_cast<u128>(kMax) && d <= kMax) {
    n_ = static_cast<std::int64_t>(n);
    d_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  q.canonicalize();
  assign(q);
}

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.is_rational()) {
    assign_wide(v, 1);
  } else {
    n_ = static_cast<std::int64_t>(reduce_mod(mpz_class(v), f.characteristic()));
  }
}

Scalar::Scalar(Field f, const mpq_class& q) : field_(f) {
  if (f.is_rational()) {
    mpq_class c = q;
    c.canonicalize();
    assign(c);
    return;
  }
  const std::uint64_t p = f.characteristic();
  const std::uint64_t den = reduce_mod(q.get_den(), p);
  if (den == 0) throw std::domain_error("denominator not invertible in " + f.to_string());
  n_ = static_cast<std::int64_t>(mulmod(reduce_mod(q.get_num(), p), powmod(den, p - 2, p), p));
}

Scalar Scalar::parse(Field f, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("bad rational literal '" + text + "'");
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_zero() const { return !big_ && n_ == 0; }

bool Scalar::is_one() const { return !big_ && n_ == 1 && d_ == 1; }

int Scalar::sign() const {
  if (!field_.is_rational()) return n_ == 0 ? 0 : 1;
  if (big_) return sgn(*big_);
  return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
}

mpq_class Scalar::to_rational() const {
  if (!field_.is_rational()) {
    const std::uint64_t r = residue();
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
    return mpq_class(z);
  }
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) throw ContextError("scalar field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    if (big_) {
      out.assign(-*big_);
    } else {
      out.n_ = -n_;
    }
  } else if (n_ != 0) {
    out.n_ = static_cast<std::int64_t>(field_.characteristic() - residue());
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (!field_.is_rational()) {
    const std::uint64_t p = field_.characteristic();
    n_ = static_cast<std::int64_t>((static_cast<u128>(residue()) + o.residue()) % p);
    return *this;
  }
  if (!big_ && !o.big_) {
    if (d_ == 1 && o.d_ == 1) {
      assign_wide(static_cast<i128>(n_) + o.n_, 1);
    } else {
      assign_wide(static_cast<i128>(n_) * o.d_ + static_cast<i128>(o.n_) * d_, static_cast<i128>(d_) * o.d_);
    }
    return *this;
  }
  assign(to_rational() + o.to_rational());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (!field_.is_rational()) {
    n_ = static_cast<std::int64_t>(mulmod(residue(), o.residue(), field_.characteristic()));
    return *this;
  }
  if (!big_ && !o.big_) {
    assign_wide(static_cast<i128>(n_) * o.n_, static_cast<i128>(d_) * o.d_);
    return *this;
  }
  assign(to_rational() * o.to_rational());
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar out = *this;
  if (!field_.is_rational()) {
    out.n_ = static_cast<std::int64_t>(powmod(residue(), field_.characteristic() - 2, field_.characteristic()));
  } else if (big_) {
    mpq_class q = 1 / *big_;
    q.canonicalize();
    out.assign(q);
  } else {
    out.assign_wide(d_, n_);
  }
  return out;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.n_ == b.n_ && a.d_ == b.d_;
}

std::string Scalar::to_string() const {
  if (!field_.is_rational()) return std::to_string(residue());
  if (big_) return big_->get_str();
  return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
}

std::size_t Scalar::hash() const {
  if (big_) return mpz_get_ui(big_->get_num_mpz_t()) * 1000003u ^ mpz_get_ui(big_->get_den_mpz_t());
  return std::hash<std::int64_t>{}(n_) * 1000003u ^ std::hash<std::int64_t>{}(d_);
}

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace prol
