#include "prol/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace prol {

// ---------------------------------------------------------------- Ring

Ring::Ring(Field field, std::vector<std::string> scheme_vars, std::vector<std::string> base_gens)
    : field_(field), num_scheme_(scheme_vars.size()) {
  names_ = std::move(scheme_vars);
  names_.insert(names_.end(), std::make_move_iterator(base_gens.begin()), std::make_move_iterator(base_gens.end()));
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
  }
}

std::vector<std::string> Ring::scheme_vars() const {
  return {names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(num_scheme_)};
}

std::vector<std::string> Ring::base_gens() const {
  return {names_.begin() + static_cast<std::ptrdiff_t>(num_scheme_), names_.end()};
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RingPtr make_ring(Field field, std::vector<std::string> scheme_vars, std::vector<std::string> base_gens) {
  return std::make_shared<const Ring>(field, std::move(scheme_vars), std::move(base_gens));
}

RingPtr base_ring_of(const RingPtr& ring) {
  if (ring->num_scheme() == 0) return ring;
  return make_ring(ring->field(), {}, ring->base_gens());
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0}); }

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](auto v) { return v == 0; });
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > o.e_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] += b.e_[i];
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : e_) h = (h ^ v) * 1099511628211ull;
  return h;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

// ---------------------------------------------------------------- Poly

std::vector<Term> normalize_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  for (const auto& t : terms) {
    if (t.mono.size() != ring_->size()) throw ContextError("monomial size does not match ring");
  }
  terms_ = normalize_terms(std::move(terms));
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  Poly out(std::move(ring));
  if (!c.is_zero()) out.terms_.push_back({Monomial(out.ring_->size()), c});
  return out;
}

Poly Poly::constant(RingPtr ring, long c) {
  const Field f = ring->field();
  return constant(std::move(ring), Scalar(f, c));
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->size());
  m[index] = 1;
  const Field f = ring->field();
  return monomial(std::move(ring), std::move(m), Scalar::one(f));
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

Poly Poly::monomial(RingPtr ring, Monomial m, Scalar c) {
  Poly out(std::move(ring));
  if (!c.is_zero()) out.terms_.push_back({std::move(m), std::move(c)});
  return out;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Scalar Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar::zero(field());
}

std::int64_t Poly::degree() const {
  return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.front().mono.degree());
}

std::int64_t Poly::degree_in(std::span<const std::size_t> vars) const {
  std::int64_t best = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) {
    std::int64_t d = 0;
    for (auto v : vars) d += t.mono[v];
    best = std::max(best, d);
  }
  return best;
}

bool Poly::mentions(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

bool Poly::mentions_scheme_vars() const {
  for (std::size_t i = 0; i < ring_->num_scheme(); ++i) {
    if (mentions(i)) return true;
  }
  return false;
}

void Poly::check_ring(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) throw ContextError("polynomials live in different rings");
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!ring_) return *this = o;
  if (!o.ring_) return *this;
  check_ring(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grlex_greater(terms_[i].mono, o.terms_[j].mono))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || grlex_greater(o.terms_[j].mono, terms_[i].mono)) {
      merged.push_back(o.terms_[j++]);
    } else {
      Scalar c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) merged.push_back({std::move(terms_[i].mono), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      auto m = s.mono * t.mono;
      auto c = s.coeff * t.coeff;
      auto [it, fresh] = acc.try_emplace(std::move(m), c);
      if (!fresh) it->second += c;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, c});
  }
  Poly out(a.ring_);
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return grlex_greater(x.mono, y.mono); });
  out.terms_ = std::move(terms);
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Scalar& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

Poly Poly::substitute(const RingPtr& target, std::span<const Poly> images) const {
  if (images.size() != ring_->size()) throw ContextError("substitution needs one image per variable");
  // Powers are cached per variable.
  std::vector<std::vector<Poly>> powers(ring_->size());
  auto power = [&](std::size_t v, std::uint32_t e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) {
      cache.push_back(constant(target, 1));
      if (!same_ring(images[v].ring(), target)) throw ContextError("substitution image in wrong ring");
    }
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Poly out(target);
  for (const auto& t : terms_) {
    Poly term = constant(target, t.coeff);
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      if (t.mono[v]) term *= power(v, t.mono[v]);
    }
    out += term;
  }
  return out;
}

Poly Poly::embed(const RingPtr& target) const {
  if (same_ring(ring_, target)) return *this;
  if (target->field() != ring_->field()) throw ContextError("cannot embed across fields");
  std::vector<std::size_t> where(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto idx = target->index_of(ring_->name(i));
    if (!idx) {
      if (mentions(i)) throw ContextError("variable '" + ring_->name(i) + "' missing from target ring");
      where[i] = target->size();
    } else {
      where[i] = *idx;
    }
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.mono[i]) m[where[i]] = t.mono[i];
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return Poly(target, std::move(terms));
}

Scalar Poly::coefficient(const Monomial& mono) const {
  for (const auto& t : terms_) {
    if (t.mono == mono) return t.coeff;
  }
  return Scalar::zero(field());
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    c = c.abs();
    bool wrote = false;
    if (!c.is_one() || t.mono.is_one()) {
      out << c.to_string();
      wrote = true;
    }
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (wrote) out << "*";
      out << ring_->name(v);
      if (t.mono[v] > 1) out << "^" << t.mono[v];
      wrote = true;
    }
    first = false;
  }
  return out.str();
}

bool poly_less(const Poly& a, const Poly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    if (!(ta[i].mono == tb[i].mono)) return grlex_greater(tb[i].mono, ta[i].mono);
    if (!(ta[i].coeff == tb[i].coeff)) {
      return ta[i].coeff.to_rational() < tb[i].coeff.to_rational();
    }
  }
  return ta.size() < tb.size();
}

std::vector<Poly> canonical_sort(std::vector<Poly> gens) {
  std::erase_if(gens, [](const Poly& p) { return p.is_zero(); });
  std::stable_sort(gens.begin(), gens.end(), poly_less);
  return gens;
}

// ---------------------------------------------------------------- derivatives

Poly hasse_derivative(const Poly& p, const Monomial& alpha) {
  if (alpha.size() != p.ring()->size()) throw ContextError("multi-index size does not match ring");
  const Field f = p.field();
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (!alpha.divides(t.mono)) continue;
    mpz_class b = 1;
    Monomial m = t.mono;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      b *= binomial(t.mono[i], alpha[i]);
      m[i] -= alpha[i];
    }
    Scalar c = t.coeff * Scalar(f, mpq_class(b));
    if (!c.is_zero()) out.push_back({std::move(m), std::move(c)});
  }
  return Poly(p.ring(), std::move(out));
}

Poly partial_derivative(const Poly& p, std::size_t var) {
  const Field f = p.field();
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono[var] == 0) continue;
    Monomial m = t.mono;
    Scalar c = t.coeff * Scalar(f, static_cast<long>(m[var]));
    m[var] -= 1;
    if (!c.is_zero()) out.push_back({std::move(m), std::move(c)});
  }
  return Poly(p.ring(), std::move(out));
}

namespace {

void compositions(std::size_t nvars, unsigned total, std::size_t pos, std::vector<std::uint32_t>& cur,
                  std::vector<std::vector<std::uint32_t>>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (unsigned k = total + 1; k-- > 0;) {
    cur[pos] = k;
    compositions(nvars, total - k, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> exponents_up_to(std::size_t nvars, unsigned lo, unsigned hi) {
  std::vector<std::vector<std::uint32_t>> out;
  if (nvars == 0) {
    if (lo == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> cur(nvars, 0);
  for (unsigned d = lo; d <= hi; ++d) compositions(nvars, d, 0, cur, out);
  return out;
}

std::vector<std::pair<Monomial, Poly>> taylor_shift(const Poly& p, unsigned bound) {
  const auto& ring = p.ring();
  const std::size_t r = ring->num_scheme();
  std::vector<std::pair<Monomial, Poly>> out;
  for (const auto& a : exponents_up_to(r, 0, bound)) {
    Monomial alpha(ring->size());
    for (std::size_t i = 0; i < r; ++i) alpha[i] = a[i];
    Poly d = hasse_derivative(p, alpha);
    if (!d.is_zero() || alpha.is_one()) out.emplace_back(std::move(alpha), std::move(d));
  }
  return out;
}

}  // namespace prol
