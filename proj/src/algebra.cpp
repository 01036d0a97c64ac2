#include "prol/algebra.hpp"

#include <sstream>

namespace prol {

namespace {

std::string unit_vector_name(std::size_t i, std::size_t j, std::size_t m) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(m) + ")";
}

std::vector<Scalar> unit_vector(Field f, std::size_t n, std::size_t k) {
  std::vector<Scalar> v(n, Scalar::zero(f));
  v[k] = Scalar::one(f);
  return v;
}

}  // namespace

AlgebraScheme::AlgebraScheme(Field field, std::string name, std::vector<std::string> basis, Table mult)
    : field_(field), name_(std::move(name)), basis_(std::move(basis)), mult_(std::move(mult)) {
  const std::size_t n = basis_.size();
  if (n == 0) throw AlgebraValidationError("algebra must have rank >= 1");
  if (mult_.size() != n) throw AlgebraValidationError("multiplication table has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (mult_[i].size() != n) throw AlgebraValidationError("multiplication table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (mult_[i][j].size() != n) {
        throw AlgebraValidationError("product e_" + std::to_string(i) + "*e_" + std::to_string(j) + " has wrong length");
      }
      for (const auto& c : mult_[i][j]) {
        if (c.field() != field_) throw AlgebraValidationError("structure constant in wrong field");
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar want = Scalar(field_, j == k ? 1L : 0L);
      if (!(mult_[0][j][k] == want)) {
        throw AlgebraValidationError("unit law fails: e_0*e_" + std::to_string(j) + " at component " + std::to_string(k));
      }
      if (!(mult_[j][0][k] == want)) {
        throw AlgebraValidationError("unit law fails: e_" + std::to_string(j) + "*e_0 at component " + std::to_string(k));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!(mult_[i][j][k] == mult_[j][i][k])) {
          throw AlgebraValidationError("commutativity fails: e_" + std::to_string(i) + "*e_" + std::to_string(j) +
                                       " at component " + std::to_string(k));
        }
      }
    }
  }
  // (e_i e_j) e_m == e_i (e_j e_m)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = 0; k < n; ++k) {
          Scalar lhs = Scalar::zero(field_);
          Scalar rhs = Scalar::zero(field_);
          for (std::size_t a = 0; a < n; ++a) {
            lhs += mult_[i][j][a] * mult_[a][m][k];
            rhs += mult_[j][m][a] * mult_[i][a][k];
          }
          if (!(lhs == rhs)) {
            throw AlgebraValidationError("associativity fails for " + unit_vector_name(i, j, m) + " at component " +
                                         std::to_string(k));
          }
        }
      }
    }
  }
}

std::vector<Scalar> AlgebraScheme::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
  const std::size_t n = rank();
  std::vector<Scalar> out(n, Scalar::zero(field_));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!mult_[i][j][k].is_zero()) out[k] += ab * mult_[i][j][k];
      }
    }
  }
  return out;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field() == b->field() && a->basis() == b->basis() && a->table() == b->table();
}

// ---------------------------------------------------------------- builtins

AlgebraPtr make_trivial(Field field) {
  return std::make_shared<const AlgebraScheme>(field, "trivial", std::vector<std::string>{"1"},
                                               AlgebraScheme::Table{{unit_vector(field, 1, 0)}});
}

AlgebraPtr make_truncated(Field field, unsigned vars, unsigned order) {
  if (vars == 0) throw std::invalid_argument("truncated algebra needs at least one variable");
  const auto monos = exponents_up_to(vars, 0, order);
  const std::size_t n = monos.size();
  std::vector<std::string> basis;
  for (const auto& m : monos) {
    std::string name;
    for (std::size_t v = 0; v < vars; ++v) {
      if (m[v] == 0) continue;
      if (!name.empty()) name += "*";
      name += vars == 1 ? "eta" : "eta" + std::to_string(v + 1);
      if (m[v] > 1) name += "^" + std::to_string(m[v]);
    }
    basis.push_back(name.empty() ? "1" : name);
  }
  AlgebraScheme::Table table(n, std::vector<std::vector<Scalar>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint32_t> sum(vars);
      unsigned deg = 0;
      for (std::size_t v = 0; v < vars; ++v) {
        sum[v] = monos[i][v] + monos[j][v];
        deg += sum[v];
      }
      std::vector<Scalar> prod(n, Scalar::zero(field));
      if (deg <= order) {
        for (std::size_t k = 0; k < n; ++k) {
          if (monos[k] == sum) prod[k] = Scalar::one(field);
        }
      }
      table[i][j] = std::move(prod);
    }
  }
  std::string name = "truncated(" + std::to_string(vars) + "," + std::to_string(order) + ")";
  return std::make_shared<const AlgebraScheme>(field, std::move(name), std::move(basis), std::move(table));
}

AlgebraPtr make_product(Field field, unsigned n) {
  if (n == 0) throw std::invalid_argument("product algebra needs n >= 1");
  std::vector<std::string> basis{"1"};
  for (unsigned j = 1; j < n; ++j) basis.push_back("f" + std::to_string(j));
  AlgebraScheme::Table table(n, std::vector<std::vector<Scalar>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> prod(n, Scalar::zero(field));
      if (i == 0) {
        prod[j] = Scalar::one(field);
      } else if (j == 0 || i == j) {
        prod[i] = Scalar::one(field);
      }
      table[i][j] = std::move(prod);
    }
  }
  return std::make_shared<const AlgebraScheme>(field, "product(" + std::to_string(n) + ")", std::move(basis),
                                               std::move(table));
}

AlgebraPtr make_dring(const Scalar& c) {
  const Field f = c.field();
  const Scalar z = Scalar::zero(f);
  const Scalar o = Scalar::one(f);
  AlgebraScheme::Table table{{{o, z}, {z, o}}, {{z, o}, {z, c}}};
  return std::make_shared<const AlgebraScheme>(f, "dring(" + c.to_string() + ")", std::vector<std::string>{"1", "e"},
                                               std::move(table));
}

AlgebraPtr tensor(const AlgebraPtr& e, const AlgebraPtr& f) {
  if (e->field() != f->field()) throw ContextError("tensor of algebras over different fields");
  const std::size_t le = e->rank();
  const std::size_t lf = f->rank();
  const std::size_t n = le * lf;
  std::vector<std::string> basis(n);
  for (std::size_t j = 0; j < le; ++j) {
    for (std::size_t jp = 0; jp < lf; ++jp) {
      const auto& a = e->basis()[j];
      const auto& b = f->basis()[jp];
      std::string name;
      if (a == "1" && b == "1") {
        name = "1";
      } else if (a == "1") {
        name = "1(x)" + b;
      } else if (b == "1") {
        name = a + "(x)1";
      } else {
        name = a + "(x)" + b;
      }
      basis[tensor_index(j, jp, lf)] = std::move(name);
    }
  }
  AlgebraScheme::Table table(n, std::vector<std::vector<Scalar>>(n));
  for (std::size_t i = 0; i < le; ++i) {
    for (std::size_t ip = 0; ip < lf; ++ip) {
      for (std::size_t j = 0; j < le; ++j) {
        for (std::size_t jp = 0; jp < lf; ++jp) {
          std::vector<Scalar> prod(n, Scalar::zero(e->field()));
          const auto& pe = e->product(i, j);
          const auto& pf = f->product(ip, jp);
          for (std::size_t k = 0; k < le; ++k) {
            if (pe[k].is_zero()) continue;
            for (std::size_t kp = 0; kp < lf; ++kp) {
              if (!pf[kp].is_zero()) prod[tensor_index(k, kp, lf)] = pe[k] * pf[kp];
            }
          }
          table[tensor_index(i, ip, lf)][tensor_index(j, jp, lf)] = std::move(prod);
        }
      }
    }
  }
  return std::make_shared<const AlgebraScheme>(e->field(), e->name() + "(x)" + f->name(), std::move(basis),
                                               std::move(table));
}

std::vector<Scalar> basis_power_expansion(const AlgebraScheme& alg, std::span<const std::uint32_t> gamma) {
  if (gamma.size() != alg.rank()) throw std::invalid_argument("exponent vector length must equal the algebra rank");
  std::vector<Scalar> acc = unit_vector(alg.field(), alg.rank(), 0);
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    const auto ej = unit_vector(alg.field(), alg.rank(), j);
    for (std::uint32_t k = 0; k < gamma[j]; ++k) acc = alg.multiply(acc, ej);
  }
  return acc;
}

// ---------------------------------------------------------------- elements

AlgebraElement::AlgebraElement(AlgebraPtr alg, std::vector<Poly> coords) : alg_(std::move(alg)), coords_(std::move(coords)) {
  if (coords_.size() != alg_->rank()) throw ContextError("algebra element has wrong number of coordinates");
  for (const auto& c : coords_) {
    if (!same_ring(c.ring(), coords_.front().ring())) throw ContextError("algebra element coordinates in different rings");
    if (c.field() != alg_->field()) throw ContextError("algebra element coordinates over wrong field");
  }
}

AlgebraElement AlgebraElement::zero(AlgebraPtr alg, const RingPtr& ring) {
  const std::size_t n = alg->rank();
  return AlgebraElement(std::move(alg), std::vector<Poly>(n, Poly(ring)));
}

AlgebraElement AlgebraElement::one(AlgebraPtr alg, const RingPtr& ring) {
  return embed_scalar(std::move(alg), Poly::constant(ring, 1));
}

AlgebraElement AlgebraElement::embed_scalar(AlgebraPtr alg, const Poly& p) { return basis_multiple(std::move(alg), p, 0); }

AlgebraElement AlgebraElement::basis_multiple(AlgebraPtr alg, const Poly& p, std::size_t j) {
  std::vector<Poly> c(alg->rank(), Poly(p.ring()));
  c.at(j) = p;
  return AlgebraElement(std::move(alg), std::move(c));
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (!same_algebra(alg_, o.alg_)) throw ContextError("algebra mismatch: " + alg_->name() + " vs " + o.alg_->name());
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same(o);
  for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += o.coords_[j];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same(o);
  for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= o.coords_[j];
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_same(b);
  const auto& alg = *a.alg_;
  const std::size_t n = alg.rank();
  std::vector<Poly> out(n, Poly(a.ring()));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coords_[j].is_zero()) continue;
      const auto& prod = alg.product(i, j);
      bool any = false;
      for (const auto& c : prod) any = any || !c.is_zero();
      if (!any) continue;
      const Poly ab = a.coords_[i] * b.coords_[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!prod[k].is_zero()) out[k] += ab.scaled(prod[k]);
      }
    }
  }
  return AlgebraElement(a.alg_, std::move(out));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return same_algebra(a.alg_, b.alg_) && a.coords_ == b.coords_;
}

AlgebraElement AlgebraElement::scaled(const Poly& p) const {
  AlgebraElement out = *this;
  for (auto& c : out.coords_) c *= p;
  return out;
}

AlgebraElement AlgebraElement::pow(unsigned n) const {
  AlgebraElement result = one(alg_, ring());
  AlgebraElement base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

AlgebraElement AlgebraElement::map_coords(const RingPtr& target, std::span<const Poly> images) const {
  std::vector<Poly> c;
  c.reserve(coords_.size());
  for (const auto& p : coords_) c.push_back(p.substitute(target, images));
  return AlgebraElement(alg_, std::move(c));
}

std::string AlgebraElement::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) out << ", ";
    out << coords_[j].to_string();
  }
  out << ")";
  return out.str();
}

AlgebraElement evaluate_in_algebra(const Poly& p, const AlgebraPtr& alg, const RingPtr& target,
                                   std::span<const AlgebraElement> images) {
  const auto& ring = *p.ring();
  if (images.size() != ring.size()) throw ContextError("evaluation needs one image per variable");
  std::vector<std::vector<AlgebraElement>> powers(ring.size());
  auto power = [&](std::size_t v, std::uint32_t e) -> const AlgebraElement& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(AlgebraElement::one(alg, target));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  AlgebraElement out = AlgebraElement::zero(alg, target);
  for (const auto& t : p.terms()) {
    AlgebraElement term = AlgebraElement::embed_scalar(alg, Poly::constant(target, t.coeff));
    for (std::size_t v = 0; v < ring.size(); ++v) {
      if (t.mono[v]) term = term * power(v, t.mono[v]);
    }
    out += term;
  }
  return out;
}

}  // namespace prol
