#include "prol/jets.hpp"

namespace prol {

std::vector<std::vector<std::uint32_t>> jet_multi_indices(std::size_t r, unsigned n) {
  if (n == 0) return {};
  return exponents_up_to(r, 1, n);
}

std::string jet_var_name(std::span<const std::uint32_t> alpha) {
  std::string out = "z";
  for (auto a : alpha) out += "_" + std::to_string(a);
  return out;
}

namespace {

RingPtr jet_ring(const RingPtr& ring, const std::vector<std::vector<std::uint32_t>>& lambda) {
  auto vars = ring->scheme_vars();
  for (const auto& a : lambda) {
    auto name = jet_var_name(a);
    if (ring->index_of(name)) throw ContextError("jet variable " + name + " collides with an existing name");
    vars.push_back(std::move(name));
  }
  return make_ring(ring->field(), std::move(vars), ring->base_gens());
}

Monomial scheme_monomial(const RingPtr& ring, std::span<const std::uint32_t> a) {
  Monomial m(ring->size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i];
  return m;
}

}  // namespace

JetScheme jet_scheme(const AffineScheme& x, unsigned n) {
  if (n == 0) throw std::invalid_argument("jet order must be at least 1");
  const std::size_t r = x.num_vars();
  JetScheme out;
  out.source = x;
  out.order = n;
  out.lambda = jet_multi_indices(r, n);
  auto ring = jet_ring(x.ring, out.lambda);
  std::vector<Poly> gens;
  const auto deltas = exponents_up_to(r, 0, n - 1);
  for (const auto& p : x.gens) {
    gens.push_back(p.embed(ring));
    for (const auto& d : deltas) {
      const Poly q = Poly::monomial(x.ring, scheme_monomial(x.ring, d), Scalar::one(x.ring->field())) * p;
      Poly acc(ring);
      for (std::size_t a = 0; a < out.lambda.size(); ++a) {
        Poly da = hasse_derivative(q, scheme_monomial(x.ring, out.lambda[a]));
        if (!da.is_zero()) acc += da.embed(ring) * Poly::variable(ring, r + a);
      }
      if (!acc.is_zero()) gens.push_back(std::move(acc));
    }
  }
  out.scheme = AffineScheme(ring, std::move(gens));
  return out;
}

std::vector<Scalar> scalar_point(const Point& p) {
  std::vector<Scalar> out;
  for (const auto& c : p) {
    if (!c.is_constant()) throw DomainError("point coordinate is not a scalar: " + c.to_string());
    out.push_back(c.is_zero() ? Scalar::zero(c.field()) : c.constant_term());
  }
  return out;
}

Point constant_point(const RingPtr& ring, std::span<const Scalar> p) {
  const auto k = base_ring_of(ring);
  Point out;
  for (const auto& c : p) out.push_back(Poly::constant(k, c));
  return out;
}

AffineScheme specialize_base(const AffineScheme& x, std::span<const Scalar> values) {
  if (values.size() != x.ring->num_base()) throw std::invalid_argument("need one value per base generator");
  BaseMap phi{make_ring(x.ring->field(), {}), {}};
  for (const auto& v : values) phi.images.push_back(Poly::constant(phi.target_base, v));
  return base_change_scheme(x, phi);
}

namespace {

/// Values for substituting a scalar point into a ring whose first |p| variables are the point's.
std::vector<Poly> point_substitution(const RingPtr& ring, const RingPtr& target, const std::vector<Scalar>& p,
                                     std::size_t keep_from) {
  std::vector<Poly> images;
  for (std::size_t v = 0; v < ring->size(); ++v) {
    if (v < p.size()) {
      images.push_back(Poly::constant(target, p[v]));
    } else if (v >= keep_from) {
      images.push_back(Poly::variable(target, ring->name(v)));
    } else {
      throw DomainError("point does not cover the variable " + ring->name(v));
    }
  }
  return images;
}

}  // namespace

ExactMatrix linear_form_matrix(const std::vector<Poly>& forms, const RingPtr& zring) {
  const std::size_t ncols = zring->num_scheme();
  ExactMatrix m(zring->field(), 0, ncols);
  for (const auto& f : forms) {
    std::vector<Scalar> row(ncols, Scalar::zero(zring->field()));
    for (const auto& t : f.terms()) {
      if (t.mono.degree() != 1) throw DomainError("form is not linear in the fiber coordinates: " + f.to_string());
      std::size_t v = 0;
      while (t.mono[v] == 0) ++v;
      if (v >= ncols) throw DomainError("fiber form mentions a base generator: " + f.to_string());
      row[v] = t.coeff;
    }
    m.push_row(std::move(row));
  }
  m.col_labels = zring->scheme_vars();
  return m;
}

std::vector<Scalar> specialize_point(const Point& p, std::span<const Scalar> base_values) {
  std::vector<Scalar> out;
  for (const auto& c : p) {
    const auto& ring = c.ring();
    if (base_values.size() != ring->num_base()) throw std::invalid_argument("need one value per base generator");
    auto k0 = make_ring(ring->field(), {});
    std::vector<Poly> images;
    for (std::size_t v = 0; v < ring->num_scheme(); ++v) images.push_back(Poly(k0));
    for (const auto& b : base_values) images.push_back(Poly::constant(k0, b));
    if (c.mentions_scheme_vars()) throw DomainError("point coordinate mentions scheme variables");
    Poly v = c.substitute(k0, images);
    out.push_back(v.is_zero() ? Scalar::zero(ring->field()) : v.constant_term());
  }
  return out;
}

ExactMatrix jet_fiber(const JetScheme& j, const std::vector<Scalar>& p) {
  const auto& x = j.source;
  if (x.ring->num_base() != 0) throw DomainError("specialize the base generators before computing fibers");
  require_point(x, constant_point(x.ring, p));
  std::vector<std::string> zs;
  for (const auto& a : j.lambda) zs.push_back(jet_var_name(a));
  auto zring = make_ring(x.ring->field(), zs);
  const auto images = point_substitution(j.scheme.ring, zring, p, x.num_vars());
  std::vector<Poly> forms;
  for (const auto& g : j.scheme.gens) {
    bool linear = false;
    for (const auto& t : g.terms()) {
      for (std::size_t v = x.num_vars(); v < t.mono.size(); ++v) linear |= t.mono[v] != 0;
    }
    if (linear) forms.push_back(g.substitute(zring, images));
  }
  auto m = linear_form_matrix(forms, zring);
  return m;
}

ExactMatrix jet_fiber(const AffineScheme& x, unsigned n, const std::vector<Scalar>& p) {
  return jet_fiber(jet_scheme(x, n), p);
}

PolyMorphism jet_morphism(const PolyMorphism& f, const JetScheme& src, const JetScheme& tgt) {
  const auto& xr = f.source.ring;
  const std::size_t r = xr->num_scheme();
  const unsigned n = src.order;
  if (tgt.order != n) throw ContextError("jet orders differ");
  // Auxiliary ring: x, u, base.
  auto names = xr->scheme_vars();
  std::string prefix = "u";
  auto clashes = [&](const std::string& pre) {
    for (std::size_t i = 0; i < r; ++i) {
      if (xr->index_of(pre + std::to_string(i))) return true;
    }
    return false;
  };
  while (clashes(prefix)) prefix += "_";
  for (std::size_t i = 0; i < r; ++i) names.push_back(prefix + std::to_string(i));
  auto aux = make_ring(xr->field(), names, xr->base_gens());
  std::vector<std::size_t> uvars;
  for (std::size_t i = 0; i < r; ++i) uvars.push_back(r + i);
  auto truncate = [&](const Poly& p) {
    std::vector<Term> keep;
    for (const auto& t : p.terms()) {
      std::uint64_t d = 0;
      for (auto v : uvars) d += t.mono[v];
      if (d <= n) keep.push_back(t);
    }
    return Poly(aux, std::move(keep));
  };
  auto umono = [&](std::span<const std::uint32_t> a) {
    Monomial m(aux->size());
    for (std::size_t i = 0; i < r; ++i) m[r + i] = a[i];
    return m;
  };
  std::vector<Poly> increments;
  for (const auto& fi : f.images) {
    Poly acc(aux);
    for (const auto& a : src.lambda) {
      Poly d = hasse_derivative(fi, scheme_monomial(xr, a));
      if (!d.is_zero()) acc += d.embed(aux) * Poly::monomial(aux, umono(a), Scalar::one(xr->field()));
    }
    increments.push_back(std::move(acc));
  }
  const auto& ring = src.scheme.ring;
  std::vector<Poly> images;
  for (const auto& fi : f.images) images.push_back(fi.embed(ring));
  for (const auto& b : tgt.lambda) {
    Poly prod = Poly::constant(aux, 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::uint32_t k = 0; k < b[i]; ++k) prod = truncate(prod * increments[i]);
    }
    Poly acc(ring);
    for (std::size_t a = 0; a < src.lambda.size(); ++a) {
      // coefficient of u^alpha as a polynomial in x, t
      const auto& al = src.lambda[a];
      std::vector<Term> coeff;
      for (const auto& t : prod.terms()) {
        bool match = true;
        for (std::size_t i = 0; i < r && match; ++i) match = t.mono[r + i] == al[i];
        if (!match) continue;
        Monomial m(ring->size());
        for (std::size_t i = 0; i < r; ++i) m[i] = t.mono[i];
        for (std::size_t g = 0; g < aux->num_base(); ++g) m[ring->num_scheme() + g] = t.mono[2 * r + g];
        coeff.push_back({std::move(m), t.coeff});
      }
      if (!coeff.empty()) acc += Poly(ring, std::move(coeff)) * Poly::variable(ring, src.z_index(a));
    }
    images.push_back(std::move(acc));
  }
  return PolyMorphism(src.scheme, tgt.scheme, std::move(images));
}

PolyMorphism jet_morphism(const PolyMorphism& f, unsigned n) {
  return jet_morphism(f, jet_scheme(f.source, n), jet_scheme(f.target, n));
}

ExactMatrix jet_linear_part(const PolyMorphism& jf, const JetScheme& src, const JetScheme& tgt,
                            const std::vector<Scalar>& p) {
  const auto& ring = src.scheme.ring;
  if (ring->num_base() != 0) throw DomainError("specialize the base generators before computing fibers");
  std::vector<std::string> zs;
  for (const auto& a : src.lambda) zs.push_back(jet_var_name(a));
  auto zring = make_ring(ring->field(), zs);
  const auto images = point_substitution(ring, zring, p, src.z_offset());
  std::vector<Poly> forms;
  for (std::size_t b = 0; b < tgt.lambda.size(); ++b) forms.push_back(jf.images[tgt.z_index(b)].substitute(zring, images));
  auto m = linear_form_matrix(forms, zring);
  for (const auto& b : tgt.lambda) m.row_labels.push_back(jet_var_name(b));
  return m;
}

ExactMatrix jacobian_at(const AffineScheme& x, const std::vector<Scalar>& p) {
  const std::size_t r = x.num_vars();
  if (x.ring->num_base() != 0) throw DomainError("specialize the base generators before evaluating the Jacobian");
  auto k = base_ring_of(x.ring);
  std::vector<Poly> images;
  for (const auto& c : p) images.push_back(Poly::constant(k, c));
  ExactMatrix m(x.ring->field(), 0, r);
  for (const auto& g : x.gens) {
    std::vector<Scalar> row;
    for (std::size_t i = 0; i < r; ++i) {
      Poly v = partial_derivative(g, i).substitute(k, images);
      row.push_back(v.is_zero() ? Scalar::zero(k->field()) : v.constant_term());
    }
    m.push_row(std::move(row));
  }
  return m;
}

}  // namespace prol
