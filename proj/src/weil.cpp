#include <numeric>

#include "prol/scheme.hpp"

namespace prol {

AffineScheme::AffineScheme(RingPtr r, std::vector<Poly> g) : ring(std::move(r)), gens(std::move(g)) {
  for (const auto& p : gens) {
    if (!same_ring(p.ring(), ring)) throw ContextError("scheme generator in a foreign ring: " + p.to_string());
  }
}

AlgebraValuedScheme::AlgebraValuedScheme(RingPtr r, AlgebraPtr a, std::vector<AlgebraElement> g)
    : ring(std::move(r)), alg(std::move(a)), gens(std::move(g)) {
  for (const auto& p : gens) {
    if (!same_algebra(p.algebra(), alg)) throw ContextError("generator over the wrong algebra");
    if (!same_ring(p.ring(), ring)) throw ContextError("algebra-valued generator in a foreign ring");
  }
}

namespace {

/// Images for substituting a k-point into the scheme's ring: x_i -> p_i, t -> t.
std::vector<Poly> point_images(const RingPtr& ring, const Point& p, const RingPtr& k) {
  if (p.size() != ring->num_scheme()) throw std::invalid_argument("point has wrong number of coordinates");
  std::vector<Poly> images;
  images.reserve(ring->size());
  for (const auto& c : p) {
    if (c.mentions_scheme_vars()) throw DomainError("point coordinate mentions scheme variables");
    images.push_back(c.embed(k));
  }
  for (std::size_t g = 0; g < ring->num_base(); ++g) images.push_back(Poly::variable(k, g));
  return images;
}

}  // namespace

std::vector<Poly> residuals(const AffineScheme& x, const Point& p) {
  const auto k = base_ring_of(x.ring);
  const auto images = point_images(x.ring, p, k);
  std::vector<Poly> out;
  for (const auto& g : x.gens) out.push_back(g.substitute(k, images));
  return out;
}

std::vector<AlgebraElement> residuals(const AlgebraValuedScheme& y, const AlgebraPoint& p) {
  if (p.size() != y.ring->num_scheme()) throw std::invalid_argument("point has wrong number of coordinates");
  const auto k = base_ring_of(y.ring);
  std::vector<AlgebraElement> images;
  for (const auto& c : p) {
    std::vector<Poly> coords;
    for (const auto& q : c.coords()) coords.push_back(q.embed(k));
    images.emplace_back(y.alg, std::move(coords));
  }
  for (std::size_t g = 0; g < y.ring->num_base(); ++g) {
    images.push_back(AlgebraElement::embed_scalar(y.alg, Poly::variable(k, g)));
  }
  std::vector<AlgebraElement> out;
  for (const auto& g : y.gens) {
    AlgebraElement acc = AlgebraElement::zero(y.alg, k);
    for (std::size_t j = 0; j < y.alg->rank(); ++j) {
      if (g[j].is_zero()) continue;
      acc += evaluate_in_algebra(g[j], y.alg, k, images) * AlgebraElement::basis_multiple(y.alg, Poly::constant(k, 1), j);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

void require_point(const AffineScheme& x, const Point& p) {
  std::vector<std::string> bad;
  for (const auto& r : residuals(x, p)) {
    if (!r.is_zero()) bad.push_back(r.to_string());
  }
  if (!bad.empty()) throw InvalidPointError("point does not lie on the scheme (residual " + bad.front() + ")", bad);
}

void require_point(const AlgebraValuedScheme& y, const AlgebraPoint& p) {
  std::vector<std::string> bad;
  for (const auto& r : residuals(y, p)) {
    if (!r.is_zero()) bad.push_back(r.to_string());
  }
  if (!bad.empty()) throw InvalidPointError("point does not lie on the scheme (residual " + bad.front() + ")", bad);
}

std::string slot_name(const std::string& var, std::size_t j) { return var + "_" + std::to_string(j); }

RingPtr weil_ring(const RingPtr& ring, std::size_t rank) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < ring->num_scheme(); ++i) {
    for (std::size_t j = 0; j < rank; ++j) vars.push_back(slot_name(ring->name(i), j));
  }
  return make_ring(ring->field(), std::move(vars), ring->base_gens());
}

WeilRestriction weil_restrict(const AlgebraValuedScheme& y) {
  const std::size_t l = y.alg->rank();
  const std::size_t m = y.ring->num_scheme();
  auto out_ring = weil_ring(y.ring, l);

  std::vector<AlgebraElement> subst;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Poly> coords;
    for (std::size_t j = 0; j < l; ++j) coords.push_back(Poly::variable(out_ring, i * l + j));
    subst.emplace_back(y.alg, std::move(coords));
  }
  std::vector<AlgebraElement> images = subst;
  for (std::size_t g = 0; g < y.ring->num_base(); ++g) {
    images.push_back(AlgebraElement::embed_scalar(y.alg, Poly::variable(out_ring, m * l + g)));
  }

  std::vector<Poly> gens;
  for (const auto& g : y.gens) {
    AlgebraElement acc = AlgebraElement::zero(y.alg, out_ring);
    for (std::size_t j = 0; j < l; ++j) {
      if (g[j].is_zero()) continue;
      auto val = evaluate_in_algebra(g[j], y.alg, out_ring, images);
      acc += j == 0 ? val : val * AlgebraElement::basis_multiple(y.alg, Poly::constant(out_ring, 1), j);
    }
    for (std::size_t j = 0; j < l; ++j) {
      if (!acc[j].is_zero()) gens.push_back(acc[j]);
    }
  }
  return {AffineScheme(out_ring, std::move(gens)), y.alg, std::move(subst)};
}

Point point_down(const AlgebraValuedScheme& y, const AlgebraPoint& p) {
  require_point(y, p);
  Point out;
  for (const auto& c : p) {
    for (const auto& q : c.coords()) out.push_back(q);
  }
  return out;
}

AlgebraPoint point_up(const AlgebraValuedScheme& y, const Point& p) {
  const std::size_t l = y.alg->rank();
  if (p.size() != y.ring->num_scheme() * l) throw std::invalid_argument("point has wrong number of coordinates");
  AlgebraPoint out;
  for (std::size_t i = 0; i < y.ring->num_scheme(); ++i) {
    std::vector<Poly> coords(p.begin() + static_cast<std::ptrdiff_t>(i * l),
                             p.begin() + static_cast<std::ptrdiff_t>((i + 1) * l));
    out.emplace_back(y.alg, std::move(coords));
  }
  require_point(y, out);
  return out;
}

AlgebraValuedScheme base_change_scheme(const AffineScheme& x, const OperatorE& e) {
  const auto images = e.coefficient_images(x.ring);
  std::vector<AlgebraElement> gens;
  for (const auto& g : x.gens) gens.push_back(evaluate_in_algebra(g, e.algebra(), x.ring, images));
  return AlgebraValuedScheme(x.ring, e.algebra(), std::move(gens));
}

BaseMap identity_base_map(const RingPtr& ring) {
  auto k = base_ring_of(ring);
  std::vector<Poly> images;
  for (std::size_t g = 0; g < k->num_base(); ++g) images.push_back(Poly::variable(k, g));
  return {k, std::move(images)};
}

RingPtr base_changed_ring(const RingPtr& ring, const BaseMap& phi) {
  if (phi.images.size() != ring->num_base()) throw ContextError("base map needs one image per base generator");
  if (phi.target_base->num_scheme() != 0) throw ContextError("base map target must be a base ring");
  return make_ring(ring->field(), ring->scheme_vars(), phi.target_base->base_gens());
}

Poly apply_base_map(const Poly& p, const BaseMap& phi, const RingPtr& target) {
  const auto& ring = p.ring();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < ring->num_scheme(); ++i) images.push_back(Poly::variable(target, ring->name(i)));
  for (const auto& im : phi.images) images.push_back(im.embed(target));
  return p.substitute(target, images);
}

AffineScheme base_change_scheme(const AffineScheme& x, const BaseMap& phi) {
  auto target = base_changed_ring(x.ring, phi);
  std::vector<Poly> gens;
  for (const auto& g : x.gens) gens.push_back(apply_base_map(g, phi, target));
  return AffineScheme(target, std::move(gens));
}

AlgebraValuedScheme base_change_scheme(const AlgebraValuedScheme& y, const BaseMap& phi) {
  auto target = base_changed_ring(y.ring, phi);
  std::vector<AlgebraElement> gens;
  for (const auto& g : y.gens) {
    std::vector<Poly> coords;
    for (const auto& q : g.coords()) coords.push_back(apply_base_map(q, phi, target));
    gens.emplace_back(y.alg, std::move(coords));
  }
  return AlgebraValuedScheme(target, y.alg, std::move(gens));
}

}  // namespace prol
