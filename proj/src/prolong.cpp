#include "prol/prolong.hpp"

namespace prol {

ProlongationResult prolong(const AffineScheme& x, const OperatorE& e) {
  auto w = weil_restrict(base_change_scheme(x, e));
  return {std::move(w.scheme), x, e, std::move(w.substitution)};
}

Point nabla(const AffineScheme& x, const OperatorE& e, const Point& a) {
  require_point(x, a);
  Point out;
  for (const auto& c : a) {
    const auto v = extend_operator(e, c.embed(e.base()));
    out.insert(out.end(), v.coords().begin(), v.coords().end());
  }
  return out;
}

PolyMorphism::PolyMorphism(AffineScheme s, AffineScheme t, std::vector<Poly> im)
    : source(std::move(s)), target(std::move(t)), images(std::move(im)) {
  if (images.size() != target.num_vars()) throw ContextError("morphism needs one image per target variable");
  if (source.ring->base_gens() != target.ring->base_gens()) throw ContextError("morphism between different bases");
  for (const auto& p : images) {
    if (!same_ring(p.ring(), source.ring)) throw ContextError("morphism image outside the source ring");
  }
}

PolyMorphism identity_morphism(const AffineScheme& x) {
  std::vector<Poly> im;
  for (std::size_t i = 0; i < x.num_vars(); ++i) im.push_back(Poly::variable(x.ring, i));
  return PolyMorphism(x, x, std::move(im));
}

Poly pullback(const PolyMorphism& f, const Poly& q) {
  const auto& src = f.source.ring;
  std::vector<Poly> images = f.images;
  for (std::size_t g = 0; g < src->num_base(); ++g) images.push_back(Poly::variable(src, src->num_scheme() + g));
  return q.embed(f.target.ring).substitute(src, images);
}

PolyMorphism compose(const PolyMorphism& g, const PolyMorphism& f) {
  if (!same_ring(g.source.ring, f.target.ring)) throw ContextError("morphisms are not composable");
  std::vector<Poly> im;
  for (const auto& p : g.images) im.push_back(pullback(f, p));
  return PolyMorphism(f.source, g.target, std::move(im));
}

Point apply_morphism(const PolyMorphism& f, const Point& p) {
  const auto k = base_ring_of(f.source.ring);
  if (p.size() != f.source.num_vars()) throw std::invalid_argument("point has wrong number of coordinates");
  std::vector<Poly> images;
  for (const auto& c : p) images.push_back(c.embed(k));
  for (std::size_t g = 0; g < k->num_base(); ++g) images.push_back(Poly::variable(k, g));
  Point out;
  for (const auto& q : f.images) out.push_back(q.substitute(k, images));
  return out;
}

bool is_well_defined(const PolyMorphism& f, const GroebnerOptions& opts) {
  std::vector<Poly> pulled;
  for (const auto& g : f.target.gens) pulled.push_back(pullback(f, g));
  return ideal_contains(f.source.gens, pulled, opts);
}

bool agree_modulo_source(const PolyMorphism& a, const PolyMorphism& b, const GroebnerOptions& opts) {
  if (!same_ring(a.source.ring, b.source.ring) || a.images.size() != b.images.size()) {
    throw ContextError("morphisms have different shapes");
  }
  std::vector<Poly> diffs;
  for (std::size_t i = 0; i < a.images.size(); ++i) diffs.push_back(a.images[i] - b.images[i]);
  return ideal_contains(a.source.gens, diffs, opts);
}

PolyMorphism prolong_morphism(const PolyMorphism& f, const ProlongationResult& src, const ProlongationResult& tgt) {
  const auto& ring = src.scheme.ring;
  const auto& alg = src.algebra();
  std::vector<AlgebraElement> images = src.substitution;
  auto base = src.op.images_in(ring);
  images.insert(images.end(), base.begin(), base.end());
  std::vector<Poly> out;
  for (const auto& fi : f.images) {
    auto v = evaluate_in_algebra(fi, alg, ring, images);
    for (const auto& c : v.coords()) out.push_back(c);
  }
  return PolyMorphism(src.scheme, tgt.scheme, std::move(out));
}

PolyMorphism prolong_morphism(const PolyMorphism& f, const OperatorE& e) {
  return prolong_morphism(f, prolong(f.source, e), prolong(f.target, e));
}

void validate_comparison(const ExactMatrix& alpha, const OperatorE& e, const OperatorE& f) {
  const auto& E = e.algebra();
  const auto& F = f.algebra();
  const std::size_t le = E->rank();
  const std::size_t lf = F->rank();
  if (alpha.rows() != lf || alpha.cols() != le) throw ComparisonError("alpha has the wrong shape", "expected " + std::to_string(lf) + "x" + std::to_string(le));
  if (!same_ring(e.base(), f.base())) throw ContextError("operators over different base rings");
  auto column = [&](std::size_t j) {
    std::vector<Scalar> c;
    for (std::size_t r = 0; r < lf; ++r) c.push_back(alpha.at(r, j));
    return c;
  };
  auto apply = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> out(lf, Scalar::zero(E->field()));
    for (std::size_t j = 0; j < le; ++j) {
      for (std::size_t r = 0; r < lf; ++r) out[r] += alpha.at(r, j) * v[j];
    }
    return out;
  };
  std::vector<Scalar> f0(lf, Scalar::zero(F->field()));
  f0[0] = Scalar::one(F->field());
  if (column(0) != f0) throw ComparisonError("alpha is not unital", "alpha(e_0) != f_0");
  for (std::size_t i = 0; i < le; ++i) {
    for (std::size_t j = i; j < le; ++j) {
      const auto lhs = apply(E->product(i, j));
      const auto rhs = F->multiply(column(i), column(j));
      if (lhs != rhs) {
        throw ComparisonError("alpha is not multiplicative",
                              "alpha(e_" + std::to_string(i) + " e_" + std::to_string(j) + ") != alpha(e_" +
                                  std::to_string(i) + ") alpha(e_" + std::to_string(j) + ")");
      }
    }
  }
  for (std::size_t g = 0; g < e.base()->num_base(); ++g) {
    const auto& eg = e.image(g);
    for (std::size_t r = 0; r < lf; ++r) {
      Poly acc(e.base());
      for (std::size_t j = 0; j < le; ++j) acc += alpha.at(r, j) * eg[j];
      if (!(acc == f.image(g)[r])) {
        throw ComparisonError("alpha o e != f", "generator " + e.base()->name(g) + ", slot " + std::to_string(r) +
                                                    ": " + acc.to_string() + " vs " + f.image(g)[r].to_string());
      }
    }
  }
}

PolyMorphism compare_map(const AffineScheme& x, const ExactMatrix& alpha, const OperatorE& e, const OperatorE& f) {
  validate_comparison(alpha, e, f);
  const auto src = prolong(x, e);
  const auto tgt = prolong(x, f);
  const std::size_t le = e.algebra()->rank();
  const std::size_t lf = f.algebra()->rank();
  std::vector<Poly> im;
  for (std::size_t i = 0; i < x.num_vars(); ++i) {
    for (std::size_t jp = 0; jp < lf; ++jp) {
      Poly acc(src.scheme.ring);
      for (std::size_t j = 0; j < le; ++j) {
        if (!alpha.at(jp, j).is_zero()) acc += alpha.at(jp, j) * Poly::variable(src.scheme.ring, i * le + j);
      }
      im.push_back(std::move(acc));
    }
  }
  return PolyMorphism(src.scheme, tgt.scheme, std::move(im));
}

std::vector<Poly> reindex_iterated(const AffineScheme& iterated, const RingPtr& composed_ring) {
  // Both rings list slot variables in the same positional order (i, j, j'), so the map is positional.
  if (iterated.ring->num_scheme() != composed_ring->num_scheme()) throw ContextError("rings have different sizes");
  std::vector<Poly> images;
  for (std::size_t v = 0; v < composed_ring->size(); ++v) images.push_back(Poly::variable(composed_ring, v));
  std::vector<Poly> out;
  for (const auto& g : iterated.gens) out.push_back(g.substitute(composed_ring, images));
  return out;
}

ComposedProlongation prolong_composed(const AffineScheme& x, const OperatorE& e, const OperatorE& f) {
  auto ef = compose_operators(e, f);
  auto composed = prolong(x, ef.op);
  auto inner = prolong(x, e);
  auto iterated = prolong(inner.scheme, f);
  auto re = reindex_iterated(iterated.scheme, composed.scheme.ring);
  return {std::move(composed), std::move(inner), std::move(iterated), std::move(re)};
}

std::vector<Poly> swap_tensor_slots(std::span<const Poly> gens, const RingPtr& target, std::size_t num_vars,
                                    std::size_t rank_e, std::size_t rank_f) {
  const std::size_t l = rank_e * rank_f;
  if (gens.empty()) return {};
  const auto& src = gens.front().ring();
  if (src->num_scheme() != num_vars * l || target->num_scheme() != num_vars * l) {
    throw ContextError("ring sizes do not match the tensor rank");
  }
  std::vector<Poly> images;
  for (std::size_t i = 0; i < num_vars; ++i) {
    for (std::size_t j = 0; j < rank_e; ++j) {
      for (std::size_t jp = 0; jp < rank_f; ++jp) {
        images.push_back(Poly::variable(target, i * l + tensor_index(jp, j, rank_e)));
      }
    }
  }
  for (std::size_t g = 0; g < src->num_base(); ++g) images.push_back(Poly::variable(target, num_vars * l + g));
  std::vector<Poly> out;
  for (const auto& p : gens) out.push_back(p.substitute(target, images));
  return out;
}

AlgebraElement swap_tensor_element(const AlgebraElement& a, const AlgebraPtr& fe, std::size_t rank_e,
                                   std::size_t rank_f) {
  std::vector<Poly> c(rank_e * rank_f, Poly(a.ring()));
  for (std::size_t j = 0; j < rank_e; ++j) {
    for (std::size_t jp = 0; jp < rank_f; ++jp) c[tensor_index(jp, j, rank_e)] = a[tensor_index(j, jp, rank_f)];
  }
  return AlgebraElement(fe, std::move(c));
}

}  // namespace prol
