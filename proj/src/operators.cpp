#include "prol/operators.hpp"

#include "prol/random.hpp"

namespace prol {

OperatorE::OperatorE(AlgebraPtr alg, RingPtr base, std::vector<AlgebraElement> images)
    : alg_(std::move(alg)), base_(std::move(base)), images_(std::move(images)) {
  if (base_->num_scheme() != 0) throw ContextError("operator base ring must not have scheme variables");
  if (base_->field() != alg_->field()) throw ContextError("operator base ring and algebra over different fields");
  if (images_.size() != base_->num_base()) throw ContextError("operator needs one image per base generator");
  for (const auto& im : images_) {
    if (!same_algebra(im.algebra(), alg_)) throw ContextError("operator image over the wrong algebra");
    if (!same_ring(im.ring(), base_)) throw ContextError("operator image must live over the base ring");
  }
}

OperatorE OperatorE::standard(AlgebraPtr alg, RingPtr base) {
  std::vector<AlgebraElement> images;
  for (std::size_t g = 0; g < base->num_base(); ++g) {
    images.push_back(AlgebraElement::embed_scalar(alg, Poly::variable(base, g)));
  }
  return OperatorE(std::move(alg), std::move(base), std::move(images));
}

std::vector<AlgebraElement> OperatorE::images_in(const RingPtr& ring) const {
  if (ring->field() != base_->field() || ring->base_gens() != base_->base_gens()) {
    throw ContextError("ring does not share the operator's base generators");
  }
  std::vector<AlgebraElement> out;
  out.reserve(images_.size());
  for (const auto& im : images_) {
    std::vector<Poly> c;
    for (const auto& p : im.coords()) c.push_back(p.embed(ring));
    out.emplace_back(alg_, std::move(c));
  }
  return out;
}

std::vector<AlgebraElement> OperatorE::coefficient_images(const RingPtr& ring) const {
  std::vector<AlgebraElement> out;
  out.reserve(ring->size());
  for (std::size_t i = 0; i < ring->num_scheme(); ++i) {
    out.push_back(AlgebraElement::embed_scalar(alg_, Poly::variable(ring, i)));
  }
  auto base_images = images_in(ring);
  out.insert(out.end(), base_images.begin(), base_images.end());
  return out;
}

AlgebraElement extend_operator(const OperatorE& e, const Poly& p) {
  if (p.mentions_scheme_vars()) throw DomainError("operator applied to a polynomial with scheme variables: " + p.to_string());
  return evaluate_in_algebra(p, e.algebra(), p.ring(), e.coefficient_images(p.ring()));
}

Poly operator_slot(const OperatorE& e, const Poly& p, std::size_t j) { return extend_operator(e, p)[j]; }

ComposedOperator compose_operators(const OperatorE& e, const OperatorE& f) {
  if (!same_ring(e.base(), f.base())) throw ContextError("composed operators must share the base ring");
  auto ef = tensor(e.algebra(), f.algebra());
  const std::size_t le = e.algebra()->rank();
  const std::size_t lf = f.algebra()->rank();
  std::vector<AlgebraElement> images;
  for (const auto& im : e.images()) {
    std::vector<Poly> c(le * lf, Poly(e.base()));
    for (std::size_t j = 0; j < le; ++j) {
      const auto fj = extend_operator(f, im[j]);
      for (std::size_t jp = 0; jp < lf; ++jp) c[tensor_index(j, jp, lf)] = fj[jp];
    }
    images.emplace_back(ef, std::move(c));
  }
  return {ef, OperatorE(ef, e.base(), std::move(images))};
}

std::vector<AdditiveMap> operator_family(const OperatorE& e) {
  std::vector<AdditiveMap> out;
  for (std::size_t j = 0; j < e.algebra()->rank(); ++j) {
    out.emplace_back([e, j](const Poly& p) { return operator_slot(e, p, j); });
  }
  return out;
}

namespace {

std::pair<Poly, Poly> random_pair(Sampler& s, const RingPtr& base) {
  return {s.base_poly(base, 3, 3), s.base_poly(base, 3, 3)};
}

}  // namespace

LawReport check_hasse_axioms(std::span<const AdditiveMap> family, const RingPtr& base, unsigned trials,
                             std::uint64_t seed) {
  LawReport report;
  Sampler s(seed);
  for (unsigned trial = 0; trial < trials; ++trial) {
    auto [x, y] = random_pair(s, base);
    ++report.trials;
    if (!family.empty() && !(family[0](x) == x)) {
      report.pass = false;
      report.witness_x = x;
      report.detail = "D_0(x) != x";
      return report;
    }
    const Poly xy = x * y;
    for (std::size_t m = 1; m < family.size(); ++m) {
      Poly rhs(base);
      for (std::size_t a = 0; a <= m; ++a) rhs += family[a](x) * family[m - a](y);
      const Poly lhs = family[m](xy);
      if (!(lhs == rhs)) {
        report.pass = false;
        report.witness_x = x;
        report.witness_y = y;
        report.detail = "D_" + std::to_string(m) + "(xy) = " + lhs.to_string() + " but convolution gives " + rhs.to_string();
        return report;
      }
    }
  }
  return report;
}

LawReport check_algebra_law(const AlgebraPtr& alg, std::span<const AdditiveMap> family, const RingPtr& base,
                            unsigned trials, std::uint64_t seed) {
  LawReport report;
  if (family.size() != alg->rank()) throw std::invalid_argument("family size must equal the algebra rank");
  auto lift = [&](const Poly& p) {
    std::vector<Poly> c;
    for (const auto& d : family) c.push_back(d(p));
    return AlgebraElement(alg, std::move(c));
  };
  const Poly one = Poly::constant(base, 1);
  if (!(lift(one) == AlgebraElement::one(alg, base))) {
    report.pass = false;
    report.witness_x = one;
    report.detail = "1 does not map to e_0";
    return report;
  }
  Sampler s(seed);
  for (unsigned trial = 0; trial < trials; ++trial) {
    auto [x, y] = random_pair(s, base);
    ++report.trials;
    const auto lx = lift(x);
    const auto ly = lift(y);
    if (!(lift(x + y) == lx + ly)) {
      report.pass = false;
      report.witness_x = x;
      report.witness_y = y;
      report.detail = "not additive";
      return report;
    }
    const auto lhs = lift(x * y);
    const auto rhs = lx * ly;
    if (!(lhs == rhs)) {
      report.pass = false;
      report.witness_x = x;
      report.witness_y = y;
      report.detail = "image of xy is " + lhs.to_string() + " but product of images is " + rhs.to_string();
      return report;
    }
  }
  return report;
}

}  // namespace prol
