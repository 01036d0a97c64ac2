#include "prol/random.hpp"

#include <numeric>

namespace prol {

Scalar Sampler::scalar(Field f) {
  const long num = integer(-5, 5);
  const long den = integer(1, 3);
  if (!f.is_rational()) return Scalar(f, num);
  return Scalar(f, mpq_class(num, den));
}

Scalar Sampler::nonzero_scalar(Field f) {
  for (;;) {
    Scalar s = scalar(f);
    if (!s.is_zero()) return s;
  }
}

Poly Sampler::poly(const RingPtr& ring, std::span<const std::size_t> vars, unsigned max_deg, unsigned max_terms) {
  const long nterms = integer(1, static_cast<long>(std::max(1u, max_terms)));
  std::vector<Term> terms;
  for (long k = 0; k < nterms; ++k) {
    Monomial m(ring->size());
    long budget = integer(0, static_cast<long>(max_deg));
    while (budget > 0 && !vars.empty()) {
      const auto v = vars[static_cast<std::size_t>(integer(0, static_cast<long>(vars.size()) - 1))];
      m[v] += 1;
      --budget;
    }
    terms.push_back({std::move(m), nonzero_scalar(ring->field())});
  }
  return Poly(ring, std::move(terms));
}

Poly Sampler::base_poly(const RingPtr& ring, unsigned max_deg, unsigned max_terms) {
  std::vector<std::size_t> vars(ring->num_base());
  std::iota(vars.begin(), vars.end(), ring->num_scheme());
  return poly(ring, vars, max_deg, max_terms);
}

}  // namespace prol
