#include "prol/interpolation.hpp"

#include <map>

namespace prol {

namespace {

void compositions(std::uint32_t total, std::size_t parts, std::vector<std::uint32_t>& cur,
                  std::vector<std::vector<std::uint32_t>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::uint32_t a = total + 1; a-- > 0;) {
    cur.push_back(a);
    compositions(total - a, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> gamma_set(std::span<const std::uint32_t> beta, std::size_t rank) {
  std::vector<std::vector<std::uint32_t>> out{{}};
  for (auto b : beta) {
    std::vector<std::vector<std::uint32_t>> blocks;
    std::vector<std::uint32_t> cur;
    compositions(b, rank, cur, blocks);
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& prefix : out) {
      for (const auto& blk : blocks) {
        auto g = prefix;
        g.insert(g.end(), blk.begin(), blk.end());
        next.push_back(std::move(g));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::uint32_t> beta_hat(std::span<const std::uint32_t> beta, std::size_t rank) {
  std::vector<std::uint32_t> out(beta.size() * rank, 0);
  for (std::size_t i = 0; i < beta.size(); ++i) out[i * rank] = beta[i];
  return out;
}

Scalar multinomial_weight(Field field, std::span<const std::uint32_t> gamma, std::size_t rank) {
  mpz_class w = 1;
  for (std::size_t i = 0; i < gamma.size(); i += rank) {
    unsigned long left = 0;
    for (std::size_t j = 0; j < rank; ++j) left += gamma[i + j];
    for (std::size_t j = 0; j < rank; ++j) {
      w *= binomial(left, gamma[i + j]);
      left -= gamma[i + j];
    }
  }
  return Scalar(field, mpq_class(w));
}

InterpolationMap interpolation_map(const AffineScheme& x, unsigned m, const OperatorE& e) {
  const auto& alg = e.algebra();
  const std::size_t l = alg->rank();
  const std::size_t r = x.num_vars();
  const Field field = x.ring->field();
  auto tau = prolong(x, e);
  auto source = jet_scheme(tau.scheme, m);
  auto jet = jet_scheme(x, m);
  auto target = prolong(jet.scheme, e);
  InterpolationMap out{std::move(tau), std::move(source), std::move(jet), std::move(target), {}, {}};

  std::map<std::vector<std::uint32_t>, std::size_t> gamma_index;
  for (std::size_t a = 0; a < out.source.lambda.size(); ++a) gamma_index[out.source.lambda[a]] = a;

  const auto& src = out.source.scheme.ring;
  std::vector<Poly> images;
  for (std::size_t v = 0; v < r * l; ++v) images.push_back(Poly::variable(src, v));
  out.terms.resize(out.jet.lambda.size(), std::vector<std::vector<InterpolationTerm>>(l));
  for (std::size_t b = 0; b < out.jet.lambda.size(); ++b) {
    const auto& beta = out.jet.lambda[b];
    for (const auto& gamma : gamma_set(beta, l)) {
      std::vector<std::uint32_t> summed(l, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < l; ++j) summed[j] += gamma[i * l + j];
      }
      const auto c = basis_power_expansion(*alg, summed);
      const Scalar w = multinomial_weight(field, gamma, l);
      for (std::size_t j = 0; j < l; ++j) {
        if (c[j].is_zero() || w.is_zero()) continue;
        out.terms[b][j].push_back({gamma_index.at(gamma), w * c[j]});
      }
    }
  }
  for (std::size_t b = 0; b < out.jet.lambda.size(); ++b) {
    for (std::size_t j = 0; j < l; ++j) {
      Poly acc(src);
      for (const auto& t : out.terms[b][j]) acc += t.coeff * Poly::variable(src, out.source.z_index(t.gamma));
      images.push_back(std::move(acc));
    }
  }
  out.morphism = PolyMorphism(out.source.scheme, out.target.scheme, std::move(images));
  return out;
}

FiberMatrices fiber_matrices_at(const InterpolationMap& im, const Point& p, std::span<const Scalar> base_values) {
  const auto& x = im.tau.source;
  const std::size_t r = x.num_vars();
  const std::size_t l = im.tau.algebra()->rank();
  FiberMatrices out;
  out.nabla_point = nabla(x, im.tau.op, p);
  const auto q = specialize_point(out.nabla_point, base_values);

  JetScheme js = im.source;
  js.source = specialize_base(im.source.source, base_values);
  js.scheme = specialize_base(im.source.scheme, base_values);
  out.source = jet_fiber(js, q);

  const auto tgt = specialize_base(im.target.scheme, base_values);
  const auto& ring = tgt.ring;
  std::vector<std::string> ws(ring->names().begin() + static_cast<std::ptrdiff_t>(r * l), ring->names().end());
  auto wring = make_ring(ring->field(), ws);
  std::vector<Poly> images;
  for (std::size_t v = 0; v < r * l; ++v) images.push_back(Poly::constant(wring, q[v]));
  for (std::size_t v = 0; v < ws.size(); ++v) images.push_back(Poly::variable(wring, v));
  std::vector<Poly> forms;
  for (const auto& g : tgt.gens) {
    Poly f = g.substitute(wring, images);
    if (f.is_zero()) continue;
    if (f.is_constant()) throw InvalidPointError("nabla(p) does not lie on tau(X)", {f.to_string()});
    forms.push_back(std::move(f));
  }
  out.target = linear_form_matrix(forms, wring);

  out.phi = ExactMatrix(ring->field(), ws.size(), js.lambda.size());
  out.phi.row_labels = ws;
  for (const auto& a : js.lambda) out.phi.col_labels.push_back(jet_var_name(a));
  for (std::size_t b = 0; b < im.terms.size(); ++b) {
    for (std::size_t j = 0; j < l; ++j) {
      for (const auto& t : im.terms[b][j]) out.phi.at(b * l + j, t.gamma) = t.coeff;
    }
  }
  return out;
}

std::string to_string(SurjectivityReport::Status s) {
  switch (s) {
    case SurjectivityReport::Status::Pass:
      return "pass";
    case SurjectivityReport::Status::Fail:
      return "fail";
    case SurjectivityReport::Status::Skip:
      return "skip";
  }
  return "skip";
}

SurjectivityReport check_surjectivity(const InterpolationMap& im, const Point& p, std::span<const Scalar> base_values,
                                      std::size_t expected_dim) {
  SurjectivityReport rep;
  const auto& x = im.tau.source;
  const auto xs = specialize_base(x, base_values);
  const auto pv = specialize_point(p, base_values);
  require_point(xs, constant_point(xs.ring, pv));
  rep.jacobian_rank = rank(jacobian_at(xs, pv));
  if (expected_dim > x.num_vars() || rep.jacobian_rank != x.num_vars() - expected_dim) {
    rep.status = SurjectivityReport::Status::Skip;
    rep.detail = "Jacobian rank " + std::to_string(rep.jacobian_rank) + " at p; smoothness precondition fails";
    return rep;
  }
  const auto fm = fiber_matrices_at(im, p, base_values);
  const auto ks = kernel_basis(fm.source);
  const auto kt = kernel_basis(fm.target);
  rep.source_kernel = ks.size();
  rep.target_kernel = kt.size();
  std::vector<std::vector<Scalar>> image;
  for (const auto& v : ks) image.push_back(fm.phi * v);
  const auto img = from_columns(fm.phi.field(), image, fm.phi.rows());
  rep.image_rank = image.empty() ? 0 : rank(img);
  rep.image_inside_target = true;
  for (const auto& v : image) {
    for (const auto& s : fm.target * v) rep.image_inside_target &= s.is_zero();
  }
  const bool ok = rep.image_inside_target && rep.image_rank == rep.target_kernel;
  rep.status = ok ? SurjectivityReport::Status::Pass : SurjectivityReport::Status::Fail;
  rep.detail = "dim ker source " + std::to_string(rep.source_kernel) + ", dim ker target " +
               std::to_string(rep.target_kernel) + ", image rank " + std::to_string(rep.image_rank);
  return rep;
}

}  // namespace prol

namespace prol {

std::vector<std::string> coefficient_law_violations(const InterpolationMap& im) {
  std::vector<std::string> out;
  const std::size_t l = im.tau.algebra()->rank();
  std::map<std::vector<std::uint32_t>, std::size_t> gamma_index;
  for (std::size_t a = 0; a < im.source.lambda.size(); ++a) gamma_index[im.source.lambda[a]] = a;
  for (std::size_t b = 0; b < im.jet.lambda.size(); ++b) {
    const auto& beta = im.jet.lambda[b];
    const std::size_t hat = gamma_index.at(beta_hat(beta, l));
    const std::string label = jet_var_name(beta);
    const auto& w0 = im.terms[b][0];
    if (w0.size() != 1 || w0[0].gamma != hat || !w0[0].coeff.is_one()) {
      out.push_back("w_" + label + "_0 is not z_" + jet_var_name(im.source.lambda[hat]));
    }
    for (std::size_t j = 1; j < l; ++j) {
      for (const auto& t : im.terms[b][j]) {
        if (t.gamma == hat) out.push_back("z_beta-hat occurs in w_" + label + "_" + std::to_string(j));
      }
    }
  }
  return out;
}

}  // namespace prol
