#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prol/jets.hpp"

namespace prol {

/// One term c * z_gamma of a w_{beta,j} image.
struct InterpolationTerm {
  std::size_t gamma;  // index into source.lambda
  Scalar coeff;
};

/// phi: Jet^m(tau X) -> tau(Jet^m X) in coordinates.
struct InterpolationMap {
  ProlongationResult tau;      // tau(X)
  JetScheme source;            // Jet^m(tau X)
  JetScheme jet;               // Jet^m(X)
  ProlongationResult target;   // tau(Jet^m X)
  PolyMorphism morphism;
  /// terms[b][j]: the linear form for w_{beta_b, j}.
  std::vector<std::vector<std::vector<InterpolationTerm>>> terms;
};

/// Gamma_beta: gamma in N^{l r}, block-major, with block sums beta_i.
std::vector<std::vector<std::uint32_t>> gamma_set(std::span<const std::uint32_t> beta, std::size_t rank);
/// beta-hat: all weight of each block in slot 0.
std::vector<std::uint32_t> beta_hat(std::span<const std::uint32_t> beta, std::size_t rank);
/// prod_i multinomial(beta_i; gamma_i) as a field element.
Scalar multinomial_weight(Field field, std::span<const std::uint32_t> gamma, std::size_t rank);

/// y -> y; w_{beta,j} -> sum_{gamma in Gamma_beta} multinomial(beta, gamma) c_{gamma,j} z_gamma.
InterpolationMap interpolation_map(const AffineScheme& x, unsigned m, const OperatorE& e);

/// Fiber data over nabla(p) after specializing the base generators to `base_values`.
struct FiberMatrices {
  ExactMatrix source;  // Jet^m(tau X) fiber equations
  ExactMatrix target;  // tau(Jet^m X) fiber equations
  ExactMatrix phi;     // rows: target fiber coordinates, cols: source fiber coordinates
  Point nabla_point;
};

FiberMatrices fiber_matrices_at(const InterpolationMap& im, const Point& p, std::span<const Scalar> base_values);

struct SurjectivityReport {
  enum class Status { Pass, Fail, Skip } status = Status::Skip;
  std::size_t jacobian_rank = 0;
  std::size_t source_kernel = 0;
  std::size_t target_kernel = 0;
  std::size_t image_rank = 0;
  bool image_inside_target = false;
  std::string detail;
};

std::string to_string(SurjectivityReport::Status s);

/// Violations of the leading-coefficient laws: w_{beta,0} is exactly z_{beta-hat}, and z_{beta-hat}
/// occurs in no other slot. Empty when all hold (they do for local algebras).
std::vector<std::string> coefficient_law_violations(const InterpolationMap& im);

/// Skip unless the Jacobian of X (base specialized) at p has rank #vars - expected_dim.
SurjectivityReport check_surjectivity(const InterpolationMap& im, const Point& p, std::span<const Scalar> base_values,
                                      std::size_t expected_dim);

}  // namespace prol
