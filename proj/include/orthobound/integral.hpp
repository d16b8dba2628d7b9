#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orthobound/bounds.hpp"
#include "orthobound/family.hpp"
#include "orthobound/hypothesis.hpp"
#include "orthobound/space.hpp"

namespace orthobound {

/// Weighted-L2 data on a quadrature grid, reduced to a finite inner product
/// space through embed(). Every bound on the instance runs the same code as
/// the abstract case.
struct IntegralInstance {
  OrthonormalFamily family;
  Vector f;
  std::optional<Vector> g;
  ScalarCorridor cf;
  std::optional<ScalarCorridor> cg;
  HypothesisReport report_f;
  std::optional<HypothesisReport> report_g;
};

/// Embeds f, g and the family functions; the family must be orthonormal
/// under grid_inner at `family_tol`.
IntegralInstance integral_instance(const SampledFunction& f, const std::optional<SampledFunction>& g,
                                   std::span<const SampledFunction> family_fns, const QuadratureGrid& grid,
                                   const ScalarCorridor& cf, const std::optional<ScalarCorridor>& cg = std::nullopt,
                                   double family_tol = tolerance::kFamilyQuadrature);

/// Direct node-by-node evaluation of
///   sum_j w_j rho_j Re[(sum_i Phi_i f_i(s_j) - f(s_j)) conj(f(s_j) - sum_i phi_i f_i(s_j))]
/// without going through the embedding.
double quadrature_condition_i(const SampledFunction& f, std::span<const SampledFunction> family_fns,
                              const QuadratureGrid& grid, const ScalarCorridor& c);

/// sum_j w_j rho_j |f(s_j) - sum_i midpoint_i f_i(s_j)|^2, compared against radius^2.
double quadrature_condition_ii(const SampledFunction& f, std::span<const SampledFunction> family_fns,
                               const QuadratureGrid& grid, const ScalarCorridor& c);

/// Norm counterparts for f: cbs gives the squared form, the other variants
/// the three Hoelder splittings.
BoundChain integral_norm_bound(const IntegralInstance& inst, NormVariant variant, const BoundOptions& opts = {});
BesselCounterpart integral_bessel(const IntegralInstance& inst, const BoundOptions& opts = {});
/// Requires g and its corridor.
GrussBound integral_gruss(const IntegralInstance& inst, const BoundOptions& opts = {});

struct SandwichReport {
  /// min_j f(s_j) - sum_i m_i f_i(s_j)
  double lower_margin = 0.0;
  /// min_j sum_i M_i f_i(s_j) - f(s_j)
  double upper_margin = 0.0;
  std::size_t worst_node = 0;
  std::size_t checked_nodes = 0;
};

/// Pointwise sum_i m_i f_i <= f <= sum_i M_i f_i at every node with positive
/// w_j rho_j; zero-mass nodes are ignored. Real functions only, m_i, M_i >= 0
/// and sum_i M_i m_i > 0. Throws SandwichViolated with the worst node when a
/// margin drops below -tol.
SandwichReport sandwich_check(const SampledFunction& f, std::span<const SampledFunction> family_fns,
                              const QuadratureGrid& grid, std::span<const double> m, std::span<const double> M,
                              double tol = 1e-12);

/// Builds the corridor (m, M) as a real ScalarCorridor.
ScalarCorridor real_corridor(std::span<const double> m, std::span<const double> M);

}  // namespace orthobound
