#include "orthobound/integral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "orthobound/error.hpp"

namespace orthobound {

namespace {

void require_aligned(std::span<const SampledFunction> fns, const QuadratureGrid& grid) {
  if (fns.empty()) throw Error(ErrorKind::EmptyFamily, "no family functions");
  for (std::size_t i = 0; i < fns.size(); ++i) {
    if (fns[i].size() != grid.size()) {
      throw Error(ErrorKind::DimensionMismatch, "family function " + std::to_string(i) + " has " +
                                                    std::to_string(fns[i].size()) + " samples for " +
                                                    std::to_string(grid.size()) + " nodes");
    }
  }
}

// sum_i coeffs[i] f_i(s_j)
Scalar combination_at(std::span<const Scalar> coeffs, std::span<const SampledFunction> fns, std::size_t j) {
  Scalar acc = 0.0;
  for (std::size_t i = 0; i < fns.size(); ++i) acc += coeffs[i] * fns[i][j];
  return acc;
}

}  // namespace

IntegralInstance integral_instance(const SampledFunction& f, const std::optional<SampledFunction>& g,
                                   std::span<const SampledFunction> family_fns, const QuadratureGrid& grid,
                                   const ScalarCorridor& cf, const std::optional<ScalarCorridor>& cg,
                                   double family_tol) {
  require_aligned(family_fns, grid);
  std::vector<Vector> members;
  members.reserve(family_fns.size());
  for (const auto& fi : family_fns) members.push_back(embed(fi, grid));
  OrthonormalFamily family = validate_family(std::move(members), family_tol);

  Vector fx = embed(f, grid);
  HypothesisReport rf = check_hypothesis(fx, family, cf);
  std::optional<Vector> gx;
  std::optional<HypothesisReport> rg;
  if (g) {
    if (!cg) throw Error(ErrorKind::InvalidArgument, "g supplied without its corridor");
    gx = embed(*g, grid);
    rg = check_hypothesis(*gx, family, *cg);
  }
  return IntegralInstance{std::move(family), std::move(fx), std::move(gx), cf, cg, rf, rg};
}

double quadrature_condition_i(const SampledFunction& f, std::span<const SampledFunction> family_fns,
                              const QuadratureGrid& grid, const ScalarCorridor& c) {
  require_aligned(family_fns, grid);
  std::vector<double> terms(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Scalar upper = combination_at(c.hi(), family_fns, j) - f[j];
    const Scalar lower = f[j] - combination_at(c.lo(), family_fns, j);
    terms[j] = grid.mass(j) * mul_conj(upper, lower).real();
  }
  return pairwise_sum(std::span<const double>(terms));
}

double quadrature_condition_ii(const SampledFunction& f, std::span<const SampledFunction> family_fns,
                               const QuadratureGrid& grid, const ScalarCorridor& c) {
  require_aligned(family_fns, grid);
  std::vector<double> terms(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    terms[j] = grid.mass(j) * std::norm(f[j] - combination_at(c.midpoints(), family_fns, j));
  }
  return pairwise_sum(std::span<const double>(terms));
}

BoundChain integral_norm_bound(const IntegralInstance& inst, NormVariant variant, const BoundOptions& opts) {
  return norm_bound_quadratic(inst.f, inst.family, inst.cf, variant, opts);
}

BesselCounterpart integral_bessel(const IntegralInstance& inst, const BoundOptions& opts) {
  return bessel_counterpart(inst.f, inst.family, inst.cf, opts);
}

GrussBound integral_gruss(const IntegralInstance& inst, const BoundOptions& opts) {
  if (!inst.g || !inst.cg) throw Error(ErrorKind::InvalidArgument, "Gruss bound needs g and its corridor");
  return gruss_bound(inst.f, *inst.g, inst.family, inst.cf, *inst.cg, opts);
}

ScalarCorridor real_corridor(std::span<const double> m, std::span<const double> M) {
  return ScalarCorridor(std::vector<Scalar>(m.begin(), m.end()), std::vector<Scalar>(M.begin(), M.end()));
}

SandwichReport sandwich_check(const SampledFunction& f, std::span<const SampledFunction> family_fns,
                              const QuadratureGrid& grid, std::span<const double> m, std::span<const double> M,
                              double tol) {
  require_aligned(family_fns, grid);
  if (f.size() != grid.size()) throw Error(ErrorKind::DimensionMismatch, "f is not aligned with the grid");
  if (m.size() != family_fns.size() || M.size() != family_fns.size()) {
    throw Error(ErrorKind::DimensionMismatch, "m and M need one entry per family function");
  }
  if (f.field() != Field::Real) throw Error(ErrorKind::RealModeViolation, "sandwich check needs a real f");
  for (const auto& fi : family_fns) {
    if (fi.field() != Field::Real) throw Error(ErrorKind::RealModeViolation, "sandwich check needs real f_i");
  }
  double re_sum = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0.0 || M[i] < 0.0) {
      throw Error(ErrorKind::InvalidArgument, "m_i and M_i must be nonnegative (index " + std::to_string(i) + ")");
    }
    re_sum += m[i] * M[i];
  }
  if (!(re_sum > 0.0)) throw Error(ErrorKind::NonpositiveReSum, "sum M_i m_i must be positive");

  SandwichReport r;
  r.lower_margin = std::numeric_limits<double>::infinity();
  r.upper_margin = std::numeric_limits<double>::infinity();
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (!(grid.mass(j) > 0.0)) continue;
    ++r.checked_nodes;
    double lower = 0.0, upper = 0.0;
    for (std::size_t i = 0; i < family_fns.size(); ++i) {
      lower += m[i] * family_fns[i][j].real();
      upper += M[i] * family_fns[i][j].real();
    }
    const double fj = f[j].real();
    r.lower_margin = std::min(r.lower_margin, fj - lower);
    r.upper_margin = std::min(r.upper_margin, upper - fj);
    const double node_margin = std::min(fj - lower, upper - fj);
    if (node_margin < worst) {
      worst = node_margin;
      r.worst_node = j;
    }
  }
  if (worst < -tol) {
    throw Error(ErrorKind::SandwichViolated,
                "node " + std::to_string(r.worst_node) + " (s = " + std::to_string(grid.nodes()[r.worst_node]) +
                    ") misses the bracket by " + std::to_string(-worst));
  }
  return r;
}

}  // namespace orthobound
