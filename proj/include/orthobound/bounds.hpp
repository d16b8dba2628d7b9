#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthobound/family.hpp"
#include "orthobound/hypothesis.hpp"
#include "orthobound/space.hpp"
#include "orthobound/tolerance.hpp"

namespace orthobound {

/// Ordered labeled values of an inequality chain v0 <= v1 <= ... .
struct BoundChain {
  std::vector<std::string> labels;
  std::vector<double> values;
  bool lhs_first = true;
  bool all_hold = true;
  /// values[k+1] - values[k]
  std::vector<double> slacks;
  /// False when the chain was evaluated with `force` on an inadmissible input.
  bool verified = true;

  /// Smallest slack divided by the chain's largest magnitude (or 1 if the
  /// chain is identically zero).
  double min_relative_slack() const noexcept;
};

/// Builds a chain and decides all_hold: every adjacent pair satisfies
/// values[k] <= values[k+1] + max(kChainAbs, rel_tol * max|values|).
BoundChain make_chain(std::vector<std::string> labels, std::vector<double> values,
                      double rel_tol = tolerance::kChainRel, bool verified = true);

/// M(Phi, phi, F) in its minus-sign form:
///   M^2 = sum_i [(|Phi_i| - |phi_i|)^2 + 4 (|Phi_i conj(phi_i)| - Re(Phi_i conj(phi_i)))]
///         / sum_i Re(Phi_i conj(phi_i))
/// so that M^2 / 4 + 1 = sum_i (|Phi_i| + |phi_i|)^2 / (4 sum_i Re(Phi_i conj(phi_i))).
struct MFactor {
  double value = 0.0;
  std::vector<double> numerator_terms;
  double denominator = 0.0;
};

/// Throws NonpositiveReSum when sum_i Re(Phi_i conj(phi_i)) <= 0.
MFactor m_factor(const ScalarCorridor& c);

struct BoundOptions {
  /// Evaluate even when the admissibility hypothesis fails; chains come back
  /// with verified == false.
  bool force = false;
  /// 0 selects hypothesis_tolerance(family).
  double hypothesis_tol = 0.0;
  double chain_rel = tolerance::kChainRel;
};

/// ||x||^2 - sum_i |<x, e_i>|^2, evaluated as the squared norm of the
/// projection residual x - sum_i <x, e_i> e_i. The two agree for an
/// orthonormal family; the residual form does not cancel catastrophically
/// when x lies close to span{e_i}.
double bessel_defect(const Vector& x, const OrthonormalFamily& fam);

/// <x, y> - sum_i <x, e_i><e_i, y>, evaluated as the inner product of the two
/// projection residuals.
Scalar gruss_defect(const Vector& x, const Vector& y, const OrthonormalFamily& fam);

/// [ ||x|| ; (1/2) sum_i Re(Phi_i conj<x,e_i> + conj(phi_i) <x,e_i>) / sqrt(sum_i Re(Phi_i conj(phi_i))) ]
BoundChain norm_bound_linear(const Vector& x, const OrthonormalFamily& fam, const ScalarCorridor& c,
                             const BoundOptions& opts = {});

struct NormVariant {
  enum class Kind { Cbs, MaxSum, Holder, SumMax };
  Kind kind = Kind::Cbs;
  double p = 2.0;

  static NormVariant cbs() { return {Kind::Cbs, 2.0}; }
  static NormVariant max_sum() { return {Kind::MaxSum, 2.0}; }
  static NormVariant holder(double p) { return {Kind::Holder, p}; }
  static NormVariant sum_max() { return {Kind::SumMax, 2.0}; }
};

/// cbs: [ ||x||^2 ; (1/4) sum (|Phi_i|+|phi_i|)^2 / sum Re(Phi_i conj(phi_i)) * sum |<x,e_i>|^2 ].
/// The three Hoelder splittings are evaluated at the ||x|| level as
/// [ ||x|| ; linear bound ; (1/2) sum (|Phi_i|+|phi_i|) |<x,e_i>| / sqrt(S) ; variant ].
BoundChain norm_bound_quadratic(const Vector& x, const OrthonormalFamily& fam, const ScalarCorridor& c,
                                NormVariant variant, const BoundOptions& opts = {});

struct BesselCounterpart {
  /// [ 0 ; bessel_defect ; (1/4) M^2 sum |<x,e_i>|^2 ]
  BoundChain chain;
  /// Nonnegative real corridors only:
  /// [ 0 ; bessel_defect ; (1/4) sum (M_i - m_i)^2 / sum M_i m_i * sum <x,e_i>^2 ]
  std::optional<BoundChain> real_form;
};
BesselCounterpart bessel_counterpart(const Vector& x, const OrthonormalFamily& fam, const ScalarCorridor& c,
                                     const BoundOptions& opts = {});

/// Schwarz-type counterparts for one pair (x, y) and scalars delta, Delta.
struct SchwarzCounterparts {
  BoundChain linear;          // ||x|| ||y|| <= ... <= ...
  BoundChain linear_defect;   // 0 <= ||x|| ||y|| - |<x,y>| <= ...
  BoundChain quadratic;       // ||x||^2 ||y||^2 <= ...
  BoundChain quadratic_defect;  // 0 <= ||x||^2 ||y||^2 - |<x,y>|^2 <= ...
  HypothesisReport hypothesis;
};

/// Admissibility is Re<Delta y - x, x - delta y> >= 0, checked through the
/// one-member family {y / ||y||} with corridor (delta ||y||, Delta ||y||).
/// Denominators use sqrt(Re(Delta conj(delta))).
SchwarzCounterparts schwarz_counterparts(const Vector& x, const Vector& y, Scalar delta, Scalar Delta,
                                         const BoundOptions& opts = {});

/// [ |gruss_defect| ; r_x r_y - sqrt(cond_i(x)) sqrt(cond_i(y)) ; r_x r_y ]
BoundChain gruss_refined_sqrt(const Vector& x, const Vector& y, const OrthonormalFamily& fam,
                              const ScalarCorridor& cx, const ScalarCorridor& cy,
                              const BoundOptions& opts = {});

/// [ |gruss_defect| ; r_x r_y - sum_i |mid_x,i - <x,e_i>| |mid_y,i - <y,e_i>| ; r_x r_y ]
BoundChain gruss_refined_midpoint(const Vector& x, const Vector& y, const OrthonormalFamily& fam,
                                  const ScalarCorridor& cx, const ScalarCorridor& cy,
                                  const BoundOptions& opts = {});

struct GrussBound {
  /// [ 0 ; |gruss_defect| ; (1/4) M_x M_y (sum |<x,e_i>|^2)^(1/2) (sum |<y,e_i>|^2)^(1/2) ]
  BoundChain chain;
  /// [ |gruss_defect|^2 ; bessel_defect(x) bessel_defect(y) ; product of the two Bessel counterparts ]
  BoundChain schwarz_step;
  /// Both corridors nonnegative real: the squared form with constant 1/16.
  std::optional<BoundChain> real_square;
  /// One member, real corridors with 0 < a < A and 0 < b < B, nonzero
  /// coefficients: [ |<x,y> / (<x,e><e,y>) - 1| ; (A-a)(B-b) / (4 sqrt(abAB)) ].
  std::optional<BoundChain> ratio_form;
};
GrussBound gruss_bound(const Vector& x, const Vector& y, const OrthonormalFamily& fam, const ScalarCorridor& cx,
                       const ScalarCorridor& cy, const BoundOptions& opts = {});

/// lambda in (0, 1); hypothesis on z = lambda x + (1 - lambda) y.
/// [ Re gruss_defect(x, y) ; M^2 sum |<z,e_i>|^2 / (16 lambda (1 - lambda)) ]
BoundChain companion_bound(const Vector& x, const Vector& y, const OrthonormalFamily& fam,
                           const ScalarCorridor& c, double lambda, const BoundOptions& opts = {});

}  // namespace orthobound
