#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "orthobound/family.hpp"
#include "orthobound/space.hpp"

namespace orthobound {

/// Per-index scalar bounds (phi_i, Phi_i) with the derived quantities every
/// bound needs, computed once at construction.
class ScalarCorridor {
 public:
  ScalarCorridor(std::vector<Scalar> lo, std::vector<Scalar> hi);

  std::size_t size() const noexcept { return lo_.size(); }
  std::span<const Scalar> lo() const noexcept { return lo_; }
  std::span<const Scalar> hi() const noexcept { return hi_; }
  std::span<const Scalar> midpoints() const noexcept { return mid_; }
  /// sum_i Re(Phi_i conj(phi_i))
  double re_sum() const noexcept { return re_sum_; }
  /// (1/2) (sum_i |Phi_i - phi_i|^2)^(1/2)
  double radius() const noexcept { return radius_; }
  bool is_real() const noexcept { return field_ == Field::Real; }
  /// Real corridor with every phi_i, Phi_i >= 0.
  bool is_nonnegative_real() const noexcept;

  ScalarCorridor scaled(double t) const;

 private:
  std::vector<Scalar> lo_;
  std::vector<Scalar> hi_;
  std::vector<Scalar> mid_;
  double re_sum_ = 0.0;
  double radius_ = 0.0;
  Field field_ = Field::Complex;
};

struct HypothesisReport {
  /// Re< sum Phi_i e_i - x, x - sum phi_i e_i >
  double cond_i_value = 0.0;
  /// || x - sum midpoint_i e_i ||
  double cond_ii_residual = 0.0;
  double radius = 0.0;
  /// cond_i_value >= -tol * max(1, radius^2)
  bool holds = false;
  /// | cond_i_value - (radius^2 - cond_ii_residual^2) |
  double identity_gap = 0.0;
};

/// Smallest tolerance check_hypothesis accepts for a family: ten times the
/// Gram residual per member, never below tolerance::kHypothesis.
double hypothesis_tolerance(const OrthonormalFamily& fam) noexcept;

/// Evaluates both admissibility forms and cross-checks them through
/// cond_i = radius^2 - residual^2. A gap above tol * max(1, r^2, |x|^2,
/// |center|^2) raises IdentityViolation, which happens when `tol` is
/// smaller than the family's Gram residual can support.
HypothesisReport check_hypothesis(const Vector& x, const OrthonormalFamily& fam, const ScalarCorridor& c,
                                  double tol);
HypothesisReport check_hypothesis(const Vector& x, const OrthonormalFamily& fam, const ScalarCorridor& c);

/// x = center + u with |u| = slack * radius and u a random direction in the
/// whole space, so condition (ii) holds by construction. slack in [0, 1].
std::pair<Vector, ScalarCorridor> random_admissible(const OrthonormalFamily& fam, const ScalarCorridor& c,
                                                    std::uint64_t seed, double slack);

}  // namespace orthobound
