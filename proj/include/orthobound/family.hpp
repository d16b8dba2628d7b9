#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orthobound/space.hpp"
#include "orthobound/tolerance.hpp"

namespace orthobound {

/// Finite orthonormal family {e_i}, i in F, with its measured Gram residual
/// max |<e_i, e_j> - delta_ij|.
class OrthonormalFamily {
 public:
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t dim() const noexcept { return members_.front().dim(); }
  Field field() const noexcept;
  const Vector& operator[](std::size_t i) const { return members_[i]; }
  std::span<const Vector> members() const noexcept { return members_; }
  double gram_residual() const noexcept { return gram_residual_; }
  double tolerance() const noexcept { return tolerance_; }

  /// <x, e_i> for every i in F.
  std::vector<Scalar> coefficients(const Vector& x) const;
  /// sum_i coeffs[i] e_i
  Vector synthesize(std::span<const Scalar> coeffs) const;
  /// x - sum_i <x, e_i> e_i
  Vector residual(const Vector& x) const;

 private:
  friend OrthonormalFamily validate_family(std::vector<Vector> members, double tolerance);
  OrthonormalFamily(std::vector<Vector> members, double residual, double tolerance)
      : members_(std::move(members)), gram_residual_(residual), tolerance_(tolerance) {}

  std::vector<Vector> members_;
  double gram_residual_ = 0.0;
  double tolerance_ = 0.0;
};

/// Largest |<e_i, e_j> - delta_ij| and the pair where it occurs.
struct GramDeviation {
  double residual = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
};
GramDeviation gram_deviation(std::span<const Vector> members);

/// Throws EmptyFamily, DimensionMismatch, or GramResidualExceeded (with the
/// worst pair) when the Gram matrix is farther than `tolerance` from identity.
OrthonormalFamily validate_family(std::vector<Vector> members,
                                  double tolerance = tolerance::kFamilyExact);

/// Modified Gram-Schmidt with one reorthogonalization pass. Each output has
/// its first significant coordinate rotated onto the positive real axis.
/// Throws RankDeficient when a residual drops below tolerance * input norm.
OrthonormalFamily gram_schmidt(std::span<const Vector> raw,
                               double tolerance = tolerance::kFamilyExact);

enum class BuiltinKind { Canonical, Trig, Legendre };

/// Sampled functions of a built-in family on `grid`:
///   trig:     1/sqrt(2 pi), cos(ks)/sqrt(pi), sin(ks)/sqrt(pi), k = 1, 2, ...
///   legendre: sqrt((2k+1)/2) P_k(s)
/// The grid is expected to realize the matching measure ([0, 2pi] or [-1, 1]).
std::vector<SampledFunction> builtin_functions(BuiltinKind kind, std::size_t count,
                                               const QuadratureGrid& grid);

/// canonical(count) needs no grid and returns the first `count` unit vectors
/// of R^count. Trig and Legendre families are embedded through `grid` and
/// validated at `tolerance`.
OrthonormalFamily builtin_family(BuiltinKind kind, std::size_t count,
                                 const std::optional<QuadratureGrid>& grid = std::nullopt,
                                 double tolerance = tolerance::kFamilyQuadrature);

}  // namespace orthobound
