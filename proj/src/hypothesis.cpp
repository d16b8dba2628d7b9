#include "orthobound/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orthobound/error.hpp"
#include "orthobound/random.hpp"
#include "orthobound/tolerance.hpp"

namespace orthobound {

ScalarCorridor::ScalarCorridor(std::vector<Scalar> lo, std::vector<Scalar> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "corridor: phi has " + std::to_string(lo_.size()) + " entries, Phi has " +
                    std::to_string(hi_.size()));
  }
  if (lo_.empty()) throw Error(ErrorKind::EmptyFamily, "corridor has no entries");
  field_ = Field::Real;
  std::vector<double> re_terms(size()), width_terms(size());
  mid_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (Scalar z : {lo_[i], hi_[i]}) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorKind::NonFinite, "corridor entry " + std::to_string(i));
      }
      if (z.imag() != 0.0) field_ = Field::Complex;
    }
    re_terms[i] = mul_conj(hi_[i], lo_[i]).real();
    width_terms[i] = std::norm(hi_[i] - lo_[i]);
    mid_[i] = (hi_[i] + lo_[i]) * 0.5;
  }
  re_sum_ = pairwise_sum(std::span<const double>(re_terms));
  radius_ = 0.5 * std::sqrt(pairwise_sum(std::span<const double>(width_terms)));
}

bool ScalarCorridor::is_nonnegative_real() const noexcept {
  if (!is_real()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (lo_[i].real() < 0.0 || hi_[i].real() < 0.0) return false;
  }
  return true;
}

ScalarCorridor ScalarCorridor::scaled(double t) const {
  std::vector<Scalar> lo(lo_), hi(hi_);
  for (auto& z : lo) z *= t;
  for (auto& z : hi) z *= t;
  return ScalarCorridor(std::move(lo), std::move(hi));
}

double hypothesis_tolerance(const OrthonormalFamily& fam) noexcept {
  return std::max(tolerance::kHypothesis, 10.0 * static_cast<double>(fam.size()) * fam.gram_residual());
}

HypothesisReport check_hypothesis(const Vector& x, const OrthonormalFamily& fam, const ScalarCorridor& c,
                                  double tol) {
  if (c.size() != fam.size()) {
    throw Error(ErrorKind::DimensionMismatch, "corridor has " + std::to_string(c.size()) +
                                                  " entries for a family of " + std::to_string(fam.size()));
  }
  if (x.dim() != fam.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "x has dimension " + std::to_string(x.dim()) + ", family " + std::to_string(fam.dim()));
  }
  const Vector upper = fam.synthesize(c.hi());
  const Vector lower = fam.synthesize(c.lo());
  const Vector center = fam.synthesize(c.midpoints());

  HypothesisReport r;
  r.cond_i_value = inner(upper - x, x - lower).real();
  r.cond_ii_residual = norm(x - center);
  r.radius = c.radius();
  const double r2 = r.radius * r.radius;
  r.holds = r.cond_i_value >= -tol * std::max(1.0, r2);
  r.identity_gap = std::abs(r.cond_i_value - (r2 - r.cond_ii_residual * r.cond_ii_residual));

  const double scale = std::max({1.0, r2, norm_sq(x), norm_sq(center)});
  if (r.identity_gap > tol * scale) {
    throw Error(ErrorKind::IdentityViolation,
                "cond_i and radius^2 - residual^2 differ by " + std::to_string(r.identity_gap) +
                    " (family Gram residual " + std::to_string(fam.gram_residual()) + ", tol " +
                    std::to_string(tol) + ")");
  }
  return r;
}

HypothesisReport check_hypothesis(const Vector& x, const OrthonormalFamily& fam, const ScalarCorridor& c) {
  return check_hypothesis(x, fam, c, hypothesis_tolerance(fam));
}

std::pair<Vector, ScalarCorridor> random_admissible(const OrthonormalFamily& fam, const ScalarCorridor& c,
                                                    std::uint64_t seed, double slack) {
  if (!(slack >= 0.0 && slack <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "slack must lie in [0, 1]");
  }
  if (c.size() != fam.size()) {
    throw Error(ErrorKind::DimensionMismatch, "corridor and family sizes differ");
  }
  const Field field = (fam.field() == Field::Real && c.is_real()) ? Field::Real : Field::Complex;
  Vector center = fam.synthesize(c.midpoints());
  if (field == Field::Complex) center = center.as_complex();
  const double length = slack * c.radius();
  if (length == 0.0) return {center, c};

  Rng rng = make_rng(seed);
  Vector u = random_vector(rng, fam.dim(), field);
  double n = norm(u);
  while (n == 0.0) {
    u = random_vector(rng, fam.dim(), field);
    n = norm(u);
  }
  return {center + u * (length / n), c};
}

}  // namespace orthobound
