#include "orthobound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "orthobound/error.hpp"

namespace orthobound {

namespace {

struct Admissibility {
  HypothesisReport report;
  bool verified = true;
};

Admissibility require_admissible(const Vector& x, const OrthonormalFamily& fam, const ScalarCorridor& c,
                                 const BoundOptions& opts, const char* which) {
  const double tol = opts.hypothesis_tol > 0.0 ? opts.hypothesis_tol : hypothesis_tolerance(fam);
  HypothesisReport r = check_hypothesis(x, fam, c, tol);
  if (!r.holds && !opts.force) {
    throw Error(ErrorKind::HypothesisFailed,
                std::string(which) + ": residual " + std::to_string(r.cond_ii_residual) + " exceeds radius " +
                    std::to_string(r.radius) + " (cond_i " + std::to_string(r.cond_i_value) + ")");
  }
  return {r, r.holds};
}

void require_positive_re_sum(double re_sum, const char* which) {
  if (!(re_sum > 0.0)) {
    throw Error(ErrorKind::NonpositiveReSum,
                std::string(which) + ": sum Re(Phi_i conj(phi_i)) = " + std::to_string(re_sum));
  }
}

double sum_abs_sq(std::span<const Scalar> c) {
  std::vector<double> t(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) t[i] = std::norm(c[i]);
  return pairwise_sum(std::span<const double>(t));
}

// sum_i Re(Phi_i conj(c_i) + conj(phi_i) c_i)
double linear_numerator(const ScalarCorridor& c, std::span<const Scalar> coeffs) {
  std::vector<double> t(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    t[i] = mul_conj(c.hi()[i], coeffs[i]).real() + mul_conj(coeffs[i], c.lo()[i]).real();
  }
  return pairwise_sum(std::span<const double>(t));
}

std::vector<double> abs_sums(const ScalarCorridor& c) {
  std::vector<double> s(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) s[i] = std::abs(c.hi()[i]) + std::abs(c.lo()[i]);
  return s;
}

double holder_norm(std::span<const double> v, double p) {
  std::vector<double> t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = std::pow(v[i], p);
  return std::pow(pairwise_sum(std::span<const double>(t)), 1.0 / p);
}

void require_sizes(const OrthonormalFamily& fam, const ScalarCorridor& c) {
  if (fam.size() != c.size()) {
    throw Error(ErrorKind::DimensionMismatch, "corridor has " + std::to_string(c.size()) +
                                                  " entries for a family of " + std::to_string(fam.size()));
  }
}

}  // namespace

double BoundChain::min_relative_slack() const noexcept {
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;
  double worst = std::numeric_limits<double>::infinity();
  for (double s : slacks) worst = std::min(worst, s / scale);
  return worst;
}

BoundChain make_chain(std::vector<std::string> labels, std::vector<double> values, double rel_tol,
                      bool verified) {
  BoundChain chain;
  chain.labels = std::move(labels);
  chain.values = std::move(values);
  chain.verified = verified;
  double scale = 0.0;
  for (double v : chain.values) scale = std::max(scale, std::abs(v));
  const double slop = std::max(tolerance::kChainAbs, rel_tol * scale);
  chain.all_hold = true;
  for (std::size_t k = 0; k + 1 < chain.values.size(); ++k) {
    const double s = chain.values[k + 1] - chain.values[k];
    chain.slacks.push_back(s);
    if (!(s >= -slop)) chain.all_hold = false;
  }
  return chain;
}

MFactor m_factor(const ScalarCorridor& c) {
  require_positive_re_sum(c.re_sum(), "m_factor");
  MFactor m;
  m.denominator = c.re_sum();
  m.numerator_terms.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double a = std::abs(c.hi()[i]);
    const double b = std::abs(c.lo()[i]);
    const double re = mul_conj(c.hi()[i], c.lo()[i]).real();
    m.numerator_terms[i] = (a - b) * (a - b) + 4.0 * (a * b - re);
  }
  m.value = std::sqrt(pairwise_sum(std::span<const double>(m.numerator_terms)) / m.denominator);
  return m;
}

double bessel_defect(const Vector& x, const OrthonormalFamily& fam) { return norm_sq(fam.residual(x)); }

Scalar gruss_defect(const Vector& x, const Vector& y, const OrthonormalFamily& fam) {
  return inner(fam.residual(x), fam.residual(y));
}

BoundChain norm_bound_linear(const Vector& x, const OrthonormalFamily& fam, const ScalarCorridor& c,
                             const BoundOptions& opts) {
  require_sizes(fam, c);
  require_positive_re_sum(c.re_sum(), "eq2.6");
  const auto adm = require_admissible(x, fam, c, opts, "x");
  const auto coeffs = fam.coefficients(x);
  const double rhs = 0.5 * linear_numerator(c, coeffs) / std::sqrt(c.re_sum());
  return make_chain({"||x||", "eq2.6 rhs"}, {norm(x), rhs}, opts.chain_rel, adm.verified);
}

BoundChain norm_bound_quadratic(const Vector& x, const OrthonormalFamily& fam, const ScalarCorridor& c,
                                NormVariant variant, const BoundOptions& opts) {
  require_sizes(fam, c);
  if (variant.kind == NormVariant::Kind::Holder && !(variant.p > 1.0 && std::isfinite(variant.p))) {
    throw Error(ErrorKind::BadExponent, "Hoelder exponent must satisfy 1 < p < inf, got " +
                                            std::to_string(variant.p));
  }
  require_positive_re_sum(c.re_sum(), "eq2.1");
  const auto adm = require_admissible(x, fam, c, opts, "x");
  const auto coeffs = fam.coefficients(x);
  const auto sums = abs_sums(c);

  if (variant.kind == NormVariant::Kind::Cbs) {
    std::vector<double> sq(sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i) sq[i] = sums[i] * sums[i];
    const double factor = 0.25 * pairwise_sum(std::span<const double>(sq)) / c.re_sum();
    return make_chain({"||x||^2", "eq2.1 rhs"}, {norm_sq(x), factor * sum_abs_sq(coeffs)}, opts.chain_rel,
                      adm.verified);
  }

  std::vector<double> mags(coeffs.size()), prod(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mags[i] = std::abs(coeffs[i]);
    prod[i] = sums[i] * mags[i];
  }
  const double half_inv_root = 0.5 / std::sqrt(c.re_sum());
  const double linear = half_inv_root * linear_numerator(c, coeffs);
  const double termwise = half_inv_root * pairwise_sum(std::span<const double>(prod));
  double split = 0.0;
  std::string label;
  switch (variant.kind) {
    case NormVariant::Kind::MaxSum:
      split = *std::max_element(sums.begin(), sums.end()) * pairwise_sum(std::span<const double>(mags));
      label = "eq2.11 max-sum";
      break;
    case NormVariant::Kind::Holder: {
      const double q = variant.p / (variant.p - 1.0);
      split = holder_norm(sums, variant.p) * holder_norm(mags, q);
      label = "eq2.11 holder p=" + std::to_string(variant.p);
      break;
    }
    case NormVariant::Kind::SumMax:
      split = *std::max_element(mags.begin(), mags.end()) * pairwise_sum(std::span<const double>(sums));
      label = "eq2.11 sum-max";
      break;
    case NormVariant::Kind::Cbs:
      break;
  }
  return make_chain({"||x||", "eq2.6 rhs", "eq2.7 termwise", label},
                    {norm(x), linear, termwise, half_inv_root * split}, opts.chain_rel, adm.verified);
}

BesselCounterpart bessel_counterpart(const Vector& x, const OrthonormalFamily& fam, const ScalarCorridor& c,
                                     const BoundOptions& opts) {
  require_sizes(fam, c);
  const MFactor m = m_factor(c);
  const auto adm = require_admissible(x, fam, c, opts, "x");
  const auto coeffs = fam.coefficients(x);
  const double defect = bessel_defect(x, fam);
  const double proj = sum_abs_sq(coeffs);

  BesselCounterpart out;
  out.chain = make_chain({"0", "bessel defect", "eq2.12 rhs"}, {0.0, defect, 0.25 * m.value * m.value * proj},
                         opts.chain_rel, adm.verified);
  if (c.is_nonnegative_real()) {
    std::vector<double> width(c.size()), prod(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double lo = c.lo()[i].real();
      const double hi = c.hi()[i].real();
      width[i] = (hi - lo) * (hi - lo);
      prod[i] = hi * lo;
    }
    const double factor =
        0.25 * pairwise_sum(std::span<const double>(width)) / pairwise_sum(std::span<const double>(prod));
    out.real_form = make_chain({"0", "bessel defect", "eq2.17 rhs"}, {0.0, defect, factor * proj},
                               opts.chain_rel, adm.verified);
  }
  return out;
}

SchwarzCounterparts schwarz_counterparts(const Vector& x, const Vector& y, Scalar delta, Scalar Delta,
                                         const BoundOptions& opts) {
  if (x.dim() != y.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "x and y differ in dimension");
  }
  const double ny = norm(y);
  if (ny == 0.0) throw Error(ErrorKind::ZeroVector, "y must be nonzero");
  const double s = mul_conj(Delta, delta).real();
  require_positive_re_sum(s, "cor2.5");

  const OrthonormalFamily unit = validate_family({y * (1.0 / ny)});
  const ScalarCorridor reduced({delta * ny}, {Delta * ny});
  const auto adm = require_admissible(x, unit, reduced, opts, "x");

  const Scalar xy = inner(x, y);
  const double axy = std::abs(xy);
  const double nx = norm(x);
  const double root = std::sqrt(s);
  const double ad = std::abs(Delta);
  const double al = std::abs(delta);
  const double abs_prod = ad * al;

  const double mid = 0.5 * (mul_conj(Delta, xy).real() + mul_conj(xy, delta).real()) / root;
  const double outer = 0.5 * (ad + al) / root * axy;
  const double root_gap = std::sqrt(ad) - std::sqrt(al);
  const double defect_outer = 0.5 * (root_gap * root_gap + 2.0 * (std::sqrt(abs_prod) - root)) / root * axy;

  SchwarzCounterparts out;
  out.hypothesis = adm.report;
  out.linear = make_chain({"||x|| ||y||", "eq2.20 middle", "eq2.20 rhs"}, {nx * ny, mid, outer}, opts.chain_rel,
                          adm.verified);
  out.linear_defect = make_chain({"0", "||x|| ||y|| - |<x,y>|", "eq2.20 middle - |<x,y>|", "eq2.21 rhs"},
                                 {0.0, nx * ny - axy, mid - axy, defect_outer}, opts.chain_rel, adm.verified);
  const double lhs2 = nx * nx * ny * ny;
  out.quadratic = make_chain({"||x||^2 ||y||^2", "eq2.22 rhs"},
                             {lhs2, 0.25 * (ad + al) * (ad + al) / s * axy * axy}, opts.chain_rel, adm.verified);
  out.quadratic_defect =
      make_chain({"0", "||x||^2 ||y||^2 - |<x,y>|^2", "eq2.23 rhs"},
                 {0.0, lhs2 - axy * axy, 0.25 * ((ad - al) * (ad - al) + 4.0 * (abs_prod - s)) / s * axy * axy},
                 opts.chain_rel, adm.verified);
  return out;
}

BoundChain gruss_refined_sqrt(const Vector& x, const Vector& y, const OrthonormalFamily& fam,
                              const ScalarCorridor& cx, const ScalarCorridor& cy, const BoundOptions& opts) {
  require_sizes(fam, cx);
  require_sizes(fam, cy);
  const auto ax = require_admissible(x, fam, cx, opts, "x");
  const auto ay = require_admissible(y, fam, cy, opts, "y");
  const double outer = cx.radius() * cy.radius();
  const double correction =
      std::sqrt(std::max(0.0, ax.report.cond_i_value)) * std::sqrt(std::max(0.0, ay.report.cond_i_value));
  return make_chain({"|gruss defect|", "eq1.3 refined", "eq1.3 outer"},
                    {std::abs(gruss_defect(x, y, fam)), outer - correction, outer}, opts.chain_rel,
                    ax.verified && ay.verified);
}

BoundChain gruss_refined_midpoint(const Vector& x, const Vector& y, const OrthonormalFamily& fam,
                                  const ScalarCorridor& cx, const ScalarCorridor& cy, const BoundOptions& opts) {
  require_sizes(fam, cx);
  require_sizes(fam, cy);
  const auto ax = require_admissible(x, fam, cx, opts, "x");
  const auto ay = require_admissible(y, fam, cy, opts, "y");
  const auto coeff_x = fam.coefficients(x);
  const auto coeff_y = fam.coefficients(y);
  std::vector<double> t(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    t[i] = std::abs(cx.midpoints()[i] - coeff_x[i]) * std::abs(cy.midpoints()[i] - coeff_y[i]);
  }
  const double outer = cx.radius() * cy.radius();
  return make_chain({"|gruss defect|", "eq1.4 refined", "eq1.4 outer"},
                    {std::abs(gruss_defect(x, y, fam)), outer - pairwise_sum(std::span<const double>(t)), outer},
                    opts.chain_rel, ax.verified && ay.verified);
}

GrussBound gruss_bound(const Vector& x, const Vector& y, const OrthonormalFamily& fam, const ScalarCorridor& cx,
                       const ScalarCorridor& cy, const BoundOptions& opts) {
  require_sizes(fam, cx);
  require_sizes(fam, cy);
  const MFactor mx = m_factor(cx);
  const MFactor my = m_factor(cy);
  const auto ax = require_admissible(x, fam, cx, opts, "x");
  const auto ay = require_admissible(y, fam, cy, opts, "y");
  const bool verified = ax.verified && ay.verified;

  const auto coeff_x = fam.coefficients(x);
  const auto coeff_y = fam.coefficients(y);
  const double px = sum_abs_sq(coeff_x);
  const double py = sum_abs_sq(coeff_y);
  const double defect = std::abs(gruss_defect(x, y, fam));

  GrussBound out;
  out.chain = make_chain({"0", "|gruss defect|", "eq3.3 rhs"},
                         {0.0, defect, 0.25 * mx.value * my.value * std::sqrt(px) * std::sqrt(py)}, opts.chain_rel,
                         verified);
  out.schwarz_step = make_chain(
      {"|gruss defect|^2", "bessel defect(x) * bessel defect(y)", "eq3.5 rhs"},
      {defect * defect, bessel_defect(x, fam) * bessel_defect(y, fam),
       (0.25 * mx.value * mx.value * px) * (0.25 * my.value * my.value * py)},
      opts.chain_rel, verified);

  if (cx.is_nonnegative_real() && cy.is_nonnegative_real()) {
    std::vector<double> wx(fam.size()), wy(fam.size()), qx(fam.size()), qy(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const double m = cx.lo()[i].real(), M = cx.hi()[i].real();
      const double n = cy.lo()[i].real(), N = cy.hi()[i].real();
      wx[i] = (M - m) * (M - m);
      wy[i] = (N - n) * (N - n);
      qx[i] = M * m;
      qy[i] = N * n;
    }
    const auto sum = [](const std::vector<double>& v) { return pairwise_sum(std::span<const double>(v)); };
    out.real_square = make_chain({"0", "|gruss defect|^2", "eq3.7 rhs"},
                                 {0.0, defect * defect, sum(wx) * sum(wy) * px * py / (16.0 * sum(qx) * sum(qy))},
                                 opts.chain_rel, verified);
  }

  if (fam.size() == 1 && cx.is_real() && cy.is_real() && x.is_real() && y.is_real() && fam.field() == Field::Real) {
    const double a = cx.lo()[0].real(), A = cx.hi()[0].real();
    const double b = cy.lo()[0].real(), B = cy.hi()[0].real();
    const Scalar cxe = coeff_x[0];
    const Scalar cey = std::conj(coeff_y[0]);
    if (A > a && a > 0.0 && B > b && b > 0.0 && std::abs(cxe) > 0.0 && std::abs(cey) > 0.0) {
      const double ratio = std::abs(inner(x, y) / (cxe * cey) - 1.0);
      out.ratio_form = make_chain({"|<x,y>/(<x,e><e,y>) - 1|", "eq3.13 rhs"},
                                  {ratio, 0.25 * (A - a) * (B - b) / std::sqrt(a * b * A * B)}, opts.chain_rel,
                                  verified);
    }
  }
  return out;
}

BoundChain companion_bound(const Vector& x, const Vector& y, const OrthonormalFamily& fam,
                           const ScalarCorridor& c, double lambda, const BoundOptions& opts) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw Error(ErrorKind::BadLambda, "lambda must lie strictly inside (0, 1), got " + std::to_string(lambda));
  }
  require_sizes(fam, c);
  const MFactor m = m_factor(c);
  const Vector z = x * lambda + y * (1.0 - lambda);
  const auto adm = require_admissible(z, fam, c, opts, "lambda x + (1 - lambda) y");
  const double proj = sum_abs_sq(fam.coefficients(z));
  const double rhs = m.value * m.value * proj / (16.0 * lambda * (1.0 - lambda));
  return make_chain({"Re gruss defect", "eq4.3 rhs"}, {gruss_defect(x, y, fam).real(), rhs}, opts.chain_rel,
                    adm.verified);
}

}  // namespace orthobound
