#include "orthobound/campaign.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "orthobound/bounds.hpp"
#include "orthobound/error.hpp"
#include "orthobound/hypothesis.hpp"
#include "orthobound/integral.hpp"

namespace orthobound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Unconditional properties are checked at this relative slop.
constexpr double kUnconditionalRel = 1e-10;

std::size_t idx(BoundId id) { return static_cast<std::size_t>(id); }

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Boundary and center instances are the delicate ones, so they are
// oversampled.
double draw_slack(Rng& rng) {
  const double u = uniform(rng, 0.0, 1.0);
  if (u < 0.15) return 1.0;
  if (u < 0.25) return 0.0;
  return uniform(rng, 0.0, 1.0);
}

Vector random_direction(Rng& rng, std::size_t dim, Field field) {
  Vector u = random_vector(rng, dim, field);
  double n = norm(u);
  while (n == 0.0) {
    u = random_vector(rng, dim, field);
    n = norm(u);
  }
  return u * (1.0 / n);
}

Scalar random_scalar(Rng& rng, Field field, double scale) {
  const double re = uniform(rng, -scale, scale);
  return {re, field == Field::Complex ? uniform(rng, -scale, scale) : 0.0};
}

class TrialRecorder {
 public:
  explicit TrialRecorder(TrialOutcome& out) : out_(out) {}

  void chain(BoundId id, const std::function<BoundChain()>& eval) {
    try {
      put(id, eval());
    } catch (const Error&) {
      fail(id);
    }
  }

  void put(BoundId id, const BoundChain& c) {
    const std::size_t k = idx(id);
    const double s = c.min_relative_slack();
    const bool bad = !c.all_hold || !c.verified;
    if (!out_.evaluated[k]) {
      out_.evaluated[k] = true;
      out_.slack[k] = s;
      out_.violated[k] = bad;
    } else {
      out_.slack[k] = std::min(out_.slack[k], s);
      out_.violated[k] = out_.violated[k] || bad;
    }
  }

  void value(BoundId id, double relative_slack, bool ok) {
    const std::size_t k = idx(id);
    out_.evaluated[k] = true;
    out_.slack[k] = relative_slack;
    out_.violated[k] = !ok;
  }

  void fail(BoundId id) {
    const std::size_t k = idx(id);
    out_.evaluated[k] = true;
    out_.violated[k] = true;
    out_.slack[k] = -kInf;
  }

 private:
  TrialOutcome& out_;
};

void run_trial(const FuzzConfig& cfg, std::size_t index, TrialOutcome& out) {
  Rng rng = make_rng(cfg.seed, index);
  const Field field = cfg.mode;
  const CorridorSpec spec{field, cfg.sign, 2.0};
  const OrthonormalFamily fam = random_family(rng, cfg.dim, cfg.family_size, field);
  const ScalarCorridor cx = random_corridor(rng, cfg.family_size, spec);
  const ScalarCorridor cy = random_corridor(rng, cfg.family_size, spec);
  if (!(cx.re_sum() > 0.0) || !(cy.re_sum() > 0.0)) {
    out.rejected = true;
    return;
  }
  const Vector x = random_admissible(fam, cx, rng(), draw_slack(rng)).first;
  const Vector y = random_admissible(fam, cy, rng(), draw_slack(rng)).first;
  const BoundOptions opts{false, 0.0, cfg.chain_rel};

  TrialRecorder rec(out);
  rec.chain(BoundId::Eq1_3, [&] { return gruss_refined_sqrt(x, y, fam, cx, cy, opts); });
  rec.chain(BoundId::Eq1_4, [&] { return gruss_refined_midpoint(x, y, fam, cx, cy, opts); });
  rec.chain(BoundId::Eq2_1, [&] { return norm_bound_quadratic(x, fam, cx, NormVariant::cbs(), opts); });
  rec.chain(BoundId::Eq2_6, [&] { return norm_bound_linear(x, fam, cx, opts); });
  rec.chain(BoundId::Eq2_11Max, [&] { return norm_bound_quadratic(x, fam, cx, NormVariant::max_sum(), opts); });
  const double p = uniform(rng, 1.1, 5.0);
  rec.chain(BoundId::Eq2_11Holder,
            [&] { return norm_bound_quadratic(x, fam, cx, NormVariant::holder(p), opts); });
  rec.chain(BoundId::Eq2_11Sum, [&] { return norm_bound_quadratic(x, fam, cx, NormVariant::sum_max(), opts); });

  try {
    const BesselCounterpart bc = bessel_counterpart(x, fam, cx, opts);
    rec.put(BoundId::Eq2_12, bc.chain);
    if (bc.real_form) rec.put(BoundId::Eq2_17, *bc.real_form);
  } catch (const Error&) {
    rec.fail(BoundId::Eq2_12);
  }

  try {
    const GrussBound gb = gruss_bound(x, y, fam, cx, cy, opts);
    rec.put(BoundId::Eq3_3, gb.chain);
    rec.put(BoundId::Eq3_5, gb.schwarz_step);
    if (gb.real_square) rec.put(BoundId::Eq3_7, *gb.real_square);
  } catch (const Error&) {
    rec.fail(BoundId::Eq3_3);
  }

  // Schwarz counterparts: x_s inside the ball around ((delta + Delta) / 2) y_s.
  {
    const Scalar delta = random_scalar(rng, field, 2.0);
    const Scalar Delta = random_scalar(rng, field, 2.0);
    const Vector ys = random_vector(rng, cfg.dim, field);
    const double slack = draw_slack(rng);
    const Vector dir = random_direction(rng, cfg.dim, field);
    if (mul_conj(Delta, delta).real() > 0.0) {
      const Vector xs = ys * ((delta + Delta) * 0.5) + dir * (slack * 0.5 * std::abs(Delta - delta) * norm(ys));
      try {
        const SchwarzCounterparts sc = schwarz_counterparts(xs, ys, delta, Delta, opts);
        rec.put(BoundId::Eq2_20, sc.linear);
        rec.put(BoundId::Eq2_21, sc.linear_defect);
        rec.put(BoundId::Eq2_22, sc.quadratic);
        rec.put(BoundId::Eq2_23, sc.quadratic_defect);
      } catch (const Error&) {
        rec.fail(BoundId::Eq2_20);
      }
    }
  }

  // Single-member family.
  {
    const OrthonormalFamily one = validate_family({fam[0]});
    const auto c1x = random_positive_corridor(rng, 1, spec);
    const auto c1y = random_positive_corridor(rng, 1, spec);
    if (c1x && c1y) {
      const Vector x1 = random_admissible(one, *c1x, rng(), draw_slack(rng)).first;
      const Vector y1 = random_admissible(one, *c1y, rng(), draw_slack(rng)).first;
      try {
        const GrussBound gb = gruss_bound(x1, y1, one, *c1x, *c1y, opts);
        rec.put(BoundId::Eq3_10, gb.chain);
        if (gb.ratio_form) rec.put(BoundId::Eq3_10, *gb.ratio_form);
      } catch (const Error&) {
        rec.fail(BoundId::Eq3_10);
      }
    }
  }

  // Companion inequality: z admissible, x free, y solved from z.
  for (std::size_t k = 0; k < cfg.lambdas.size(); ++k) {
    const double lambda = cfg.lambdas[k];
    const Vector z = random_admissible(fam, cx, rng(), draw_slack(rng)).first;
    const Vector xc = random_vector(rng, cfg.dim, z.field());
    const Vector yc = (z - xc * lambda) * (1.0 / (1.0 - lambda));
    const auto id = static_cast<BoundId>(idx(BoundId::Eq4_3Lambda0) + k);
    rec.chain(id, [&] { return companion_bound(xc, yc, fam, cx, lambda, opts); });
  }

  // Unconditional properties on arbitrary vectors.
  {
    const Vector xr = random_vector(rng, cfg.dim, field) * uniform(rng, 0.1, 3.0);
    const Vector yr = random_vector(rng, cfg.dim, field) * uniform(rng, 0.1, 3.0);
    const double nx2 = norm_sq(xr);
    const double ny2 = norm_sq(yr);
    double proj = 0.0;
    for (Scalar c : fam.coefficients(xr)) proj += std::norm(c);
    const double literal = nx2 - proj;
    rec.value(BoundId::BesselUnconditional, literal / nx2, literal >= -kUnconditionalRel * nx2);

    // Literal <x,y> - sum <x,e_i><e_i,y>, not the residual form.
    const auto cxr = fam.coefficients(xr);
    const auto cyr = fam.coefficients(yr);
    Scalar lit = inner(xr, yr);
    for (std::size_t i = 0; i < cxr.size(); ++i) lit -= mul_conj(cxr[i], cyr[i]);
    const double gd = std::abs(lit);
    const double rhs = (bessel_defect(xr, fam) + kUnconditionalRel * nx2) *
                       (bessel_defect(yr, fam) + kUnconditionalRel * ny2);
    rec.value(BoundId::SchwarzStepUnconditional, (rhs - gd * gd) / std::max(rhs, 1e-300), gd * gd <= rhs);
  }
}

void merge(FuzzSummary& s, const TrialOutcome& t, std::size_t index) {
  ++s.trials;
  if (t.rejected) {
    ++s.rejected;
    return;
  }
  for (std::size_t k = 0; k < kBoundCount; ++k) {
    if (!t.evaluated[k]) continue;
    BoundTally& b = s.bounds[k];
    ++b.evaluated;
    if (t.violated[k]) {
      if (b.violations == 0) b.worst_trial = index;
      ++b.violations;
    } else if (b.violations == 0 && t.slack[k] < b.min_slack) {
      b.worst_trial = index;
    }
    b.min_slack = std::min(b.min_slack, t.slack[k]);
  }
}

FuzzSummary empty_summary(const FuzzConfig& config) {
  if (config.family_size == 0 || config.dim < config.family_size) {
    throw Error(ErrorKind::InvalidArgument, "fuzz needs 1 <= family size <= dim");
  }
  for (double l : config.lambdas) {
    if (!(l > 0.0 && l < 1.0)) throw Error(ErrorKind::BadLambda, "fuzz lambdas must lie in (0, 1)");
  }
  FuzzSummary s;
  s.config = config;
  for (auto& b : s.bounds) b.min_slack = kInf;
  return s;
}

void run_equivalence(const EquivalenceConfig& cfg, std::size_t index, EquivalenceOutcome& out) {
  Rng rng = make_rng(cfg.seed, index);
  out.real = index % 2 == 0;
  const Field field = out.real ? Field::Real : Field::Complex;
  const std::size_t dim = uniform_index(rng, 1, cfg.max_dim);
  const std::size_t fsize = uniform_index(rng, 1, std::min(cfg.max_family, dim));
  const OrthonormalFamily fam = random_family(rng, dim, fsize, field);
  const ScalarCorridor c = random_corridor(rng, fsize, {field, CorridorSign::Signed, 2.0});
  const Vector center = fam.synthesize(c.midpoints());

  const double u = uniform(rng, 0.0, 1.0);
  Vector x;
  if (u < 0.5) {
    x = center + random_direction(rng, dim, field) * (uniform(rng, 0.0, 2.0) * c.radius());
  } else if (u < 0.6) {
    x = center + random_direction(rng, dim, field) * c.radius();
  } else {
    x = random_vector(rng, dim, field) * uniform(rng, 0.0, 3.0);
  }

  const double r2 = c.radius() * c.radius();
  const double scale = std::max(1.0, r2);
  try {
    const HypothesisReport rep = check_hypothesis(x, fam, c, tolerance::kHypothesis);
    out.identity_gap = rep.identity_gap / scale;
    out.identity_failure = out.identity_gap > cfg.band;
    out.admissible = rep.holds;
    out.inside_band = std::abs(rep.cond_i_value) <= cfg.band * scale;
    if (!out.inside_band) {
      out.disagreement = (rep.cond_i_value >= 0.0) != (rep.cond_ii_residual <= rep.radius);
    }
  } catch (const Error&) {
    out.identity_failure = true;
    out.identity_gap = kInf;
  }
}

void merge(EquivalenceSummary& s, const EquivalenceOutcome& o) {
  ++s.trials;
  s.real_trials += o.real ? 1 : 0;
  s.admissible += o.admissible ? 1 : 0;
  s.inside_band += o.inside_band ? 1 : 0;
  s.disagreements += o.disagreement ? 1 : 0;
  s.identity_failures += o.identity_failure ? 1 : 0;
  s.max_identity_gap = std::max(s.max_identity_gap, o.identity_gap);
}

struct SandwichOutcome {
  bool skipped = false;
  bool passed = false;
  bool admissible = false;
};

SandwichOutcome sandwich_trial(std::uint64_t seed, std::size_t index) {
  Rng rng = make_rng(seed, index);
  const bool disjoint = index % 2 == 0;
  const std::size_t n = uniform_index(rng, 4, 24);
  const std::size_t fsize = uniform_index(rng, 1, std::min<std::size_t>(4, n / 2));

  std::vector<double> nodes(n), weights(n), rho(n);
  for (std::size_t j = 0; j < n; ++j) {
    nodes[j] = static_cast<double>(j) + uniform(rng, 0.0, 0.5);
    weights[j] = uniform(rng, 0.1, 1.0);
    rho[j] = uniform(rng, 0.5, 2.0);
    // Zero-mass nodes are ignored by the sandwich check; the family must
    // still be orthonormal, so they only appear with disjoint supports.
    if (disjoint && uniform(rng, 0.0, 1.0) < 0.1) weights[j] = 0.0;
  }
  weights[0] = std::max(weights[0], 0.1);
  const QuadratureGrid grid(nodes, weights, rho);

  std::vector<std::vector<double>> fv(fsize, std::vector<double>(n, 0.0));
  if (disjoint) {
    // Node j belongs to group j mod (fsize + 1); the last group is unsupported.
    for (std::size_t i = 0; i < fsize; ++i) {
      double mass = 0.0;
      for (std::size_t j = i; j < n; j += fsize + 1) {
        fv[i][j] = uniform(rng, 0.2, 1.0);
        mass += grid.mass(j) * fv[i][j] * fv[i][j];
      }
      if (!(mass > 0.0)) return {true, false, false};
      for (double& v : fv[i]) v /= std::sqrt(mass);
    }
  } else {
    const OrthonormalFamily fam = random_family(rng, n, fsize, Field::Real);
    for (std::size_t i = 0; i < fsize; ++i) {
      for (std::size_t j = 0; j < n; ++j) fv[i][j] = fam[i][j].real() / grid.scale(j);
    }
  }
  std::vector<SampledFunction> fns;
  for (const auto& v : fv) fns.push_back(SampledFunction::real(v));

  std::vector<double> m(fsize), M(fsize);
  for (std::size_t i = 0; i < fsize; ++i) {
    m[i] = uniform(rng, 0.05, 2.0);
    M[i] = m[i] + uniform(rng, 0.0, 2.0);
  }
  std::vector<double> f(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = uniform(rng, 0.0, 1.0) < 0.2 ? std::round(uniform(rng, 0.0, 1.0)) : uniform(rng, 0.0, 1.0);
    for (std::size_t i = 0; i < fsize; ++i) f[j] += (m[i] + t * (M[i] - m[i])) * fv[i][j];
    if (uniform(rng, 0.0, 1.0) < 0.05) f[j] += uniform(rng, -0.1, 0.1);
  }
  const SampledFunction fs = SampledFunction::real(f);

  SandwichOutcome out;
  try {
    sandwich_check(fs, fns, grid, m, M);
    out.passed = true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SandwichViolated) throw;
    return out;
  }
  const IntegralInstance inst = integral_instance(fs, std::nullopt, fns, grid, real_corridor(m, M));
  out.admissible = inst.report_f.holds;
  return out;
}

}  // namespace

std::string_view bound_name(BoundId id) noexcept {
  switch (id) {
    case BoundId::Eq1_3: return "eq1.3";
    case BoundId::Eq1_4: return "eq1.4";
    case BoundId::Eq2_1: return "eq2.1";
    case BoundId::Eq2_6: return "eq2.6";
    case BoundId::Eq2_11Max: return "eq2.11:max";
    case BoundId::Eq2_11Holder: return "eq2.11:holder";
    case BoundId::Eq2_11Sum: return "eq2.11:sum";
    case BoundId::Eq2_12: return "eq2.12";
    case BoundId::Eq2_17: return "eq2.17";
    case BoundId::Eq2_20: return "eq2.20";
    case BoundId::Eq2_21: return "eq2.21";
    case BoundId::Eq2_22: return "eq2.22";
    case BoundId::Eq2_23: return "eq2.23";
    case BoundId::Eq3_3: return "eq3.3";
    case BoundId::Eq3_5: return "eq3.5";
    case BoundId::Eq3_7: return "eq3.7";
    case BoundId::Eq3_10: return "eq3.10";
    case BoundId::Eq4_3Lambda0: return "eq4.3:lambda0";
    case BoundId::Eq4_3Lambda1: return "eq4.3:lambda1";
    case BoundId::Eq4_3Lambda2: return "eq4.3:lambda2";
    case BoundId::BesselUnconditional: return "bessel";
    case BoundId::SchwarzStepUnconditional: return "eq3.4";
    case BoundId::Count: break;
  }
  return "unknown";
}

std::size_t FuzzSummary::total_violations() const noexcept {
  std::size_t n = 0;
  for (const auto& b : bounds) n += b.violations;
  return n;
}

bool FuzzSummary::operator==(const FuzzSummary& other) const noexcept {
  if (trials != other.trials || rejected != other.rejected) return false;
  for (std::size_t k = 0; k < kBoundCount; ++k) {
    const auto& a = bounds[k];
    const auto& b = other.bounds[k];
    if (a.evaluated != b.evaluated || a.violations != b.violations || a.worst_trial != b.worst_trial) return false;
    if (!(a.min_slack == b.min_slack)) return false;
  }
  return true;
}

TrialOutcome fuzz_trial(const FuzzConfig& config, std::size_t index) {
  TrialOutcome out;
  try {
    run_trial(config, index, out);
  } catch (const Error&) {
    // Family generation can only fail on a rank-deficient Gaussian draw.
    out = TrialOutcome{};
    out.rejected = true;
  }
  return out;
}

FuzzSummary run_fuzz_serial(const FuzzConfig& config) {
  FuzzSummary s = empty_summary(config);
  for (std::size_t i = 0; i < config.count; ++i) merge(s, fuzz_trial(config, i), i);
  return s;
}

FuzzSummary run_fuzz_parallel(const FuzzConfig& config) {
  FuzzSummary s = empty_summary(config);
  std::vector<TrialOutcome> outcomes(config.count);
  const auto n = static_cast<std::int64_t>(config.count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    outcomes[static_cast<std::size_t>(i)] = fuzz_trial(config, static_cast<std::size_t>(i));
  }
  for (std::size_t i = 0; i < config.count; ++i) merge(s, outcomes[i], i);
  return s;
}

EquivalenceOutcome equivalence_trial(const EquivalenceConfig& config, std::size_t index) {
  EquivalenceOutcome out;
  try {
    run_equivalence(config, index, out);
  } catch (const Error&) {
    out = EquivalenceOutcome{};
    out.real = index % 2 == 0;
    out.identity_failure = true;
    out.identity_gap = kInf;
  }
  return out;
}

EquivalenceSummary run_equivalence_serial(const EquivalenceConfig& config) {
  EquivalenceSummary s;
  for (std::size_t i = 0; i < config.count; ++i) merge(s, equivalence_trial(config, i));
  return s;
}

EquivalenceSummary run_equivalence_parallel(const EquivalenceConfig& config) {
  EquivalenceSummary s;
  std::vector<EquivalenceOutcome> outcomes(config.count);
  const auto n = static_cast<std::int64_t>(config.count);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    outcomes[static_cast<std::size_t>(i)] = equivalence_trial(config, static_cast<std::size_t>(i));
  }
  for (const auto& o : outcomes) merge(s, o);
  return s;
}

SandwichFuzzSummary run_sandwich_fuzz(std::uint64_t seed, std::size_t count) {
  std::vector<SandwichOutcome> outcomes(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    SandwichOutcome& o = outcomes[static_cast<std::size_t>(i)];
    try {
      o = sandwich_trial(seed, static_cast<std::size_t>(i));
    } catch (const Error&) {
      o = SandwichOutcome{true, false, false};
    }
  }
  SandwichFuzzSummary s;
  for (const auto& o : outcomes) {
    ++s.trials;
    s.skipped += o.skipped ? 1 : 0;
    s.sandwich_passed += o.passed ? 1 : 0;
    s.admissible += o.passed && o.admissible ? 1 : 0;
    s.implication_failures += o.passed && !o.admissible ? 1 : 0;
  }
  return s;
}

}  // namespace orthobound
