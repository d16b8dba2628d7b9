#include "orthobound/experiments.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "orthobound/bounds.hpp"
#include "orthobound/error.hpp"
#include "orthobound/random.hpp"

namespace orthobound {

namespace {

constexpr std::size_t kMaxDim = 8;
constexpr std::size_t kMaxFamily = 4;

// The R^2 instance of the Bessel-counterpart sharpness argument.
struct PlaneConstruction {
  OrthonormalFamily family;
  Vector x;
  ScalarCorridor corridor;
};

PlaneConstruction plane_construction(double phi, double Phi) {
  const double s = std::numbers::sqrt2 / 2.0;
  const std::vector<double> e{s, s};
  const std::vector<double> x{phi * s, Phi * s};
  return {validate_family({Vector::real(e)}), Vector::real(x), ScalarCorridor({phi}, {Phi})};
}

void require_eps(std::span<const double> eps) {
  if (eps.empty()) throw Error(ErrorKind::InvalidArgument, "epsilon list is empty");
  for (double e : eps) {
    if (!(e > 0.0 && e < 1.0)) throw Error(ErrorKind::BadEpsilon, "epsilon must lie in (0, 1), got " + std::to_string(e));
  }
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

double draw_slack(Rng& rng) {
  const double u = uniform(rng, 0.0, 1.0);
  if (u < 0.3) return 1.0;
  if (u < 0.4) return 0.0;
  return uniform(rng, 0.0, 1.0);
}

enum Direction : unsigned { kNone = 0, kSqrtTighter = 1, kMidpointTighter = 2 };

struct Comparison {
  double sqrt_refined = 0.0;
  double midpoint_refined = 0.0;
  double outer = 0.0;
  unsigned direction = kNone;
};

Comparison compare(const PairInstance& inst) {
  const BoundChain s = gruss_refined_sqrt(inst.x, inst.y, inst.family, inst.cx, inst.cy);
  const BoundChain m = gruss_refined_midpoint(inst.x, inst.y, inst.family, inst.cx, inst.cy);
  Comparison c{s.values[1], m.values[1], s.values[2], kNone};
  const double strict = std::max(tolerance::kChainAbs, tolerance::kChainRel * c.outer);
  if (c.midpoint_refined - c.sqrt_refined > strict) c.direction = kSqrtTighter;
  if (c.sqrt_refined - c.midpoint_refined > strict) c.direction = kMidpointTighter;
  return c;
}

unsigned trial_direction(std::uint64_t seed, std::size_t index) {
  try {
    return compare(comparison_instance(seed, index)).direction;
  } catch (const Error&) {
    return kNone;
  }
}

ComparisonWitness make_witness(std::uint64_t seed, std::size_t index) {
  PairInstance inst = comparison_instance(seed, index);
  const Comparison c = compare(inst);
  return {index, std::move(inst), c.sqrt_refined, c.midpoint_refined, c.outer,
          std::abs(c.sqrt_refined - c.midpoint_refined)};
}

EqualityCase expect(std::string name, double slack, double tol = 1e-12) {
  return {std::move(name), slack, tol, std::abs(slack) <= tol};
}

}  // namespace

std::optional<SweepTarget> parse_sweep_target(std::string_view name) {
  if (name == "thm21" || name == "thm2.1") return SweepTarget::Thm21;
  if (name == "cor23" || name == "cor2.3") return SweepTarget::Cor23;
  if (name == "cor32" || name == "cor3.2") return SweepTarget::Cor32;
  return std::nullopt;
}

std::string_view to_string(SweepTarget target) noexcept {
  switch (target) {
    case SweepTarget::Thm21: return "thm21";
    case SweepTarget::Cor23: return "cor23";
    case SweepTarget::Cor32: return "cor32";
  }
  return "unknown";
}

std::vector<SweepRow> sharpness_sweep(SweepTarget target, std::span<const double> eps) {
  require_eps(eps);
  std::vector<SweepRow> rows;
  rows.reserve(eps.size());
  for (double e : eps) {
    const double lo = 1.0 - e;
    const double hi = 1.0 + e;
    SweepRow row{e, 0.0, 0.0, 0.0};
    switch (target) {
      case SweepTarget::Thm21: {
        const OrthonormalFamily fam = validate_family({Vector::basis(2, 0)});
        const Vector x = fam[0] * lo;
        const BoundChain c = norm_bound_quadratic(x, fam, ScalarCorridor({lo}, {hi}), NormVariant::cbs());
        row.defect = c.values[0];
        row.bound = c.values[1];
        break;
      }
      case SweepTarget::Cor23: {
        const PlaneConstruction p = plane_construction(lo, hi);
        const BesselCounterpart b = bessel_counterpart(p.x, p.family, p.corridor);
        row.defect = b.chain.values[1];
        row.bound = b.chain.values[2];
        break;
      }
      case SweepTarget::Cor32: {
        const PlaneConstruction p = plane_construction(lo, hi);
        const GrussBound g = gruss_bound(p.x, p.x, p.family, p.corridor, p.corridor);
        row.defect = g.real_square->values[1];
        row.bound = g.real_square->values[2];
        break;
      }
    }
    row.ratio = row.defect / row.bound;
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "epsilon,ratio,bound,defect\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", r.epsilon, r.ratio, r.bound, r.defect);
    out += buf;
  }
  return out;
}

PairInstance comparison_instance(std::uint64_t seed, std::size_t index) {
  Rng rng = make_rng(seed, index);
  const Field field = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? Field::Real : Field::Complex;
  const std::size_t fsize = std::uniform_int_distribution<std::size_t>(1, kMaxFamily)(rng);
  const std::size_t dim = std::uniform_int_distribution<std::size_t>(fsize, kMaxDim)(rng);
  const CorridorSpec spec{field, CorridorSign::Signed, 2.0};
  OrthonormalFamily fam = random_family(rng, dim, fsize, field);
  auto cx = random_positive_corridor(rng, fsize, spec);
  auto cy = random_positive_corridor(rng, fsize, spec);
  if (!cx || !cy) throw Error(ErrorKind::NonpositiveReSum, "no admissible corridor drawn");
  Vector x = random_admissible(fam, *cx, rng(), draw_slack(rng)).first;
  Vector y = random_admissible(fam, *cy, rng(), draw_slack(rng)).first;
  return {std::move(fam), std::move(x), std::move(y), std::move(*cx), std::move(*cy)};
}

ComparisonWitnesses bound_comparison_search(std::uint64_t seed, std::size_t trials) {
  std::vector<unsigned> dirs(trials, kNone);
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t i = 0; i < n; ++i) {
    dirs[static_cast<std::size_t>(i)] = trial_direction(seed, static_cast<std::size_t>(i));
  }
  const auto first = [&](unsigned d) { return std::find(dirs.begin(), dirs.end(), d) - dirs.begin(); };
  const auto s = static_cast<std::size_t>(first(kSqrtTighter));
  const auto m = static_cast<std::size_t>(first(kMidpointTighter));
  if (s == trials) {
    throw Error(ErrorKind::WitnessNotFound,
                "no instance with eq1.3 refined < eq1.4 refined in " + std::to_string(trials) + " trials");
  }
  if (m == trials) {
    throw Error(ErrorKind::WitnessNotFound,
                "no instance with eq1.4 refined < eq1.3 refined in " + std::to_string(trials) + " trials");
  }
  return {make_witness(seed, s), make_witness(seed, m)};
}

std::vector<EqualityCase> equality_cases() {
  std::vector<EqualityCase> cases;

  {
    // x = m e with m = M: the quadratic counterpart is an equality.
    const OrthonormalFamily fam = validate_family({Vector::basis(3, 1)});
    const Vector x = fam[0] * 1.5;
    const BoundChain c = norm_bound_quadratic(x, fam, ScalarCorridor({1.5}, {1.5}), NormVariant::cbs());
    cases.push_back(expect("x = me, m = M: eq2.1 equality", c.slacks[0] / c.values[1]));
    const BoundChain l = norm_bound_linear(x, fam, ScalarCorridor({1.5}, {1.5}));
    cases.push_back(expect("x = me, m = M: eq2.6 equality", l.slacks[0] / l.values[1]));
  }
  {
    // x = m e sits on the boundary of condition (i) for any m < M.
    const OrthonormalFamily fam = validate_family({Vector::basis(2, 0)});
    const HypothesisReport r = check_hypothesis(fam[0] * 0.5, fam, ScalarCorridor({0.5}, {2.0}));
    cases.push_back(expect("x = me, m < M: condition (i) boundary", r.cond_i_value));
  }
  {
    const PlaneConstruction p = plane_construction(1.0, 3.0);
    const HypothesisReport r = check_hypothesis(p.x, p.family, p.corridor);
    cases.push_back(expect("R^2 construction: condition (i) boundary", r.cond_i_value));
    const BesselCounterpart b = bessel_counterpart(p.x, p.family, p.corridor);
    cases.push_back(expect("R^2 construction phi=1, Phi=3: defect 1", b.chain.values[1] - 1.0));
    cases.push_back(expect("R^2 construction phi=1, Phi=3: bound 4/3", b.chain.values[2] - 4.0 / 3.0));
  }
  for (double eps : {0.5, 0.1, 0.01}) {
    const double eps_list[] = {eps};
    const SweepRow row = sharpness_sweep(SweepTarget::Cor23, eps_list).front();
    cases.push_back(expect("R^2 construction eps=" + std::to_string(eps) + ": ratio 1 - eps^2",
                           row.ratio - (1.0 - eps * eps)));
  }
  {
    // Zero-width corridor with x at its center: every defect vanishes.
    Rng rng = make_rng(2024);
    const OrthonormalFamily fam = random_family(rng, 5, 3, Field::Complex);
    const ScalarCorridor c({Scalar(1.0, 0.5), Scalar(2.0, -1.0), Scalar(0.5, 0.0)},
                           {Scalar(1.0, 0.5), Scalar(2.0, -1.0), Scalar(0.5, 0.0)});
    const Vector x = fam.synthesize(c.midpoints());
    const BesselCounterpart b = bessel_counterpart(x, fam, c);
    cases.push_back(expect("zero-width corridor, centered x: bessel defect", b.chain.values[1]));
    cases.push_back(expect("zero-width corridor, centered x: eq2.12 rhs", b.chain.values[2]));
    const BoundChain g = gruss_refined_sqrt(x, x, fam, c, c);
    cases.push_back(expect("zero-width corridor, centered x: eq1.3 outer", g.values[2]));
  }
  {
    // Centered x: residual 0 and cond_i = radius^2.
    Rng rng = make_rng(77);
    const OrthonormalFamily fam = random_family(rng, 6, 4, Field::Complex);
    const ScalarCorridor c = *random_positive_corridor(rng, 4, {});
    const Vector x = fam.synthesize(c.midpoints());
    const HypothesisReport r = check_hypothesis(x, fam, c);
    cases.push_back(expect("centered x: condition (ii) residual", r.cond_ii_residual));
    cases.push_back(expect("centered x: cond_i = radius^2",
                           (r.cond_i_value - r.radius * r.radius) / std::max(1.0, r.radius * r.radius)));
    const BoundChain g = gruss_refined_sqrt(x, x, fam, c, c);
    cases.push_back(expect("centered x = y: eq1.3 refined bound", g.values[1] / std::max(1.0, g.values[2])));
  }
  {
    // x = y, delta = Delta = 1: the Schwarz counterparts are equalities.
    const std::vector<double> v{1.0, -2.0, 0.5};
    const Vector x = Vector::real(v);
    const SchwarzCounterparts s = schwarz_counterparts(x, x, 1.0, 1.0);
    const double scale = s.quadratic.values[1];
    cases.push_back(expect("x = y, delta = Delta = 1: eq2.20", s.linear.slacks[0] / s.linear.values[2]));
    cases.push_back(expect("x = y, delta = Delta = 1: eq2.22", s.quadratic.slacks[0] / scale));
    cases.push_back(expect("x = y, delta = Delta = 1: eq2.23 rhs", s.quadratic_defect.values[2] / scale));
  }
  {
    // Companion bound at x = y, lambda = 1/2 coincides with eq2.12.
    const PlaneConstruction p = plane_construction(1.0, 3.0);
    const BoundChain c = companion_bound(p.x, p.x, p.family, p.corridor, 0.5);
    const BesselCounterpart b = bessel_counterpart(p.x, p.family, p.corridor);
    cases.push_back(expect("x = y, lambda = 1/2: eq4.3 rhs equals eq2.12 rhs", c.values[1] - b.chain.values[2]));
    cases.push_back(expect("x = y, lambda = 1/2: eq4.3 lhs equals bessel defect", c.values[0] - b.chain.values[1]));
  }
  return cases;
}

}  // namespace orthobound
