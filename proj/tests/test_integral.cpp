#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orthobound/campaign.hpp"
#include "orthobound/error.hpp"
#include "orthobound/integral.hpp"
#include "orthobound/quadrature.hpp"
#include "orthobound/random.hpp"

using namespace orthobound;

namespace {

struct TrigSetup {
  QuadratureGrid grid = gauss_legendre(64, 0.0, 2.0 * std::numbers::pi);
  std::vector<SampledFunction> fns = builtin_functions(BuiltinKind::Trig, 5, grid);
};

SampledFunction combination(std::span<const Scalar> coeffs, std::span<const SampledFunction> fns) {
  std::vector<Scalar> v(fns.front().size(), 0.0);
  for (std::size_t i = 0; i < fns.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += coeffs[i] * fns[i][j];
  }
  return SampledFunction(std::move(v));
}

}  // namespace

TEST_CASE("centered f has zero condition (ii) residual") {
  TrigSetup t;
  const ScalarCorridor c({0.5, -1.0, 0.0, 2.0, 1.0}, {1.5, 1.0, 0.4, 2.2, 3.0});
  const SampledFunction f = combination(c.midpoints(), t.fns);
  const IntegralInstance inst = integral_instance(f, std::nullopt, t.fns, t.grid, c);
  CHECK(inst.family.gram_residual() <= 1e-8);
  CHECK(inst.report_f.cond_ii_residual <= 1e-13);
  CHECK(quadrature_condition_ii(f, t.fns, t.grid, c) <= 1e-26);
  CHECK(inst.report_f.holds);
}

TEST_CASE("discrete report matches the node-wise quadrature oracles") {
  TrigSetup t;
  Rng rng = make_rng(31);
  for (int k = 0; k < 50; ++k) {
    const ScalarCorridor c = *random_positive_corridor(rng, 5, {});
    const Vector u = random_vector(rng, t.grid.size(), Field::Complex);
    std::vector<Scalar> pert(u.coords().begin(), u.coords().end());
    const SampledFunction center = combination(c.midpoints(), t.fns);
    for (std::size_t j = 0; j < pert.size(); ++j) pert[j] = center[j] + 0.05 * pert[j];
    const SampledFunction f(pert);
    const IntegralInstance inst = integral_instance(f, std::nullopt, t.fns, t.grid, c);
    const double qi = quadrature_condition_i(f, t.fns, t.grid, c);
    const double qii = quadrature_condition_ii(f, t.fns, t.grid, c);
    const double scale = std::max(1.0, c.radius() * c.radius());
    CHECK(std::abs(qi - inst.report_f.cond_i_value) <= 1e-11 * scale);
    CHECK(std::abs(std::sqrt(qii) - inst.report_f.cond_ii_residual) <= 1e-11 * std::max(1.0, c.radius()));
  }
}

TEST_CASE("wrappers equal the embedded computations exactly") {
  TrigSetup t;
  Rng rng = make_rng(32);
  for (int k = 0; k < 30; ++k) {
    const ScalarCorridor cf = *random_positive_corridor(rng, 5, {});
    const ScalarCorridor cg = *random_positive_corridor(rng, 5, {});
    const SampledFunction f = combination(cf.midpoints(), t.fns);
    const SampledFunction g = combination(cg.midpoints(), t.fns);
    const IntegralInstance inst = integral_instance(f, g, t.fns, t.grid, cf, cg);
    std::vector<Vector> members;
    for (const auto& fi : t.fns) members.push_back(embed(fi, t.grid));
    const OrthonormalFamily fam = validate_family(members, 1e-8);
    const Vector fx = embed(f, t.grid), gx = embed(g, t.grid);

    CHECK(integral_norm_bound(inst, NormVariant::cbs()).values ==
          norm_bound_quadratic(fx, fam, cf, NormVariant::cbs()).values);
    CHECK(integral_bessel(inst).chain.values == bessel_counterpart(fx, fam, cf).chain.values);
    const GrussBound a = integral_gruss(inst);
    const GrussBound b = gruss_bound(fx, gx, fam, cf, cg);
    CHECK(a.chain.values == b.chain.values);
    CHECK(a.schwarz_step.values == b.schwarz_step.values);
  }
  const IntegralInstance only_f =
      integral_instance(t.fns[0], std::nullopt, t.fns, t.grid, ScalarCorridor({1, 0, 0, 0, 0}, {2, 0, 0, 0, 0}));
  CHECK_THROWS_AS(integral_gruss(only_f), Error);
}

TEST_CASE("integral_instance rejects a coarse grid") {
  const QuadratureGrid coarse = gauss_legendre(3, 0.0, 2.0 * std::numbers::pi);
  const auto fns = builtin_functions(BuiltinKind::Trig, 9, coarse);
  try {
    integral_instance(fns[0], std::nullopt, fns, coarse, ScalarCorridor(std::vector<Scalar>(9, 0.0), std::vector<Scalar>(9, 1.0)));
    FAIL("expected GramResidualExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GramResidualExceeded);
  }
}

TEST_CASE("sandwich examples") {
  const QuadratureGrid grid({0.0, 0.5, 1.0}, {0.25, 0.5, 0.25}, {1.0, 1.0, 1.0});
  const std::vector<double> one{1.0, 1.0, 1.0};
  const std::vector<SampledFunction> fns{SampledFunction::real(one)};
  const std::vector<double> m{1.0}, M{2.0};

  const SandwichReport low = sandwich_check(SampledFunction::real(one), fns, grid, m, M);
  CHECK(low.lower_margin == 0.0);
  CHECK(low.upper_margin == 1.0);
  CHECK(low.checked_nodes == 3);

  const std::vector<double> mid{1.5, 1.5, 1.5};
  const SampledFunction f = SampledFunction::real(mid);
  CHECK_NOTHROW(sandwich_check(f, fns, grid, m, M));
  const IntegralInstance inst = integral_instance(f, std::nullopt, fns, grid, real_corridor(m, M));
  const BesselCounterpart b = integral_bessel(inst);
  REQUIRE(b.real_form);
  CHECK(b.real_form->values[2] == doctest::Approx(0.28125).epsilon(1e-14));
  CHECK(b.real_form->values[1] == doctest::Approx(0.0));

  const std::vector<double> dip{1.5, 0.9, 1.5};
  try {
    sandwich_check(SampledFunction::real(dip), fns, grid, m, M);
    FAIL("expected SandwichViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SandwichViolated);
    CHECK(std::string(e.what()).find("node 1") != std::string::npos);
  }

  // A zero-mass node is ignored.
  const QuadratureGrid holed({0.0, 0.5, 1.0}, {0.5, 0.0, 0.5}, {1.0, 1.0, 1.0});
  const SandwichReport r = sandwich_check(SampledFunction::real(dip), fns, holed, m, M);
  CHECK(r.checked_nodes == 2);

  const std::vector<Scalar> cplx{Scalar(1.5, 0.1), 1.5, 1.5};
  CHECK_THROWS_AS(sandwich_check(SampledFunction(cplx), fns, grid, m, M), Error);
  const std::vector<double> neg{-1.0};
  CHECK_THROWS_AS(sandwich_check(f, fns, grid, neg, M), Error);
}

TEST_CASE("sandwich success implies admissibility") {
  const SandwichFuzzSummary s = run_sandwich_fuzz(3, 400);
  CHECK(s.trials == 400);
  CHECK(s.sandwich_passed >= 100);
  CHECK(s.implication_failures == 0);
  CHECK(s.admissible == s.sandwich_passed);
  CHECK(run_sandwich_fuzz(3, 400) == s);
}
