#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orthobound/error.hpp"
#include "orthobound/hypothesis.hpp"
#include "orthobound/random.hpp"

using namespace orthobound;

TEST_CASE("corridor derived quantities match recomputation") {
  const ScalarCorridor c({Scalar(1.0, 1.0), Scalar(-2.0, 0.5)}, {Scalar(3.0, 0.0), Scalar(1.0, -1.0)});
  CHECK(c.midpoints()[0] == Scalar(2.0, 0.5));
  CHECK(c.midpoints()[1] == Scalar(-0.5, -0.25));
  // Re(Phi conj(phi)): 3*1 + (1*(-2) + (-1)*0.5) = 3 - 2.5
  CHECK(c.re_sum() == doctest::Approx(0.5).epsilon(1e-14));
  const double w = std::norm(Scalar(2.0, -1.0)) + std::norm(Scalar(3.0, -1.5));
  CHECK(c.radius() == doctest::Approx(0.5 * std::sqrt(w)).epsilon(1e-14));
  CHECK_FALSE(c.is_real());
  CHECK(ScalarCorridor({1.0}, {2.0}).is_nonnegative_real());
  CHECK_FALSE(ScalarCorridor({-1.0}, {2.0}).is_nonnegative_real());
  CHECK_THROWS_AS(ScalarCorridor({1.0}, {1.0, 2.0}), Error);
}

TEST_CASE("corridor center is admissible with cond_i = radius^2") {
  Rng rng = make_rng(1);
  const OrthonormalFamily fam = random_family(rng, 5, 3, Field::Complex);
  const ScalarCorridor c = random_corridor(rng, 3, {});
  const Vector x = fam.synthesize(c.midpoints());
  const HypothesisReport r = check_hypothesis(x, fam, c);
  CHECK(r.cond_ii_residual < 1e-14);
  CHECK(r.cond_i_value == doctest::Approx(c.radius() * c.radius()).epsilon(1e-12));
  CHECK(r.holds);
}

TEST_CASE("x = m e sits on the boundary") {
  const OrthonormalFamily fam = validate_family({Vector::basis(3, 2)});
  const double m = 0.7, M = 2.5;
  const HypothesisReport r = check_hypothesis(fam[0] * m, fam, ScalarCorridor({m}, {M}));
  CHECK(r.cond_i_value == 0.0);
  CHECK(r.holds);
}

TEST_CASE("R^2 construction is a boundary case") {
  const double s = std::numbers::sqrt2 / 2.0;
  const OrthonormalFamily fam = validate_family({Vector{s, s}});
  for (auto [phi, Phi] : {std::pair{1.0, 3.0}, std::pair{0.9, 1.1}, std::pair{0.5, 1.5}}) {
    const Vector x{phi * s, Phi * s};
    const HypothesisReport r = check_hypothesis(x, fam, ScalarCorridor({phi}, {Phi}));
    CHECK(std::abs(r.cond_i_value) < 1e-14);
    CHECK(r.holds);
  }
}

TEST_CASE("random_admissible slack endpoints") {
  Rng rng = make_rng(2);
  for (int t = 0; t < 100; ++t) {
    const Field field = t % 2 ? Field::Complex : Field::Real;
    const OrthonormalFamily fam = random_family(rng, 7, 3, field);
    const ScalarCorridor c = random_corridor(rng, 3, {field, CorridorSign::Signed, 2.0});
    const auto [x0, c0] = random_admissible(fam, c, rng(), 0.0);
    const HypothesisReport r0 = check_hypothesis(x0, fam, c0);
    CHECK(r0.cond_ii_residual <= 1e-14 * std::max(1.0, c.radius()));
    const auto [x1, c1] = random_admissible(fam, c, rng(), 1.0);
    const HypothesisReport r1 = check_hypothesis(x1, fam, c1);
    const double r2 = c.radius() * c.radius();
    CHECK(std::abs(r1.cond_ii_residual - c.radius()) <= 1e-12 * std::max(1.0, c.radius()));
    CHECK(std::abs(r1.cond_i_value) <= 1e-12 * std::max(1.0, r2));
    CHECK(r1.holds);
    const auto [xs, cs] = random_admissible(fam, c, rng(), 0.37);
    CHECK(check_hypothesis(xs, fam, cs).holds);
    CHECK(x1.is_real() == (field == Field::Real));
  }
  const OrthonormalFamily fam = random_family(rng, 3, 1, Field::Real);
  CHECK_THROWS_AS(random_admissible(fam, ScalarCorridor({0.0}, {1.0}), 1, 1.5), Error);
}

TEST_CASE("random_admissible leaves the span of the family") {
  Rng rng = make_rng(21);
  const OrthonormalFamily fam = random_family(rng, 6, 2, Field::Real);
  const ScalarCorridor c({0.0, 1.0}, {2.0, 3.0});
  const Vector x = random_admissible(fam, c, 99, 1.0).first;
  CHECK(norm(fam.residual(x)) > 1e-3);
}

TEST_CASE("identity and equivalence on random instances") {
  Rng rng = make_rng(4);
  std::size_t admissible = 0;
  for (int t = 0; t < 2000; ++t) {
    const Field field = t % 2 ? Field::Complex : Field::Real;
    const std::size_t size = 1 + static_cast<std::size_t>(t % 4);
    const OrthonormalFamily fam = random_family(rng, size + 3, size, field);
    const ScalarCorridor c = random_corridor(rng, size, {field, CorridorSign::Signed, 2.0});
    const Vector x = random_vector(rng, size + 3, field) * 0.7;
    const HypothesisReport r = check_hypothesis(x, fam, c);
    const double scale = std::max(1.0, r.radius * r.radius);
    CHECK(r.identity_gap <= 1e-10 * scale);
    const double band = 1e-10 * scale;
    if (std::abs(r.cond_i_value) > band) CHECK((r.cond_i_value >= 0.0) == (r.cond_ii_residual <= r.radius));
    admissible += r.holds;
  }
  CHECK(admissible > 0);
}

TEST_CASE("scaling multiplies cond_i by t^2") {
  Rng rng = make_rng(8);
  const OrthonormalFamily fam = random_family(rng, 4, 2, Field::Complex);
  const ScalarCorridor c = random_corridor(rng, 2, {});
  const Vector x = random_admissible(fam, c, 5, 0.6).first;
  const HypothesisReport r = check_hypothesis(x, fam, c);
  for (double t : {0.1, 3.0, 17.0}) {
    const HypothesisReport s = check_hypothesis(x * t, fam, c.scaled(t));
    CHECK(s.cond_i_value == doctest::Approx(t * t * r.cond_i_value).epsilon(1e-11));
    CHECK(s.holds == r.holds);
  }
}

TEST_CASE("tolerance below the family residual raises IdentityViolation") {
  const double eps = 1e-6;
  // Members off by 1e-6 from orthonormal; validated at a loose tolerance.
  const OrthonormalFamily fam = validate_family({Vector{1.0 + eps, 0.0}, Vector{0.0, 1.0}}, 1e-4);
  CHECK(hypothesis_tolerance(fam) >= 10.0 * fam.gram_residual());
  const ScalarCorridor c({0.0, 0.0}, {1000.0, 1000.0});
  const Vector x{500.0, 500.0};
  try {
    check_hypothesis(x, fam, c, 1e-14);
    FAIL("expected IdentityViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IdentityViolation);
  }
  CHECK_NOTHROW(check_hypothesis(x, fam, c));
}
