#include <doctest.h>

#include <omp.h>

#include <algorithm>

#include "orthobound/campaign.hpp"

using namespace orthobound;

TEST_CASE("bound names are unique") {
  std::vector<std::string_view> names;
  for (std::size_t k = 0; k < kBoundCount; ++k) names.push_back(bound_name(static_cast<BoundId>(k)));
  std::sort(names.begin(), names.end());
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
  CHECK(bound_name(BoundId::Eq2_1) == "eq2.1");
}

TEST_CASE("fuzz: seed 42, 1000 trials, zero violations") {
  FuzzConfig c;
  const FuzzSummary s = run_fuzz_parallel(c);
  CHECK(s.trials == 1000);
  CHECK(s.total_violations() == 0);
  CHECK(s.bounds[static_cast<std::size_t>(BoundId::Eq2_1)].evaluated > 100);
  CHECK(s.trials - s.rejected == s.bounds[static_cast<std::size_t>(BoundId::Eq2_12)].evaluated);
}

TEST_CASE("fuzz: zero trials") {
  FuzzConfig c;
  c.count = 0;
  const FuzzSummary s = run_fuzz_serial(c);
  CHECK(s.trials == 0);
  CHECK(s.total_violations() == 0);
}

TEST_CASE("fuzz: real mode with signed corridors counts rejections") {
  FuzzConfig c;
  c.mode = Field::Real;
  c.count = 300;
  const FuzzSummary s = run_fuzz_serial(c);
  CHECK(s.rejected > 0);
  CHECK(s.rejected < s.trials);
  CHECK(s.total_violations() == 0);
}

TEST_CASE("fuzz: nonnegative real corridors exercise the real forms") {
  FuzzConfig c;
  c.mode = Field::Real;
  c.sign = CorridorSign::NonNegative;
  c.count = 300;
  const FuzzSummary s = run_fuzz_serial(c);
  CHECK(s.bounds[static_cast<std::size_t>(BoundId::Eq2_17)].evaluated > 0);
  CHECK(s.bounds[static_cast<std::size_t>(BoundId::Eq3_7)].evaluated > 0);
  CHECK(s.total_violations() == 0);
}

TEST_CASE("serial and parallel runners agree") {
  for (Field mode : {Field::Real, Field::Complex}) {
    FuzzConfig c;
    c.seed = 9;
    c.count = 400;
    c.mode = mode;
    c.dim = 5;
    c.family_size = 2;
    const FuzzSummary a = run_fuzz_serial(c);
    FuzzSummary b;
    {
      const int saved = omp_get_max_threads();
      omp_set_num_threads(4);
      b = run_fuzz_parallel(c);
      omp_set_num_threads(saved);
    }
    CHECK(a == b);
  }
  EquivalenceConfig e;
  e.count = 3000;
  omp_set_num_threads(3);
  const EquivalenceSummary p = run_equivalence_parallel(e);
  CHECK(run_equivalence_serial(e) == p);
}

TEST_CASE("fuzz trials depend only on their index") {
  FuzzConfig c;
  c.count = 50;
  const TrialOutcome t = fuzz_trial(c, 17);
  const TrialOutcome u = fuzz_trial(c, 17);
  CHECK(t.slack == u.slack);
  CHECK(t.rejected == u.rejected);
}

TEST_CASE("equivalence campaign") {
  EquivalenceConfig e;
  e.count = 5000;
  const EquivalenceSummary s = run_equivalence_parallel(e);
  CHECK(s.trials == 5000);
  CHECK(s.real_trials == 2500);
  CHECK(s.disagreements == 0);
  CHECK(s.identity_failures == 0);
  CHECK(s.max_identity_gap <= 1e-10);
  CHECK(s.admissible > 500);
  CHECK(s.admissible < 4500);
}
