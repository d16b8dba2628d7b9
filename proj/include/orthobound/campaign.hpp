#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "orthobound/random.hpp"
#include "orthobound/space.hpp"
#include "orthobound/tolerance.hpp"

namespace orthobound {

/// Every chain the fuzz campaign exercises. The order is the report order.
enum class BoundId : std::size_t {
  Eq1_3,
  Eq1_4,
  Eq2_1,
  Eq2_6,
  Eq2_11Max,
  Eq2_11Holder,
  Eq2_11Sum,
  Eq2_12,
  Eq2_17,
  Eq2_20,
  Eq2_21,
  Eq2_22,
  Eq2_23,
  Eq3_3,
  Eq3_5,
  Eq3_7,
  Eq3_10,
  Eq4_3Lambda0,
  Eq4_3Lambda1,
  Eq4_3Lambda2,
  BesselUnconditional,
  SchwarzStepUnconditional,
  Count,
};

inline constexpr std::size_t kBoundCount = static_cast<std::size_t>(BoundId::Count);

std::string_view bound_name(BoundId id) noexcept;

struct FuzzConfig {
  std::uint64_t seed = 42;
  std::size_t count = 1000;
  std::size_t dim = 6;
  std::size_t family_size = 3;
  Field mode = Field::Complex;
  CorridorSign sign = CorridorSign::Signed;
  /// Three companion-inequality weights, reported as Eq4_3Lambda0..2.
  std::array<double, 3> lambdas{0.1, 0.5, 0.9};
  double chain_rel = tolerance::kChainRel;
};

struct BoundTally {
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  /// Smallest BoundChain::min_relative_slack seen (+inf if never evaluated).
  double min_slack = 0.0;
  /// Trial index of min_slack, or of the first violation if any.
  std::size_t worst_trial = 0;
};

struct FuzzSummary {
  FuzzConfig config;
  std::size_t trials = 0;
  std::size_t rejected = 0;
  std::array<BoundTally, kBoundCount> bounds{};

  std::size_t total_violations() const noexcept;
  bool operator==(const FuzzSummary& other) const noexcept;
};

/// Outcome of one fuzz trial, the unit both runners share.
struct TrialOutcome {
  bool rejected = false;
  std::array<bool, kBoundCount> evaluated{};
  std::array<bool, kBoundCount> violated{};
  std::array<double, kBoundCount> slack{};
};

/// Trial `index` of the campaign; depends only on (config, index).
TrialOutcome fuzz_trial(const FuzzConfig& config, std::size_t index);

/// Serial reference and OpenMP runner; identical results for identical
/// configs regardless of thread count.
FuzzSummary run_fuzz_serial(const FuzzConfig& config);
FuzzSummary run_fuzz_parallel(const FuzzConfig& config);

struct EquivalenceConfig {
  std::uint64_t seed = 1;
  std::size_t count = 100000;
  std::size_t max_dim = 16;
  std::size_t max_family = 8;
  /// Classification is only compared outside |cond_i| <= band * max(1, r^2).
  double band = 1e-10;
};

struct EquivalenceSummary {
  std::size_t trials = 0;
  std::size_t real_trials = 0;
  std::size_t admissible = 0;
  std::size_t inside_band = 0;
  std::size_t disagreements = 0;
  std::size_t identity_failures = 0;
  /// max over trials of |cond_i - (r^2 - residual^2)| / max(1, r^2)
  double max_identity_gap = 0.0;

  bool operator==(const EquivalenceSummary& other) const noexcept = default;
};

struct EquivalenceOutcome {
  bool real = false;
  bool admissible = false;
  bool inside_band = false;
  bool disagreement = false;
  bool identity_failure = false;
  double identity_gap = 0.0;
};

/// Random (x, corridor) pair, admissible or not: dims up to max_dim, family
/// sizes up to max_family, even trials real and odd trials complex.
EquivalenceOutcome equivalence_trial(const EquivalenceConfig& config, std::size_t index);

EquivalenceSummary run_equivalence_serial(const EquivalenceConfig& config);
EquivalenceSummary run_equivalence_parallel(const EquivalenceConfig& config);

struct SandwichFuzzSummary {
  std::size_t trials = 0;
  /// Trials whose pointwise sandwich check succeeded.
  std::size_t sandwich_passed = 0;
  /// Of those, trials whose embedded instance satisfies condition (i).
  std::size_t admissible = 0;
  std::size_t implication_failures = 0;
  /// Trials that could not be built (degenerate family draw).
  std::size_t skipped = 0;

  bool operator==(const SandwichFuzzSummary& other) const noexcept = default;
};

/// Random real weighted-L2 instances on grids of 4..24 nodes. Even trials use
/// nonnegative families with disjoint supports, odd trials Gram-Schmidt
/// families that change sign; f is drawn inside the bracket, occasionally
/// nudged out of it.
SandwichFuzzSummary run_sandwich_fuzz(std::uint64_t seed, std::size_t count);

}  // namespace orthobound
