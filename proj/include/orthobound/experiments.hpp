#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthobound/family.hpp"
#include "orthobound/hypothesis.hpp"
#include "orthobound/space.hpp"

namespace orthobound {

enum class SweepTarget {
  /// F = {1}, x = m e, m = 1 - eps, M = 1 + eps; ratio ||x||^2 / (eq2.1 rhs).
  Thm21,
  /// R^2, e = (1/sqrt2, 1/sqrt2), x = (phi/sqrt2, Phi/sqrt2), phi = 1 - eps,
  /// Phi = 1 + eps; ratio bessel defect / (M^2/4 sum |<x,e>|^2).
  Cor23,
  /// The Cor23 instance in both slots of the squared real Gruss bound
  /// (constant 1/16).
  Cor32,
};

std::optional<SweepTarget> parse_sweep_target(std::string_view name);
std::string_view to_string(SweepTarget target) noexcept;

struct SweepRow {
  double epsilon = 0.0;
  /// defect / bound; 1 - eps^2 for Thm21 and Cor23, (1 - eps^2)^2 for Cor32.
  double ratio = 0.0;
  double bound = 0.0;
  double defect = 0.0;
};

/// Throws BadEpsilon for values outside (0, 1), InvalidArgument when empty.
std::vector<SweepRow> sharpness_sweep(SweepTarget target, std::span<const double> eps);

/// CSV with header "epsilon,ratio,bound,defect"; values printed with %.17g.
std::string sweep_csv(std::span<const SweepRow> rows);

struct PairInstance {
  OrthonormalFamily family;
  Vector x;
  Vector y;
  ScalarCorridor cx;
  ScalarCorridor cy;
};

/// Random admissible pair for trial `index`: dimension <= 8, at most 4
/// family members, real or complex.
PairInstance comparison_instance(std::uint64_t seed, std::size_t index);

struct ComparisonWitness {
  std::size_t trial = 0;
  PairInstance instance;
  /// Middle values of the two refined Gruss chains and their common outer bound.
  double sqrt_refined = 0.0;
  double midpoint_refined = 0.0;
  double outer = 0.0;
  /// |sqrt_refined - midpoint_refined|
  double margin = 0.0;
};

struct ComparisonWitnesses {
  /// The sqrt-correction bound is strictly smaller.
  ComparisonWitness sqrt_tighter;
  /// The midpoint-correction bound is strictly smaller.
  ComparisonWitness midpoint_tighter;
};

/// First trial index (in [0, trials)) for each direction. Throws
/// WitnessNotFound naming the missing direction.
ComparisonWitnesses bound_comparison_search(std::uint64_t seed, std::size_t trials);

struct EqualityCase {
  std::string name;
  /// Slack at the position where equality (or the predicted value) is expected.
  double slack = 0.0;
  double tolerance = 1e-12;
  bool passed = false;
};

/// Exact-equality and boundary instances drawn from the sharpness proofs.
std::vector<EqualityCase> equality_cases();

}  // namespace orthobound
