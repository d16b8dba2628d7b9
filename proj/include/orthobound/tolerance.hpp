#pragma once

namespace orthobound::tolerance {

// Inequality chains: value[k] <= value[k+1] + max(kChainAbs, kChainRel * max|value|).
inline constexpr double kChainRel = 1e-9;
inline constexpr double kChainAbs = 1e-12;

// Family Gram residual limits. Bound checks run at least 10x looser than the
// family residual they are fed.
inline constexpr double kFamilyExact = 1e-10;
inline constexpr double kFamilyQuadrature = 1e-8;

// Admissibility: condition (i) value >= -kHypothesis * max(1, radius^2).
inline constexpr double kHypothesis = 1e-10;

}  // namespace orthobound::tolerance
