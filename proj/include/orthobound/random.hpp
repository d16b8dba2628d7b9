#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "orthobound/family.hpp"
#include "orthobound/hypothesis.hpp"
#include "orthobound/space.hpp"

namespace orthobound {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream); trial i of a campaign uses
/// stream i so shards can run in any order.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

/// Standard Gaussian coordinates; imaginary parts only in complex mode.
Vector random_vector(Rng& rng, std::size_t dim, Field field);

/// Gram-Schmidt of `size` Gaussian vectors in dimension `dim`.
OrthonormalFamily random_family(Rng& rng, std::size_t dim, std::size_t size, Field field);

enum class CorridorSign {
  /// phi_i, Phi_i anywhere in the box [-scale, scale] (real or complex).
  Signed,
  /// Real 0 <= phi_i <= Phi_i <= 2 * scale; complex mode keeps both in the
  /// right half-plane.
  NonNegative,
};

struct CorridorSpec {
  Field field = Field::Complex;
  CorridorSign sign = CorridorSign::Signed;
  double scale = 2.0;
};

/// One draw; re_sum may come out nonpositive.
ScalarCorridor random_corridor(Rng& rng, std::size_t size, const CorridorSpec& spec);

/// Redraws until re_sum > 0.05 * size; nullopt after `attempts` failures.
std::optional<ScalarCorridor> random_positive_corridor(Rng& rng, std::size_t size, const CorridorSpec& spec,
                                                       int attempts = 64);

}  // namespace orthobound
