#include "orthobound/random.hpp"

#include <vector>

namespace orthobound {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) noexcept {
  const std::uint64_t a = splitmix64(seed);
  const std::uint64_t b = splitmix64(a ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Rng(seq);
}

Vector random_vector(Rng& rng, std::size_t dim, Field field) {
  std::normal_distribution<double> gauss;
  std::vector<Scalar> c(dim);
  for (auto& z : c) {
    const double re = gauss(rng);
    const double im = field == Field::Complex ? gauss(rng) : 0.0;
    z = {re, im};
  }
  return Vector(std::move(c), field);
}

OrthonormalFamily random_family(Rng& rng, std::size_t dim, std::size_t size, Field field) {
  std::vector<Vector> raw;
  raw.reserve(size);
  for (std::size_t i = 0; i < size; ++i) raw.push_back(random_vector(rng, dim, field));
  return gram_schmidt(raw);
}

ScalarCorridor random_corridor(Rng& rng, std::size_t size, const CorridorSpec& spec) {
  std::uniform_real_distribution<double> box(-spec.scale, spec.scale);
  std::uniform_real_distribution<double> half(0.0, spec.scale);
  std::vector<Scalar> lo(size), hi(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (spec.field == Field::Real) {
      if (spec.sign == CorridorSign::NonNegative) {
        lo[i] = half(rng);
        hi[i] = lo[i] + half(rng);
      } else {
        lo[i] = box(rng);
        hi[i] = box(rng);
      }
    } else {
      if (spec.sign == CorridorSign::NonNegative) {
        lo[i] = {half(rng), box(rng)};
        hi[i] = {half(rng), box(rng)};
      } else {
        lo[i] = {box(rng), box(rng)};
        hi[i] = {box(rng), box(rng)};
      }
    }
  }
  return ScalarCorridor(std::move(lo), std::move(hi));
}

std::optional<ScalarCorridor> random_positive_corridor(Rng& rng, std::size_t size, const CorridorSpec& spec,
                                                       int attempts) {
  for (int a = 0; a < attempts; ++a) {
    ScalarCorridor c = random_corridor(rng, size, spec);
    if (c.re_sum() > 0.05 * static_cast<double>(size)) return c;
  }
  return std::nullopt;
}

}  // namespace orthobound
