#include "orthobound/family.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "orthobound/error.hpp"
#include "orthobound/quadrature.hpp"

namespace orthobound {

namespace {

// Coordinates below this magnitude (on a unit vector) are skipped when
// picking the phase anchor.
constexpr double kPhaseAnchor = 1e-12;

Vector fix_phase(const Vector& v) {
  for (std::size_t k = 0; k < v.dim(); ++k) {
    const double mag = std::abs(v[k]);
    if (mag > kPhaseAnchor) {
      if (v[k].imag() == 0.0 && v[k].real() > 0.0) return v;
      return v * (std::conj(v[k]) / mag);
    }
  }
  return v;
}

}  // namespace

Field OrthonormalFamily::field() const noexcept {
  Field f = Field::Real;
  for (const auto& e : members_) f = join(f, e.field());
  return f;
}

std::vector<Scalar> OrthonormalFamily::coefficients(const Vector& x) const {
  std::vector<Scalar> c(size());
  for (std::size_t i = 0; i < size(); ++i) c[i] = inner(x, members_[i]);
  return c;
}

Vector OrthonormalFamily::synthesize(std::span<const Scalar> coeffs) const {
  return combine(coeffs, members_);
}

Vector OrthonormalFamily::residual(const Vector& x) const {
  const auto c = coefficients(x);
  return x - synthesize(c);
}

GramDeviation gram_deviation(std::span<const Vector> members) {
  GramDeviation worst;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      const Scalar g = inner(members[i], members[j]);
      const double dev = std::abs(g - Scalar(i == j ? 1.0 : 0.0));
      if (dev > worst.residual) worst = {dev, i, j};
    }
  }
  return worst;
}

OrthonormalFamily validate_family(std::vector<Vector> members, double tolerance) {
  if (members.empty()) throw Error(ErrorKind::EmptyFamily, "family has no members");
  if (!(tolerance > 0.0)) throw Error(ErrorKind::InvalidArgument, "family tolerance must be positive");
  const std::size_t dim = members.front().dim();
  if (dim == 0) throw Error(ErrorKind::DimensionMismatch, "family members have dimension 0");
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i].dim() != dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "member " + std::to_string(i) + " has dimension " + std::to_string(members[i].dim()) +
                      ", expected " + std::to_string(dim));
    }
  }
  const GramDeviation dev = gram_deviation(members);
  if (dev.residual > tolerance) {
    throw Error(ErrorKind::GramResidualExceeded,
                "worst pair (" + std::to_string(dev.row) + ", " + std::to_string(dev.col) +
                    ") deviates by " + std::to_string(dev.residual) + " > " + std::to_string(tolerance));
  }
  return OrthonormalFamily(std::move(members), dev.residual, tolerance);
}

OrthonormalFamily gram_schmidt(std::span<const Vector> raw, double tolerance) {
  if (raw.empty()) throw Error(ErrorKind::EmptyFamily, "gram_schmidt: no input vectors");
  std::vector<Vector> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double input_norm = norm(raw[i]);
    Vector w = raw[i];
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& q : out) w = w - q * inner(w, q);
    }
    const double rn = norm(w);
    if (!(rn > tolerance * input_norm) || input_norm == 0.0) {
      throw Error(ErrorKind::RankDeficient,
                  "vector " + std::to_string(i) + " residual " + std::to_string(rn) + " vs input norm " +
                      std::to_string(input_norm));
    }
    out.push_back(fix_phase(w * (1.0 / rn)));
  }
  return validate_family(std::move(out), tolerance);
}

std::vector<SampledFunction> builtin_functions(BuiltinKind kind, std::size_t count,
                                               const QuadratureGrid& grid) {
  std::vector<SampledFunction> fns;
  fns.reserve(count);
  const auto nodes = grid.nodes();
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const double s = nodes[j];
      switch (kind) {
        case BuiltinKind::Trig: {
          if (i == 0) {
            values[j] = 1.0 / std::sqrt(2.0 * std::numbers::pi);
          } else {
            const double k = static_cast<double>((i + 1) / 2);
            values[j] = (i % 2 == 1 ? std::cos(k * s) : std::sin(k * s)) / std::sqrt(std::numbers::pi);
          }
          break;
        }
        case BuiltinKind::Legendre:
          values[j] = std::sqrt((2.0 * i + 1.0) / 2.0) * legendre(i, s).p;
          break;
        case BuiltinKind::Canonical:
          values[j] = (j == i && grid.scale(j) > 0.0) ? 1.0 / grid.scale(j) : 0.0;
          break;
      }
    }
    fns.push_back(SampledFunction::real(values));
  }
  return fns;
}

OrthonormalFamily builtin_family(BuiltinKind kind, std::size_t count,
                                 const std::optional<QuadratureGrid>& grid, double tolerance) {
  if (count == 0) throw Error(ErrorKind::EmptyFamily, "builtin family of size 0");
  if (kind == BuiltinKind::Canonical) {
    std::vector<Vector> members;
    for (std::size_t i = 0; i < count; ++i) members.push_back(Vector::basis(count, i, Field::Real));
    return validate_family(std::move(members), tolerance);
  }
  if (!grid) throw Error(ErrorKind::InvalidArgument, "trig and legendre families need a grid");
  std::vector<Vector> members;
  for (const auto& f : builtin_functions(kind, count, *grid)) members.push_back(embed(f, *grid));
  return validate_family(std::move(members), tolerance);
}

}  // namespace orthobound
