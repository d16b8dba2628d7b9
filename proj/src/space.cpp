#include "orthobound/space.hpp"

#include <cmath>
#include <string>

#include "orthobound/error.hpp"

namespace orthobound {

namespace {

constexpr std::size_t kBlock = 8;

template <typename T>
T tree_sum(std::span<const T> terms) noexcept {
  if (terms.size() <= kBlock) {
    T acc{};
    for (const T& t : terms) acc += t;
    return acc;
  }
  const std::size_t half = terms.size() / 2;
  return tree_sum(terms.first(half)) + tree_sum(terms.subspan(half));
}

void check_scalar(Scalar z, Field field, std::size_t index, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorKind::NonFinite, std::string(what) + " coordinate " + std::to_string(index));
  }
  if (field == Field::Real && z.imag() != 0.0) {
    throw Error(ErrorKind::RealModeViolation,
                std::string(what) + " coordinate " + std::to_string(index) + " has nonzero imaginary part");
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(op) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Field join(Field a, Field b) noexcept {
  return (a == Field::Real && b == Field::Real) ? Field::Real : Field::Complex;
}

Scalar pairwise_sum(std::span<const Scalar> terms) noexcept { return tree_sum(terms); }
double pairwise_sum(std::span<const double> terms) noexcept { return tree_sum(terms); }

Vector::Vector(std::vector<Scalar> coords, Field field) : coords_(std::move(coords)), field_(field) {
  for (std::size_t k = 0; k < coords_.size(); ++k) check_scalar(coords_[k], field_, k, "vector");
}

Vector::Vector(std::initializer_list<Scalar> coords, Field field)
    : Vector(std::vector<Scalar>(coords), field) {}

Vector Vector::zeros(std::size_t dim, Field field) { return Vector(std::vector<Scalar>(dim), field); }

Vector Vector::real(std::span<const double> coords) {
  return Vector(std::vector<Scalar>(coords.begin(), coords.end()), Field::Real);
}

Vector Vector::basis(std::size_t dim, std::size_t index, Field field) {
  std::vector<Scalar> c(dim);
  c.at(index) = 1.0;
  return Vector(std::move(c), field);
}

Vector Vector::operator+(const Vector& other) const {
  require_same_dim(dim(), other.dim(), "vector add");
  std::vector<Scalar> out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = coords_[k] + other.coords_[k];
  return Vector(std::move(out), join(field_, other.field_));
}

Vector Vector::operator-(const Vector& other) const {
  require_same_dim(dim(), other.dim(), "vector subtract");
  std::vector<Scalar> out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = coords_[k] - other.coords_[k];
  return Vector(std::move(out), join(field_, other.field_));
}

Vector Vector::operator*(Scalar factor) const {
  std::vector<Scalar> out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = coords_[k] * factor;
  const Field f = (field_ == Field::Real && factor.imag() == 0.0) ? Field::Real : Field::Complex;
  return Vector(std::move(out), f);
}

Vector Vector::operator*(double factor) const {
  std::vector<Scalar> out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = coords_[k] * factor;
  return Vector(std::move(out), field_);
}

Vector Vector::as_complex() const { return Vector(coords_, Field::Complex); }

Scalar inner(const Vector& x, const Vector& y) {
  require_same_dim(x.dim(), y.dim(), "inner");
  std::vector<Scalar> terms(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) terms[k] = mul_conj(x[k], y[k]);
  return pairwise_sum(std::span<const Scalar>(terms));
}

double norm_sq(const Vector& x) {
  std::vector<double> terms(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) terms[k] = std::norm(x[k]);
  return pairwise_sum(std::span<const double>(terms));
}

double norm(const Vector& x) { return std::sqrt(norm_sq(x)); }

Vector combine(std::span<const Scalar> coeffs, std::span<const Vector> members) {
  require_same_dim(coeffs.size(), members.size(), "combine");
  if (members.empty()) throw Error(ErrorKind::InvalidArgument, "combine: no members");
  const std::size_t dim = members.front().dim();
  Field field = Field::Real;
  std::vector<Scalar> out(dim);
  for (std::size_t i = 0; i < members.size(); ++i) {
    require_same_dim(members[i].dim(), dim, "combine");
    field = join(field, members[i].field());
    if (coeffs[i].imag() != 0.0) field = Field::Complex;
    for (std::size_t k = 0; k < dim; ++k) out[k] += coeffs[i] * members[i][k];
  }
  return Vector(std::move(out), field);
}

QuadratureGrid::QuadratureGrid(std::vector<double> nodes, std::vector<double> weights,
                               std::vector<double> rho)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), rho_(std::move(rho)) {
  if (nodes_.size() != weights_.size() || nodes_.size() != rho_.size()) {
    throw Error(ErrorKind::InvalidGrid, "nodes, weights and rho must have equal lengths");
  }
  bool any_mass = false;
  scale_.resize(nodes_.size());
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (!std::isfinite(nodes_[j]) || !std::isfinite(weights_[j]) || !std::isfinite(rho_[j])) {
      throw Error(ErrorKind::InvalidGrid, "non-finite entry at node " + std::to_string(j));
    }
    if (weights_[j] < 0.0 || rho_[j] < 0.0) {
      throw Error(ErrorKind::InvalidGrid, "negative weight or density at node " + std::to_string(j));
    }
    any_mass = any_mass || mass(j) > 0.0;
    scale_[j] = std::sqrt(mass(j));
  }
  if (!any_mass) throw Error(ErrorKind::InvalidGrid, "grid carries no mass");
}

SampledFunction::SampledFunction(std::vector<Scalar> values, Field field)
    : values_(std::move(values)), field_(field) {
  for (std::size_t j = 0; j < values_.size(); ++j) check_scalar(values_[j], field_, j, "sample");
}

SampledFunction SampledFunction::real(std::span<const double> values) {
  return SampledFunction(std::vector<Scalar>(values.begin(), values.end()), Field::Real);
}

Vector embed(const SampledFunction& f, const QuadratureGrid& grid) {
  require_same_dim(f.size(), grid.size(), "embed");
  std::vector<Scalar> c(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) c[j] = f[j] * grid.scale(j);
  return Vector(std::move(c), f.field());
}

Scalar grid_inner(const SampledFunction& f, const SampledFunction& g, const QuadratureGrid& grid) {
  return inner(embed(f, grid), embed(g, grid));
}

}  // namespace orthobound
