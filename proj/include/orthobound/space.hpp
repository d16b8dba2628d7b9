#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace orthobound {

using Scalar = std::complex<double>;

/// Scalar field of a space. Real mode rejects nonzero imaginary parts at
/// construction; arithmetic is always carried out in complex doubles.
enum class Field { Real, Complex };

Field join(Field a, Field b) noexcept;

/// Conjugate-linear in the second factor: a * conj(b), written out so real
/// and imaginary parts are formed in a fixed order.
inline Scalar mul_conj(Scalar a, Scalar b) noexcept {
  return {a.real() * b.real() + a.imag() * b.imag(), a.imag() * b.real() - a.real() * b.imag()};
}

/// Pairwise (tree) summation. Blocks of eight are summed left to right.
Scalar pairwise_sum(std::span<const Scalar> terms) noexcept;
double pairwise_sum(std::span<const double> terms) noexcept;

/// Finite coordinate vector over R or C. Immutable value type.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Scalar> coords, Field field = Field::Complex);
  Vector(std::initializer_list<Scalar> coords, Field field = Field::Complex);

  static Vector zeros(std::size_t dim, Field field = Field::Complex);
  static Vector real(std::span<const double> coords);
  static Vector basis(std::size_t dim, std::size_t index, Field field = Field::Real);

  std::size_t dim() const noexcept { return coords_.size(); }
  Field field() const noexcept { return field_; }
  bool is_real() const noexcept { return field_ == Field::Real; }
  Scalar operator[](std::size_t k) const { return coords_[k]; }
  std::span<const Scalar> coords() const noexcept { return coords_; }

  Vector operator+(const Vector& other) const;
  Vector operator-(const Vector& other) const;
  Vector operator*(Scalar factor) const;
  Vector operator*(double factor) const;

  /// Drops the real-mode flag; coordinates are unchanged.
  Vector as_complex() const;

 private:
  std::vector<Scalar> coords_;
  Field field_ = Field::Complex;
};

inline Vector operator*(Scalar factor, const Vector& v) { return v * factor; }
inline Vector operator*(double factor, const Vector& v) { return v * factor; }

/// <x, y> = sum_k x_k conj(y_k); linear in x.
Scalar inner(const Vector& x, const Vector& y);
double norm_sq(const Vector& x);
double norm(const Vector& x);

/// sum_i coeffs[i] * members[i]; members must share a dimension.
Vector combine(std::span<const Scalar> coeffs, std::span<const Vector> members);

/// Nodes, weights and density realizing a finite weighted measure.
class QuadratureGrid {
 public:
  QuadratureGrid(std::vector<double> nodes, std::vector<double> weights, std::vector<double> rho);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> rho() const noexcept { return rho_; }
  /// w_j * rho(s_j)
  double mass(std::size_t j) const noexcept { return weights_[j] * rho_[j]; }
  /// sqrt(w_j * rho(s_j)), the embedding scale of node j.
  double scale(std::size_t j) const noexcept { return scale_[j]; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> rho_;
  std::vector<double> scale_;
};

/// Function values at the nodes of some grid.
class SampledFunction {
 public:
  SampledFunction() = default;
  explicit SampledFunction(std::vector<Scalar> values, Field field = Field::Complex);

  static SampledFunction real(std::span<const double> values);

  std::size_t size() const noexcept { return values_.size(); }
  Field field() const noexcept { return field_; }
  Scalar operator[](std::size_t j) const { return values_[j]; }
  std::span<const Scalar> values() const noexcept { return values_; }

 private:
  std::vector<Scalar> values_;
  Field field_ = Field::Complex;
};

/// Coordinate j is f(s_j) * sqrt(w_j rho(s_j)); inner() of two embeddings is
/// bit-identical to grid_inner() of the functions.
Vector embed(const SampledFunction& f, const QuadratureGrid& grid);

/// sum_j w_j rho(s_j) f(s_j) conj(g(s_j)), evaluated through the embedding.
Scalar grid_inner(const SampledFunction& f, const SampledFunction& g, const QuadratureGrid& grid);

}  // namespace orthobound
