#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "skewext/error.hpp"

namespace skewext {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Relative singular-value threshold for every rank decision.
inline constexpr double kRankTol = 1e-10;
// Tolerance for orthonormality of stored bases and for verification reports.
inline constexpr double kOrthTol = 1e-9;

// A subspace of C^m stored as an m x k matrix with orthonormal columns.
// k == 0 is the zero subspace. Instances are immutable.
class Subspace {
 public:
  // Zero subspace of C^m.
  explicit Subspace(std::size_t ambient_dim);

  // Takes `basis` as-is; its columns must already be orthonormal.
  static Subspace from_orthonormal(Matrix basis);
  // All of C^m.
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(basis_.cols()); }
  bool is_zero() const noexcept { return basis_.cols() == 0; }
  const Matrix& basis() const noexcept { return basis_; }

  // Orthogonal projector onto the subspace (m x m).
  Matrix projector() const;
  // Orthogonal projection of v.
  Vector project(const Vector& v) const;

 private:
  Subspace(std::size_t ambient_dim, Matrix basis);

  std::size_t ambient_;
  Matrix basis_;
};

// Span of the columns of `generators` (m x p). Singular values at or below
// tol * sigma_max are discarded.
Subspace span(const Matrix& generators, double tol = kRankTol);
Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim, double tol = kRankTol);

Subspace orthocomplement(const Subspace& s);
Subspace intersect(const Subspace& s, const Subspace& t, double tol = kRankTol);
Subspace sum(const Subspace& s, const Subspace& t, double tol = kRankTol);

// ||v - P_S v|| <= tol * ||v||.
bool contains(const Subspace& s, const Vector& v, double tol = kOrthTol);
// Every column of `vectors` lies in s.
bool contains_all(const Subspace& s, const Matrix& vectors, double tol = kOrthTol);
bool is_subspace_of(const Subspace& inner, const Subspace& outer, double tol = kOrthTol);
bool equal(const Subspace& s, const Subspace& t, double tol = kOrthTol);

// Spectral norm of P_S - P_T: the sine of the largest principal angle when the
// dimensions agree, 1 otherwise.
double distance(const Subspace& s, const Subspace& t);

// Largest |<u, v>| over basis vectors u of s, v of t.
double max_cross_inner(const Subspace& s, const Subspace& t);

// Numerical rank of a matrix with relative threshold.
std::size_t numerical_rank(const Matrix& m, double tol = kRankTol);

// Orthonormal basis (as coordinates) of the null space of m, an r x c matrix.
// Returns a c x (c - rank) matrix.
Matrix null_space(const Matrix& m, double tol = kRankTol);

// Splits v along a direct sum of parts. Components are obtained by a
// least-squares solve against the concatenated bases.
std::vector<Vector> oblique_project(std::span<const Subspace> parts, const Vector& v,
                                    double tol = kOrthTol);

// <a, b>, conjugate-linear in the second argument.
inline Complex inner(const Vector& a, const Vector& b) { return b.dot(a); }

}  // namespace skewext
