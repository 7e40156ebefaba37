#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the orthocomplement/SVD routes that the library uses.

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>

#include <Eigen/Dense>

#include "skewext/halfline.hpp"
#include "skewext/subspace.hpp"

namespace oracle {

using skewext::Complex;
using skewext::Matrix;
using skewext::Vector;

// Graph of T* straight from the definition: (y, y') with <x', y> = <x, y'>
// for every generator (x, x') of T. Each generator gives one linear equation
// x'^H y - x^H y' = 0; the solution set is an LU kernel.
inline Matrix adjoint_by_definition(const Matrix& generators, std::size_t n) {
  const auto nn = static_cast<Eigen::Index>(n);
  Matrix conditions(generators.cols(), 2 * nn);
  for (Eigen::Index j = 0; j < generators.cols(); ++j) {
    const Vector x = generators.col(j).head(nn);
    const Vector xp = generators.col(j).tail(nn);
    conditions.row(j).head(nn) = xp.adjoint();
    conditions.row(j).tail(nn) = -x.adjoint();
  }
  if (conditions.rows() == 0) return Matrix::Identity(2 * nn, 2 * nn);
  Eigen::FullPivLU<Matrix> lu(conditions);
  lu.setThreshold(1e-10);
  return lu.kernel();
}

// Spectral norm of P_A - P_B where A, B are arbitrary spanning sets, with
// projectors built from normal equations instead of an orthonormal basis.
inline Matrix projector_from_spanning(const Matrix& a) {
  if (a.cols() == 0) return Matrix::Zero(a.rows(), a.rows());
  Eigen::FullPivLU<Matrix> lu(a);
  lu.setThreshold(1e-10);
  const Matrix img = lu.image(a);
  return img * (img.adjoint() * img).inverse() * img.adjoint();
}

inline double projector_distance(const Matrix& a, const Matrix& b) {
  const Matrix d = projector_from_spanning(a) - projector_from_spanning(b);
  Eigen::JacobiSVD<Matrix> svd(d);
  return svd.singularValues()(0);
}

// Omega evaluated element by element.
inline Complex omega(const Vector& u, const Vector& v) {
  const auto n = u.size() / 2;
  return v.tail(n).dot(u.head(n)) + v.head(n).dot(u.tail(n));
}

inline Vector random_vector(Eigen::Index m, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v(m);
  for (Eigen::Index i = 0; i < m; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v;
}

inline Matrix random_matrix(Eigen::Index r, Eigen::Index c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (Eigen::Index j = 0; j < c; ++j) m.col(j) = random_vector(r, rng);
  return m;
}

// Double-precision value of an exponential polynomial at t.
inline Complex evaluate(const skewext::halfline::ExpPoly& f, double t) {
  Complex out = 0.0;
  for (const auto& [key, c] : f.terms()) {
    const double rate = key.rate.get_d();
    out += Complex(c.re.get_d(), c.im.get_d()) * std::pow(t, key.degree) * std::exp(-rate * t);
  }
  return out;
}

// Composite Simpson rule for int_0^T f conj(g), with T large enough for the
// slowest rate in the tests to have decayed below double precision.
inline Complex quadrature_inner(const skewext::halfline::ExpPoly& f,
                                const skewext::halfline::ExpPoly& g, double upper = 80.0,
                                int panels = 40000) {
  const double h = upper / panels;
  Complex acc = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double t = i * h;
    const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    acc += w * evaluate(f, t) * std::conj(evaluate(g, t));
  }
  return acc * h / 3.0;
}

}  // namespace oracle
