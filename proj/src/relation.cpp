#include "skewext/relation.hpp"

#include <cmath>
#include <random>
#include <string>

namespace skewext {

namespace {

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

// Applies the block map (x, x') -> (a x + b x', c x + d x') to a graph basis.
Matrix block_map(const Matrix& basis, std::size_t n, Complex a, Complex b, Complex c, Complex d) {
  const auto nn = idx(n);
  Matrix out(basis.rows(), basis.cols());
  out.topRows(nn) = a * basis.topRows(nn) + b * basis.bottomRows(nn);
  out.bottomRows(nn) = c * basis.topRows(nn) + d * basis.bottomRows(nn);
  return out;
}

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(idx(rows), idx(cols));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

Matrix haar_unitary(std::size_t m, std::mt19937_64& rng) {
  const Matrix z = gaussian_matrix(m, m, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(idx(m), idx(m));
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

// Subspace of C^{2n} whose elements have a vanishing block in one position.
Subspace coordinate_half(std::size_t n, bool first) {
  Matrix b = Matrix::Zero(idx(2 * n), idx(n));
  b.block(first ? 0 : idx(n), 0, idx(n), idx(n)) = Matrix::Identity(idx(n), idx(n));
  return Subspace::from_orthonormal(std::move(b));
}

}  // namespace

Relation::Relation(Subspace graph) : n_(graph.ambient_dim() / 2), graph_(std::move(graph)) {
  if (graph_.ambient_dim() % 2 != 0) {
    throw Error(ErrorCode::BadDimension, "graph ambient dimension must be even");
  }
}

Relation Relation::from_generators(const Matrix& generators, double tol) {
  return Relation(span(generators, tol));
}

Relation Relation::zero(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadDimension, "space dimension must be positive");
  return Relation(Subspace(2 * n));
}

Relation Relation::full(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadDimension, "space dimension must be positive");
  return Relation(Subspace::full(2 * n));
}

Matrix Relation::first_block() const { return graph_.basis().topRows(idx(n_)); }
Matrix Relation::second_block() const { return graph_.basis().bottomRows(idx(n_)); }

Relation from_operator(const Matrix& a, const Subspace& dom) {
  const std::size_t n = dom.ambient_dim();
  if (static_cast<std::size_t>(a.rows()) != n || static_cast<std::size_t>(a.cols()) != n) {
    throw Error(ErrorCode::AmbientMismatch, "operator size does not match domain");
  }
  Matrix gens(idx(2 * n), dom.basis().cols());
  gens << dom.basis(), a * dom.basis();
  return Relation(span(gens));
}

Subspace domain(const Relation& t) { return span(t.first_block()); }
Subspace range(const Relation& t) { return span(t.second_block()); }

Subspace kernel(const Relation& t) {
  const auto part = intersect(t.graph(), coordinate_half(t.space_dim(), true));
  return span(Matrix(part.basis().topRows(idx(t.space_dim()))));
}

Subspace mul_part(const Relation& t) {
  const auto part = intersect(t.graph(), coordinate_half(t.space_dim(), false));
  return span(Matrix(part.basis().bottomRows(idx(t.space_dim()))));
}

Relation adjoint(const Relation& t) {
  const Matrix jg = block_map(t.graph().basis(), t.space_dim(), 0.0, -1.0, 1.0, 0.0);
  return Relation(orthocomplement(Subspace::from_orthonormal(jg)));
}

Relation neg_adjoint(const Relation& t) {
  return swap(Relation(orthocomplement(t.graph())));
}

Relation negate(const Relation& t) {
  return Relation(
      Subspace::from_orthonormal(block_map(t.graph().basis(), t.space_dim(), 1.0, 0.0, 0.0, -1.0)));
}

Relation swap(const Relation& t) {
  return Relation(
      Subspace::from_orthonormal(block_map(t.graph().basis(), t.space_dim(), 0.0, 1.0, 1.0, 0.0)));
}

Relation one_minus(const Relation& t) {
  return Relation(span(block_map(t.graph().basis(), t.space_dim(), 1.0, 0.0, 1.0, -1.0)));
}

Matrix symmetric_form_gram(const Matrix& first, const Matrix& second) {
  return second.adjoint() * first + first.adjoint() * second;
}

bool is_skew_symmetric(const Relation& t, double tol) {
  if (t.graph().is_zero()) return true;
  const Matrix w = symmetric_form_gram(t.first_block(), t.second_block());
  return w.cwiseAbs().maxCoeff() <= tol;
}

double dissipativity_bound(const Relation& t) {
  if (t.graph().is_zero()) return 0.0;
  const Matrix bx = t.first_block();
  const Matrix bxp = t.second_block();
  const Matrix herm = bx.adjoint() * bxp + bxp.adjoint() * bx;
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

bool is_dissipative(const Relation& t, double tol) {
  if (t.graph().is_zero()) return true;
  return dissipativity_bound(t) <= 2.0 * tol;
}

bool is_skew_self_adjoint(const Relation& t, double tol) {
  return equal(t.graph(), neg_adjoint(t).graph(), tol);
}

bool extends(const Relation& t, const Relation& s, double tol) {
  return is_subspace_of(s.graph(), t.graph(), tol);
}

Relation restrict_graph(const Relation& t, const Subspace& g, double tol) {
  if (!is_subspace_of(g, t.graph(), tol)) {
    throw Error(ErrorCode::NotSubgraph, "subspace is not contained in the graph");
  }
  return Relation(g);
}

DeficiencyData deficiency(const Relation& t, double tol) {
  if (!is_skew_symmetric(t, tol)) {
    throw Error(ErrorCode::NotSkewSymmetric, "deficiency spaces need a skew-symmetric relation");
  }
  const std::size_t n = t.space_dim();
  const auto nn = idx(n);
  const Relation adj = adjoint(t);

  Matrix diag(2 * nn, nn);
  diag << Matrix::Identity(nn, nn), Matrix::Identity(nn, nn);
  Matrix anti(2 * nn, nn);
  anti << Matrix::Identity(nn, nn), -Matrix::Identity(nn, nn);

  const Subspace plus = intersect(adj.graph(), span(diag));
  const Subspace minus = intersect(adj.graph(), span(anti));
  return DeficiencyData{span(Matrix(plus.basis().topRows(nn))),
                        span(Matrix(minus.basis().topRows(nn)))};
}

Matrix random_unitary(std::size_t m, std::uint64_t seed) {
  if (m == 0) throw Error(ErrorCode::BadDimension, "unitary size must be positive");
  std::mt19937_64 rng(seed);
  return haar_unitary(m, rng);
}

Matrix random_contraction(std::size_t m, double norm, std::uint64_t seed) {
  if (m == 0) throw Error(ErrorCode::BadDimension, "contraction size must be positive");
  std::mt19937_64 rng(seed);
  const Matrix u = haar_unitary(m, rng);
  const Matrix v = haar_unitary(m, rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd s(idx(m));
  s(0) = norm;
  for (Eigen::Index i = 1; i < s.size(); ++i) s(i) = norm * unit(rng);
  return u * s.cast<Complex>().asDiagonal() * v.adjoint();
}

Relation random_skew_symmetric(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0 || k > n) {
    throw Error(ErrorCode::BadDimension,
                "need 0 <= k <= n and n > 0 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  if (k == 0) return Relation::zero(n);
  std::mt19937_64 rng(seed);
  // Rotated coordinates a = (x + x')/sqrt2, b = (x - x')/sqrt2 turn the form
  // Omega(w, w) into |a|^2 - |b|^2; an isometric graph a -> b is neutral.
  const Matrix a = haar_unitary(n, rng).leftCols(idx(k));
  const Matrix iso = haar_unitary(n, rng);
  const Matrix b = iso * a;
  const double r = 1.0 / std::sqrt(2.0);
  Matrix gens(idx(2 * n), idx(k));
  gens << r * (a + b), r * (a - b);
  return Relation(span(gens));
}

Relation random_relation(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0 || k > 2 * n) throw Error(ErrorCode::BadDimension, "need 0 <= k <= 2n and n > 0");
  if (k == 0) return Relation::zero(n);
  std::mt19937_64 rng(seed);
  return Relation(Subspace::from_orthonormal(haar_unitary(2 * n, rng).leftCols(idx(k))));
}

}  // namespace skewext
