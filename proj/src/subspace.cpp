#include "skewext/subspace.hpp"

#include <algorithm>
#include <string>

namespace skewext {

namespace {

void require_same_ambient(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch, "ambient dimensions " + std::to_string(s.ambient_dim()) +
                                                " and " + std::to_string(t.ambient_dim()));
  }
}

std::size_t rank_from_singular_values(const Eigen::VectorXd& sv, double tol) {
  if (sv.size() == 0) return 0;
  const double smax = sv.maxCoeff();
  if (smax <= 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * smax) ++r;
  }
  return r;
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : Subspace(ambient_dim, Matrix(ambient_dim, 0)) {}

Subspace::Subspace(std::size_t ambient_dim, Matrix basis)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
  if (ambient_ == 0) throw Error(ErrorCode::EmptyAmbient, "ambient dimension must be positive");
}

Subspace Subspace::from_orthonormal(Matrix basis) {
  const auto m = static_cast<std::size_t>(basis.rows());
  if (basis.cols() > basis.rows()) {
    throw Error(ErrorCode::BadDimension, "more basis vectors than ambient dimension");
  }
  const auto k = basis.cols();
  if (k > 0) {
    const double dev = (basis.adjoint() * basis - Matrix::Identity(k, k)).cwiseAbs().maxCoeff();
    if (dev > kOrthTol) {
      throw Error(ErrorCode::InvalidInput, "basis is not orthonormal (deviation " +
                                               std::to_string(dev) + ")");
    }
  }
  return Subspace(m, std::move(basis));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  const auto m = static_cast<Eigen::Index>(ambient_dim);
  return Subspace(ambient_dim, Matrix::Identity(m, m));
}

Matrix Subspace::projector() const { return basis_ * basis_.adjoint(); }

Vector Subspace::project(const Vector& v) const { return basis_ * (basis_.adjoint() * v); }

Subspace span(const Matrix& generators, double tol) {
  const auto m = static_cast<std::size_t>(generators.rows());
  if (m == 0) throw Error(ErrorCode::EmptyAmbient, "span in a zero-dimensional space");
  if (generators.cols() == 0) return Subspace(m);
  Eigen::JacobiSVD<Matrix> svd(generators, Eigen::ComputeThinU);
  const std::size_t r = rank_from_singular_values(svd.singularValues(), tol);
  Matrix basis = svd.matrixU().leftCols(static_cast<Eigen::Index>(r));
  // Fix the phase of each column: its leading largest entry is made real positive.
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    const double peak = basis.col(j).cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < basis.rows(); ++i) {
      if (std::abs(basis(i, j)) >= peak * (1.0 - 1e-12)) {
        basis.col(j) *= std::conj(basis(i, j)) / std::abs(basis(i, j));
        break;
      }
    }
  }
  return Subspace::from_orthonormal(std::move(basis));
}

Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim, double tol) {
  if (ambient_dim == 0) throw Error(ErrorCode::EmptyAmbient, "span in a zero-dimensional space");
  Matrix gens(static_cast<Eigen::Index>(ambient_dim), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (static_cast<std::size_t>(vectors[j].size()) != ambient_dim) {
      throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
    }
    gens.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return span(gens, tol);
}

Subspace orthocomplement(const Subspace& s) {
  const auto m = static_cast<Eigen::Index>(s.ambient_dim());
  const auto k = static_cast<Eigen::Index>(s.dim());
  if (k == 0) return Subspace::full(s.ambient_dim());
  if (k == m) return Subspace(s.ambient_dim());
  Eigen::JacobiSVD<Matrix> svd(s.basis(), Eigen::ComputeFullU);
  return Subspace::from_orthonormal(svd.matrixU().rightCols(m - k));
}

Subspace sum(const Subspace& s, const Subspace& t, double tol) {
  require_same_ambient(s, t);
  Matrix gens(s.basis().rows(), s.basis().cols() + t.basis().cols());
  gens << s.basis(), t.basis();
  return span(gens, tol);
}

Subspace intersect(const Subspace& s, const Subspace& t, double tol) {
  require_same_ambient(s, t);
  return orthocomplement(sum(orthocomplement(s), orthocomplement(t), tol));
}

bool contains(const Subspace& s, const Vector& v, double tol) {
  if (static_cast<std::size_t>(v.size()) != s.ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
  }
  const double nv = v.norm();
  if (nv == 0.0) return true;
  return (v - s.project(v)).norm() <= tol * nv;
}

bool contains_all(const Subspace& s, const Matrix& vectors, double tol) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    if (!contains(s, vectors.col(j), tol)) return false;
  }
  return true;
}

bool is_subspace_of(const Subspace& inner, const Subspace& outer, double tol) {
  require_same_ambient(inner, outer);
  return contains_all(outer, inner.basis(), tol);
}

bool equal(const Subspace& s, const Subspace& t, double tol) {
  require_same_ambient(s, t);
  return s.dim() == t.dim() && is_subspace_of(s, t, tol) && is_subspace_of(t, s, tol);
}

double distance(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t);
  const Matrix diff = s.projector() - t.projector();
  Eigen::JacobiSVD<Matrix> svd(diff);
  return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

double max_cross_inner(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t);
  if (s.is_zero() || t.is_zero()) return 0.0;
  return (s.basis().adjoint() * t.basis()).cwiseAbs().maxCoeff();
}

std::size_t numerical_rank(const Matrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return rank_from_singular_values(svd.singularValues(), tol);
}

Matrix null_space(const Matrix& m, double tol) {
  const auto c = m.cols();
  if (m.rows() == 0 || c == 0) return Matrix::Identity(c, c);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto r = static_cast<Eigen::Index>(rank_from_singular_values(svd.singularValues(), tol));
  return svd.matrixV().rightCols(c - r);
}

std::vector<Vector> oblique_project(std::span<const Subspace> parts, const Vector& v, double tol) {
  std::vector<Vector> out;
  out.reserve(parts.size());
  if (parts.empty()) {
    if (v.norm() > 0.0) throw Error(ErrorCode::NotInSum, "no parts to project onto");
    return out;
  }
  const auto m = parts.front().ambient_dim();
  Eigen::Index total = 0;
  for (const auto& p : parts) {
    require_same_ambient(parts.front(), p);
    total += static_cast<Eigen::Index>(p.dim());
  }
  if (static_cast<std::size_t>(v.size()) != m) {
    throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
  }

  Matrix stacked(static_cast<Eigen::Index>(m), total);
  Eigen::Index col = 0;
  for (const auto& p : parts) {
    stacked.middleCols(col, p.basis().cols()) = p.basis();
    col += p.basis().cols();
  }
  if (numerical_rank(stacked) != static_cast<std::size_t>(total)) {
    throw Error(ErrorCode::NotDirect, "parts overlap");
  }

  Vector coef = Vector::Zero(total);
  if (total > 0) coef = stacked.colPivHouseholderQr().solve(v);
  const double residual = (stacked * coef - v).norm();
  if (residual > tol * v.norm()) {
    throw Error(ErrorCode::NotInSum, "residual " + std::to_string(residual));
  }

  col = 0;
  for (const auto& p : parts) {
    const auto k = p.basis().cols();
    out.emplace_back(p.basis() * coef.segment(col, k));
    col += k;
  }
  return out;
}

}  // namespace skewext
