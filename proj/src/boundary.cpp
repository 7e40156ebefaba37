#include "skewext/boundary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace skewext {

namespace {

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Omega restricted to the adjoint graph, in its basis coordinates.
Matrix adjoint_form_gram(const Subspace& adjoint_graph, std::size_t n) {
  const Matrix& b = adjoint_graph.basis();
  return symmetric_form_gram(b.topRows(idx(n)), b.bottomRows(idx(n)));
}

VerificationReport compare_grams(const Matrix& omega_gram, const Matrix& boundary_gram,
                                 bool surjective, double tol) {
  VerificationReport r;
  r.surjective = surjective;
  r.tolerance = tol;
  r.max_residual = max_abs(omega_gram - boundary_gram);
  const double scale = std::max({1.0, max_abs(omega_gram), max_abs(boundary_gram)});
  r.identity_holds = r.max_residual <= tol * scale;
  return r;
}

VerificationReport shape_failure(double tol) {
  VerificationReport r;
  r.tolerance = tol;
  r.max_residual = std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace

Complex StandardSymmetricForm::operator()(const Vector& u, const Vector& v) const {
  if (u.size() != v.size() || u.size() % 2 != 0) {
    throw Error(ErrorCode::AmbientMismatch, "form arguments must lie in the same C^n (+) C^n");
  }
  const auto n = u.size() / 2;
  return inner(u.head(n), v.tail(n)) + inner(u.tail(n), v.head(n));
}

Complex StandardUnitaryForm::operator()(const Vector& u, const Vector& v) const {
  const auto p = idx(g1_dim);
  const auto q = idx(g2_dim);
  if (u.size() != p + q || v.size() != p + q) {
    throw Error(ErrorCode::AmbientMismatch, "form arguments must lie in G1 (+) G2");
  }
  return inner(u.head(p), v.head(p)) - inner(u.tail(q), v.tail(q));
}

BoundarySystem make_system(const Relation& base, Subspace g1, Subspace g2, const Matrix& f_ambient) {
  const Relation adj = adjoint(base);
  if (f_ambient.rows() != idx(g1.dim() + g2.dim()) || f_ambient.cols() != idx(2 * base.space_dim())) {
    throw Error(ErrorCode::InvalidSystem, "boundary map has the wrong shape");
  }
  Matrix f = f_ambient * adj.graph().basis();
  return BoundarySystem{base, adj.graph(), std::move(g1), std::move(g2), std::move(f)};
}

BoundaryTriplet make_triplet(const Relation& base, Subspace g, const Matrix& gamma1_ambient,
                             const Matrix& gamma2_ambient) {
  const Relation adj = adjoint(base);
  const auto rows = idx(g.dim());
  const auto cols = idx(2 * base.space_dim());
  if (gamma1_ambient.rows() != rows || gamma2_ambient.rows() != rows ||
      gamma1_ambient.cols() != cols || gamma2_ambient.cols() != cols) {
    throw Error(ErrorCode::InvalidTriplet, "boundary maps have the wrong shape");
  }
  Matrix g1 = gamma1_ambient * adj.graph().basis();
  Matrix g2 = gamma2_ambient * adj.graph().basis();
  return BoundaryTriplet{base, adj.graph(), std::move(g), std::move(g1), std::move(g2)};
}

VerificationReport verify_system(const BoundarySystem& s, double tol) {
  const auto d = idx(s.adjoint_graph.dim());
  const auto rows = idx(s.g1.dim() + s.g2.dim());
  if (s.f.rows() != rows || s.f.cols() != d) return shape_failure(tol);

  Eigen::VectorXcd signs(rows);
  signs.head(idx(s.g1.dim())).setOnes();
  signs.tail(idx(s.g2.dim())).setConstant(-1.0);
  const Matrix boundary_gram = s.f.adjoint() * signs.asDiagonal() * s.f;
  const Matrix omega_gram = adjoint_form_gram(s.adjoint_graph, s.base.space_dim());
  const bool surjective = rows == 0 || numerical_rank(s.f) == static_cast<std::size_t>(rows);
  return compare_grams(omega_gram, boundary_gram, surjective, tol);
}

VerificationReport verify_triplet(const BoundaryTriplet& t, double tol) {
  const auto d = idx(t.adjoint_graph.dim());
  const auto rows = idx(t.g.dim());
  if (t.gamma1.rows() != rows || t.gamma2.rows() != rows || t.gamma1.cols() != d ||
      t.gamma2.cols() != d) {
    return shape_failure(tol);
  }
  // <G1 u, G2 v> + <G2 u, G1 v> = d^H (G2^H G1 + G1^H G2) c
  const Matrix boundary_gram = t.gamma2.adjoint() * t.gamma1 + t.gamma1.adjoint() * t.gamma2;
  const Matrix omega_gram = adjoint_form_gram(t.adjoint_graph, t.base.space_dim());
  Matrix stacked(2 * rows, d);
  stacked << t.gamma1, t.gamma2;
  const bool surjective = rows == 0 || numerical_rank(stacked) == static_cast<std::size_t>(2 * rows);
  return compare_grams(omega_gram, boundary_gram, surjective, tol);
}

BoundarySystem triplet_to_system(const BoundaryTriplet& t, double tol) {
  const auto report = verify_triplet(t, tol);
  if (!report.valid()) {
    throw Error(ErrorCode::InvalidTriplet,
                "triplet fails verification (residual " + std::to_string(report.max_residual) + ")");
  }
  const double r = 1.0 / std::sqrt(2.0);
  Matrix f(2 * t.gamma1.rows(), t.gamma1.cols());
  f << r * (t.gamma1 + t.gamma2), r * (t.gamma1 - t.gamma2);
  return BoundarySystem{t.base, t.adjoint_graph, t.g, t.g, std::move(f)};
}

void require_equal_boundary_dims(std::size_t g1_dim, std::size_t g2_dim) {
  if (g1_dim != g2_dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "boundary spaces have dimensions " + std::to_string(g1_dim) + " and " +
                    std::to_string(g2_dim) + "; no unitary map between them exists",
                {g1_dim, g2_dim});
  }
}

BoundaryTriplet system_to_triplet(const BoundarySystem& s, const Matrix& l0, double tol) {
  require_equal_boundary_dims(s.g1.dim(), s.g2.dim());
  const auto p = idx(s.g1.dim());
  if (l0.rows() != p || l0.cols() != p) {
    throw Error(ErrorCode::DimensionMismatch, "L0 must be a square matrix of size dim G1",
                {static_cast<std::size_t>(l0.cols()), static_cast<std::size_t>(l0.rows())});
  }
  if (!is_unitary(l0)) throw Error(ErrorCode::NotUnitary, "L0 is not unitary");
  const auto report = verify_system(s, tol);
  if (!report.valid()) {
    throw Error(ErrorCode::InvalidSystem,
                "system fails verification (residual " + std::to_string(report.max_residual) + ")");
  }
  const double r = 1.0 / std::sqrt(2.0);
  const Matrix pulled_back = l0.adjoint() * s.f2();
  Matrix gamma1 = r * (s.f1() + pulled_back);
  Matrix gamma2 = r * (s.f1() - pulled_back);
  return BoundaryTriplet{s.base, s.adjoint_graph, s.g1, std::move(gamma1), std::move(gamma2)};
}

CanonicalDecomposition canonical_decomposition(const Relation& h0, double tol) {
  if (!is_skew_symmetric(h0, tol)) {
    throw Error(ErrorCode::NotSkewSymmetric, "canonical decomposition needs a skew-symmetric relation");
  }
  const auto n = idx(h0.space_dim());
  DeficiencyData def = deficiency(h0, tol);
  Relation adj = adjoint(h0);
  const double r = 1.0 / std::sqrt(2.0);

  Matrix hat1(2 * n, def.g1.basis().cols());
  hat1 << r * def.g1.basis(), r * def.g1.basis();
  Matrix hat2(2 * n, def.g2.basis().cols());
  hat2 << r * def.g2.basis(), -r * def.g2.basis();

  CanonicalDecomposition out{negate(h0).graph(), Subspace::from_orthonormal(std::move(hat1)),
                             Subspace::from_orthonormal(std::move(hat2)), std::move(def),
                             std::move(adj)};

  const double cross = std::max({max_cross_inner(out.g_neg, out.ghat1),
                                 max_cross_inner(out.g_neg, out.ghat2),
                                 max_cross_inner(out.ghat1, out.ghat2)});
  const std::size_t total = out.g_neg.dim() + out.ghat1.dim() + out.ghat2.dim();
  if (cross > tol || total != out.adjoint.graph_dim()) {
    throw Error(ErrorCode::DecompositionFailure,
                "pieces overlap by " + std::to_string(cross) + " or dimensions " +
                    std::to_string(total) + " != " + std::to_string(out.adjoint.graph_dim()));
  }
  const Subspace whole = sum(sum(out.g_neg, out.ghat1), out.ghat2);
  if (!equal(whole, out.adjoint.graph(), tol)) {
    throw Error(ErrorCode::DecompositionFailure, "pieces do not sum to the adjoint graph");
  }
  return out;
}

BoundarySystem canonical_system(const Relation& h0, double tol) {
  CanonicalDecomposition dec = canonical_decomposition(h0, tol);
  const auto n = idx(h0.space_dim());
  const auto p = idx(dec.deficiency.g1.dim());
  const auto q = idx(dec.deficiency.g2.dim());
  const Matrix& adj_basis = dec.adjoint.graph().basis();
  const std::array<Subspace, 3> parts{dec.g_neg, dec.ghat1, dec.ghat2};
  const double root2 = std::sqrt(2.0);

  Matrix f(p + q, adj_basis.cols());
  for (Eigen::Index j = 0; j < adj_basis.cols(); ++j) {
    const auto comps = oblique_project(parts, adj_basis.col(j), tol);
    // P1 u and P2 u are the first blocks of the Ghat1 and Ghat2 components.
    f.col(j).head(p) = root2 * (dec.deficiency.g1.basis().adjoint() * comps[1].head(n));
    f.col(j).tail(q) = root2 * (dec.deficiency.g2.basis().adjoint() * comps[2].head(n));
  }
  return BoundarySystem{h0, dec.adjoint.graph(), dec.deficiency.g1, dec.deficiency.g2, std::move(f)};
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  Eigen::JacobiSVD<Matrix> svd(m);
  return (svd.singularValues().array() - 1.0).abs().maxCoeff() <= tol;
}

bool is_contraction(const Matrix& m, double tol) { return spectral_norm(m) <= 1.0 + tol; }

}  // namespace skewext
