#include "skewext/extensions.hpp"

#include <algorithm>
#include <string>

namespace skewext {

namespace {

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Relation whose graph is the image of coordinates under the orthonormal
// basis of `frame`; re-spanned so the stored basis has the canonical phases.
Relation relation_from_coords(const Subspace& frame, const Matrix& coords) {
  return Relation(span(Matrix(frame.basis() * coords)));
}

Relation restriction_by_condition(const Subspace& adjoint_graph, const Matrix& condition) {
  return relation_from_coords(adjoint_graph, null_space(condition));
}

void require_valid(const BoundarySystem& s, double tol) {
  const auto r = verify_system(s, tol);
  if (!r.valid()) {
    throw Error(ErrorCode::InvalidSystem,
                "system fails verification (residual " + std::to_string(r.max_residual) + ")");
  }
}

void require_valid(const BoundaryTriplet& t, double tol) {
  const auto r = verify_triplet(t, tol);
  if (!r.valid()) {
    throw Error(ErrorCode::InvalidTriplet,
                "triplet fails verification (residual " + std::to_string(r.max_residual) + ")");
  }
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != idx(rows) || m.cols() != idx(cols)) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " must be " + std::to_string(rows) + " x " + std::to_string(cols),
                {cols, rows});
  }
}

// Solves X * A = Y for X in the least-squares sense; A must have full row rank.
Matrix solve_right(const Matrix& a, const Matrix& y) {
  if (a.rows() == 0) return Matrix(y.rows(), 0);
  const Matrix xh = a.adjoint().colPivHouseholderQr().solve(y.adjoint());
  return xh.adjoint();
}

}  // namespace

std::string_view to_string(ParamKind kind) noexcept {
  switch (kind) {
    case ParamKind::UnitaryA: return "unitary_A";
    case ParamKind::UnitaryB: return "unitary_B";
    case ParamKind::Contraction: return "contraction";
  }
  return "unknown";
}

ParamKind parse_param_kind(std::string_view text) {
  if (text == "unitary_A") return ParamKind::UnitaryA;
  if (text == "unitary_B") return ParamKind::UnitaryB;
  if (text == "contraction") return ParamKind::Contraction;
  throw Error(ErrorCode::InvalidInput, "unknown parameter kind '" + std::string(text) + "'");
}

ExtensionParam::ExtensionParam(ParamKind kind, Matrix matrix, double tol)
    : kind_(kind), matrix_(std::move(matrix)) {
  if (kind_ == ParamKind::Contraction) {
    if (matrix_.rows() != matrix_.cols()) {
      throw Error(ErrorCode::NotContraction, "contraction parameter must be square");
    }
    if (!is_contraction(matrix_, tol)) {
      throw Error(ErrorCode::NotContraction, "norm " + std::to_string(spectral_norm(matrix_)) + " > 1");
    }
  } else if (!is_unitary(matrix_, tol)) {
    throw Error(ErrorCode::NotUnitary, "parameter matrix is not unitary");
  }
}

Relation theorem_a_extension(const BoundarySystem& s, const Matrix& l, double tol) {
  require_shape(l, s.g2.dim(), s.g1.dim(), "L");
  if (!is_unitary(l)) throw Error(ErrorCode::NotUnitary, "L is not unitary");
  require_valid(s, tol);
  return restriction_by_condition(s.adjoint_graph, l * s.f1() - s.f2());
}

Matrix theorem_a_readoff(const BoundarySystem& s, const Relation& h, double tol) {
  if (h.space_dim() != s.base.space_dim() || !is_subspace_of(h.graph(), s.adjoint_graph, tol)) {
    throw Error(ErrorCode::NotRestriction, "relation is not a restriction of the adjoint");
  }
  if (!is_skew_self_adjoint(h, tol)) {
    throw Error(ErrorCode::NotSkewSelfAdjoint, "relation is not skew-self-adjoint");
  }
  const Matrix coords = s.adjoint_graph.basis().adjoint() * h.graph().basis();
  const Matrix x = s.f1() * coords;
  const Matrix y = s.f2() * coords;
  if (numerical_rank(x) != s.g1.dim()) {
    throw Error(ErrorCode::ReadoffSingular, "F1 is not onto G1 on the given relation");
  }
  return solve_right(x, y);
}

Relation theorem_b_extension(const BoundaryTriplet& t, const Matrix& l, double tol) {
  const auto g = t.g.dim();
  require_shape(l, g, g, "L");
  if (!is_unitary(l)) throw Error(ErrorCode::NotUnitary, "L is not unitary");
  require_valid(t, tol);
  const auto id = Matrix::Identity(idx(g), idx(g));
  const Matrix condition = (l - id) * t.gamma1 + (l + id) * t.gamma2;
  return negate(restriction_by_condition(t.adjoint_graph, condition));
}

Relation psibar(const BoundarySystem& s, const Matrix& l, double tol) {
  return theorem_a_extension(s, l, tol);
}

Relation neg_psi_of_pullback(const BoundarySystem& s, const Matrix& l0, const Matrix& l, double tol) {
  const BoundaryTriplet t = system_to_triplet(s, l0, tol);
  require_shape(l, s.g2.dim(), s.g1.dim(), "L");
  return negate(theorem_b_extension(t, l0.adjoint() * l, tol));
}

bool psibar_bridge_check(const BoundarySystem& s, const Matrix& l0, const Matrix& l, double tol) {
  return equal(psibar(s, l, tol).graph(), neg_psi_of_pullback(s, l0, l, tol).graph(), tol);
}

bool is_maximal_dissipative(const Relation& h, double tol) {
  return is_dissipative(h, tol) && range(one_minus(h)).dim() == h.space_dim();
}

Matrix phi_of(const BoundaryTriplet& t, const Relation& h, double tol) {
  if (!is_dissipative(h, tol)) throw Error(ErrorCode::NotDissipative, "relation is not dissipative");
  if (range(one_minus(h)).dim() != h.space_dim()) {
    throw Error(ErrorCode::NotMaximal, "ran(1 - H) is a proper subspace");
  }
  const Relation neg = negate(h);
  if (h.space_dim() != t.base.space_dim() || !is_subspace_of(neg.graph(), t.adjoint_graph, tol) ||
      !extends(h, t.base, tol)) {
    throw Error(ErrorCode::NotRestriction, "relation is not between H0 and -H0*");
  }
  const Matrix coords = t.adjoint_graph.basis().adjoint() * neg.graph().basis();
  const Matrix plus = (t.gamma1 + t.gamma2) * coords;
  const Matrix minus = (t.gamma1 - t.gamma2) * coords;
  if (numerical_rank(plus) != t.g.dim()) {
    throw Error(ErrorCode::IllDefined, "G1 u + G2 u does not span G");
  }
  Matrix k = solve_right(plus, minus);
  const double residual = max_abs(k * plus - minus);
  if (residual > tol * std::max(1.0, max_abs(minus))) {
    throw Error(ErrorCode::IllDefined, "G1 u + G2 u -> G1 u - G2 u is not a function (residual " +
                                           std::to_string(residual) + ")");
  }
  return k;
}

Relation phi_inverse(const BoundaryTriplet& t, const Matrix& k, double tol) {
  const auto g = t.g.dim();
  require_shape(k, g, g, "K");
  if (!is_contraction(k)) {
    throw Error(ErrorCode::NotContraction, "norm " + std::to_string(spectral_norm(k)) + " > 1");
  }
  require_valid(t, tol);
  const Matrix condition = k * (t.gamma1 + t.gamma2) - (t.gamma1 - t.gamma2);
  return negate(restriction_by_condition(t.adjoint_graph, condition));
}

bool unitarity_equivalence_check(const BoundaryTriplet& t, const Relation& h, double tol) {
  const Matrix k = phi_of(t, h, tol);
  const bool sksa = is_skew_self_adjoint(h, tol);
  const bool unitary = is_unitary(k);

  const Matrix coords = t.adjoint_graph.basis().adjoint() * negate(h).graph().basis();
  const Matrix g1c = t.gamma1 * coords;
  const Matrix g2c = t.gamma2 * coords;
  const Matrix form = g2c.adjoint() * g1c + g1c.adjoint() * g2c;
  const bool criterion = max_abs(form) <= tol * std::max(1.0, max_abs(g1c) * max_abs(g2c));
  return sksa == unitary && criterion == sksa;
}

ExistenceReport existence_report(const Relation& h0, double tol) {
  if (!is_skew_symmetric(h0, tol)) {
    throw Error(ErrorCode::NotSkewSymmetric, "existence report needs a skew-symmetric relation");
  }
  const BoundarySystem s = canonical_system(h0, tol);
  ExistenceReport r;
  r.indices = {s.g1.dim(), s.g2.dim()};
  r.equal = r.indices.first == r.indices.second;
  r.system_equal_dims = verify_system(s, tol).valid() && r.equal;

  if (r.equal) {
    const auto p = idx(s.g1.dim());
    // The unitary parametrization gives a skew-self-adjoint restriction of
    // H0*; its negative extends H0.
    const Relation restriction = theorem_a_extension(s, Matrix::Identity(p, p), tol);
    const Relation ext = negate(restriction);
    r.has_sksa_extension = is_skew_self_adjoint(ext, tol) && extends(ext, h0, tol);
  }

  try {
    const auto p = idx(s.g1.dim());
    const BoundaryTriplet t = system_to_triplet(s, Matrix::Identity(p, p), tol);
    r.triplet_constructible = verify_triplet(t, tol).valid();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DimensionMismatch) throw;
    r.triplet_constructible = false;
  }
  return r;
}

Relation canonical_max_dissipative(const Relation& h0, double tol) {
  const CanonicalDecomposition dec = canonical_decomposition(h0, tol);
  return Relation(sum(dec.g_neg, dec.ghat2));
}

bool adjoint_formula_check(const Relation& h0, double tol) {
  const CanonicalDecomposition dec = canonical_decomposition(h0, tol);
  const Relation h(sum(dec.g_neg, dec.ghat2));
  const Relation expected = negate(Relation(sum(dec.g_neg, dec.ghat1)));
  return equal(adjoint(h).graph(), expected.graph(), tol);
}

}  // namespace skewext
