#pragma once

#include <cstddef>

#include "skewext/relation.hpp"

namespace skewext {

// Omega((x,x'),(y,y')) = <x,y'> + <x',y> on C^n (+) C^n.
struct StandardSymmetricForm {
  Complex operator()(const Vector& u, const Vector& v) const;
};

// omega((a,b),(c,d)) = <a,c> - <b,d> on G1 (+) G2, in coordinates.
struct StandardUnitaryForm {
  std::size_t g1_dim = 0;
  std::size_t g2_dim = 0;
  Complex operator()(const Vector& u, const Vector& v) const;
};

// Boundary maps act on coordinates with respect to the orthonormal basis of
// `adjoint_graph`, which is Graph(base*). Outputs are coordinates with respect
// to the orthonormal bases of g1, g2 (resp. g).
struct BoundarySystem {
  Relation base;
  Subspace adjoint_graph;
  Subspace g1;
  Subspace g2;
  Matrix f;  // (dim g1 + dim g2) x dim adjoint_graph

  Matrix f1() const { return f.topRows(static_cast<Eigen::Index>(g1.dim())); }
  Matrix f2() const { return f.bottomRows(static_cast<Eigen::Index>(g2.dim())); }
};

struct BoundaryTriplet {
  Relation base;
  Subspace adjoint_graph;
  Subspace g;
  Matrix gamma1;  // dim g x dim adjoint_graph
  Matrix gamma2;
};

struct VerificationReport {
  bool surjective = false;
  bool identity_holds = false;
  double max_residual = 0.0;
  double tolerance = 0.0;

  bool valid() const noexcept { return surjective && identity_holds; }
};

// Builds a system from a map given on the ambient C^{2n}: f_ambient is
// (dim g1 + dim g2) x 2n and is restricted to Graph(base*).
BoundarySystem make_system(const Relation& base, Subspace g1, Subspace g2, const Matrix& f_ambient);
BoundaryTriplet make_triplet(const Relation& base, Subspace g, const Matrix& gamma1_ambient,
                             const Matrix& gamma2_ambient);

// Residuals are compared against tol times the largest entry of the two Gram
// matrices (at least 1).
VerificationReport verify_system(const BoundarySystem& s, double tol = kOrthTol);
VerificationReport verify_triplet(const BoundaryTriplet& t, double tol = kOrthTol);

BoundarySystem triplet_to_system(const BoundaryTriplet& t, double tol = kOrthTol);
// l0 maps g1-coordinates to g2-coordinates and must be unitary.
BoundaryTriplet system_to_triplet(const BoundarySystem& s, const Matrix& l0, double tol = kOrthTol);

// Throws DimensionMismatch carrying (g1_dim, g2_dim) unless they agree.
void require_equal_boundary_dims(std::size_t g1_dim, std::size_t g2_dim);

struct CanonicalDecomposition {
  Subspace g_neg;  // Graph(-H0)
  Subspace ghat1;  // {(x, x) : x in ker(1 - H0*)}
  Subspace ghat2;  // {(x, -x) : x in ker(1 + H0*)}
  DeficiencyData deficiency;
  Relation adjoint;
};

// Orthogonal splitting Graph(H0*) = Graph(-H0) (+) Ghat1 (+) Ghat2.
CanonicalDecomposition canonical_decomposition(const Relation& h0, double tol = kOrthTol);

// F = (sqrt2 P1, sqrt2 P2) with P1, P2 read off the graph components.
BoundarySystem canonical_system(const Relation& h0, double tol = kOrthTol);

// Square, with every singular value within tol of 1.
bool is_unitary(const Matrix& m, double tol = 1e-8);
// Largest singular value at most 1 + tol.
bool is_contraction(const Matrix& m, double tol = 1e-8);
double spectral_norm(const Matrix& m);

}  // namespace skewext
