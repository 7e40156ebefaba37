#pragma once

#include <cstddef>
#include <string_view>
#include <utility>

#include "skewext/boundary.hpp"

namespace skewext {

enum class ParamKind { UnitaryA, UnitaryB, Contraction };

std::string_view to_string(ParamKind kind) noexcept;
ParamKind parse_param_kind(std::string_view text);

// A parameter of one of the extension parametrizations, in orthonormal
// G-coordinates. Construction validates the unitarity or contraction bound.
class ExtensionParam {
 public:
  ExtensionParam(ParamKind kind, Matrix matrix, double tol = 1e-8);

  ParamKind kind() const noexcept { return kind_; }
  const Matrix& matrix() const noexcept { return matrix_; }

 private:
  ParamKind kind_;
  Matrix matrix_;
};

// Restrictions of H0* parametrized by unitaries L: G1 -> G2,
// Graph(H) = {u in Graph(H0*) : L F1 u = F2 u}.
Relation theorem_a_extension(const BoundarySystem& s, const Matrix& l, double tol = kOrthTol);
// Inverse of theorem_a_extension on skew-self-adjoint restrictions of H0*.
Matrix theorem_a_readoff(const BoundarySystem& s, const Relation& h, double tol = kOrthTol);

// Psi(L): extensions of H0 given by (L-1) G1 u + (L+1) G2 u = 0 on Graph(H0*),
// with the second component negated.
Relation theorem_b_extension(const BoundaryTriplet& t, const Matrix& l, double tol = kOrthTol);

// The two sides of Psibar(L) = -Psi(L0^{-1} L).
Relation psibar(const BoundarySystem& s, const Matrix& l, double tol = kOrthTol);
Relation neg_psi_of_pullback(const BoundarySystem& s, const Matrix& l0, const Matrix& l,
                             double tol = kOrthTol);
bool psibar_bridge_check(const BoundarySystem& s, const Matrix& l0, const Matrix& l,
                         double tol = kOrthTol);

// Dissipative and ran(1 - H) = C^n.
bool is_maximal_dissipative(const Relation& h, double tol = kOrthTol);

// Phi(H): G1 u + G2 u -> G1 u - G2 u on the portion of Graph(H0*) carried by -H.
Matrix phi_of(const BoundaryTriplet& t, const Relation& h, double tol = kOrthTol);
// The maximal dissipative extension with Phi(H) = K.
Relation phi_inverse(const BoundaryTriplet& t, const Matrix& k, double tol = kOrthTol);

// Checks that H = -H* exactly when Phi(H) is unitary, and exactly when
// <G1 u, G2 v> + <G2 u, G1 v> vanishes on the H-portion of the graph.
bool unitarity_equivalence_check(const BoundaryTriplet& t, const Relation& h, double tol = kOrthTol);

struct ExistenceReport {
  std::pair<std::size_t, std::size_t> indices;
  bool equal = false;                 // deficiency indices agree
  bool has_sksa_extension = false;    // a skew-self-adjoint extension was built
  bool triplet_constructible = false; // system_to_triplet succeeded and verified
  bool system_equal_dims = false;     // a boundary system with dim G1 = dim G2 exists

  bool consistent() const noexcept {
    return equal == has_sksa_extension && equal == triplet_constructible &&
           equal == system_equal_dims;
  }
};

ExistenceReport existence_report(const Relation& h0, double tol = kOrthTol);

// H0*|_{D(H0) + G2}, read at graph level as Graph(-H0) (+) Ghat2.
Relation canonical_max_dissipative(const Relation& h0, double tol = kOrthTol);
// Compares adjoint(canonical_max_dissipative(H0)) with -(Graph(-H0) (+) Ghat1).
bool adjoint_formula_check(const Relation& h0, double tol = kOrthTol);

}  // namespace skewext
