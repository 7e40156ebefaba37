#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "skewext/subspace.hpp"

namespace skewext {

// A linear relation on C^n, i.e. a subspace of C^n (+) C^n. A graph element is
// written (x, x') with x the first block and x' the second block.
class Relation {
 public:
  explicit Relation(Subspace graph);

  // Relation with graph span(generators), generators being 2n x p.
  static Relation from_generators(const Matrix& generators, double tol = kRankTol);
  static Relation zero(std::size_t n);
  static Relation full(std::size_t n);

  std::size_t space_dim() const noexcept { return n_; }
  const Subspace& graph() const noexcept { return graph_; }
  std::size_t graph_dim() const noexcept { return graph_.dim(); }

  // First and second n x k blocks of the graph basis.
  Matrix first_block() const;
  Matrix second_block() const;

 private:
  std::size_t n_;
  Subspace graph_;
};

struct DeficiencyData {
  Subspace g1;  // ker(1 - T*)
  Subspace g2;  // ker(1 + T*)
  std::pair<std::size_t, std::size_t> indices() const { return {g1.dim(), g2.dim()}; }
};

// {(x, A x) : x in domain}.
Relation from_operator(const Matrix& a, const Subspace& domain);

Subspace domain(const Relation& t);
Subspace range(const Relation& t);
Subspace kernel(const Relation& t);
Subspace mul_part(const Relation& t);

// Graph(T*) = (J Graph(T))^perp with J(x, x') = (-x', x).
Relation adjoint(const Relation& t);
// -T*, computed as Swap(Graph(T)^perp).
Relation neg_adjoint(const Relation& t);
Relation negate(const Relation& t);
// {(x, x') : (x', x) in T}.
Relation swap(const Relation& t);
// {(x, x - x') : (x, x') in T}.
Relation one_minus(const Relation& t);

// Sesquilinear form Omega((x,x'),(y,y')) = <x,y'> + <x',y> on basis coordinates:
// returns W with Omega(B c, B d) = d^H W c.
Matrix symmetric_form_gram(const Matrix& first, const Matrix& second);

bool is_skew_symmetric(const Relation& t, double tol = kOrthTol);
bool is_dissipative(const Relation& t, double tol = kOrthTol);
bool is_skew_self_adjoint(const Relation& t, double tol = kOrthTol);
// Graph(s) is contained in Graph(t).
bool extends(const Relation& t, const Relation& s, double tol = kOrthTol);
Relation restrict_graph(const Relation& t, const Subspace& g, double tol = kOrthTol);

// Largest eigenvalue of the Hermitian matrix B_x^H B_x' + B_x'^H B_x; twice the
// supremum of Re<x', x> over unit graph vectors.
double dissipativity_bound(const Relation& t);

DeficiencyData deficiency(const Relation& t, double tol = kOrthTol);

// Deterministic in (n, k, seed). The graph has dimension k and the symmetric
// form vanishes on it.
Relation random_skew_symmetric(std::size_t n, std::size_t k, std::uint64_t seed);
// Deterministic random relation with graph dimension k (0 <= k <= 2n).
Relation random_relation(std::size_t n, std::size_t k, std::uint64_t seed);
// Haar-distributed unitary matrix of size m.
Matrix random_unitary(std::size_t m, std::uint64_t seed);
// Random matrix with spectral norm `norm`.
Matrix random_contraction(std::size_t m, double norm, std::uint64_t seed);

}  // namespace skewext
