#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "skewext/boundary.hpp"

using namespace skewext;

namespace {

const Complex I(0.0, 1.0);
const double kRoot2 = std::sqrt(2.0);

Relation scalar(Complex a) {
  Matrix m(1, 1);
  m(0, 0) = a;
  return from_operator(m, Subspace::full(1));
}

Matrix row(std::initializer_list<Complex> xs) {
  Matrix m(1, static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) m(0, i++) = x;
  return m;
}

// Boundary map of a system as a map on the ambient C^{2n}, restricted to the
// adjoint graph: F_ambient = F B^H.
Matrix ambient(const Matrix& coord_map, const Subspace& adjoint_graph) {
  return coord_map * adjoint_graph.basis().adjoint();
}

// Gamma1 (x, x') = x, Gamma2 (x, x') = x' on Graph(0*) = C^2.
BoundaryTriplet zero_relation_triplet() {
  return make_triplet(Relation::zero(1), Subspace::full(1), row({1.0, 0.0}), row({0.0, 1.0}));
}

}  // namespace

TEST_CASE("standard forms") {
  Vector u(2), v(2);
  u << 1.0, 2.0 * I;
  v << 3.0, I;
  // <1, i> + <2i, 3> = -i + 6i
  CHECK(std::abs(StandardSymmetricForm{}(u, v) - 5.0 * I) < 1e-15);
  CHECK(std::abs(StandardSymmetricForm{}(u, v) - oracle::omega(u, v)) < 1e-15);
  // <1, 3> - <2i, i> = 3 - 2
  CHECK(std::abs(StandardUnitaryForm{1, 1}(u, v) - 1.0) < 1e-15);
}

TEST_CASE("canonical system of the zero relation") {
  const BoundarySystem s = canonical_system(Relation::zero(1));
  REQUIRE(s.g1.dim() == 1);
  REQUIRE(s.g2.dim() == 1);
  // F(x, x') = ((x + x')/sqrt2, (x - x')/sqrt2) in the bases {1} of g1 and g2.
  CHECK(std::abs(s.g1.basis()(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(s.g2.basis()(0, 0) - 1.0) < 1e-15);
  Matrix expected(2, 2);
  expected << 1.0, 1.0, 1.0, -1.0;
  expected /= kRoot2;
  CHECK((ambient(s.f, s.adjoint_graph) - expected).norm() < 1e-14);

  const auto rep = verify_system(s);
  CHECK(rep.surjective);
  CHECK(rep.identity_holds);
  CHECK(rep.max_residual <= 1e-12);
}

TEST_CASE("verify_system detects broken systems") {
  BoundarySystem s = canonical_system(Relation::zero(1));
  BoundarySystem doubled = s;
  doubled.f *= 2.0;
  CHECK_FALSE(verify_system(doubled).identity_holds);
  CHECK(verify_system(doubled).surjective);

  BoundarySystem flat = s;
  flat.f.row(1).setZero();
  CHECK_FALSE(verify_system(flat).surjective);
}

TEST_CASE("canonical system of a skew-self-adjoint relation is degenerate") {
  const BoundarySystem s = canonical_system(scalar(I));
  CHECK(s.g1.dim() == 0);
  CHECK(s.g2.dim() == 0);
  CHECK(s.f.rows() == 0);
  CHECK(verify_system(s).valid());
}

TEST_CASE("verify_triplet") {
  const BoundaryTriplet t = zero_relation_triplet();
  const auto rep = verify_triplet(t);
  CHECK(rep.valid());
  CHECK(rep.max_residual < 1e-14);

  BoundaryTriplet no_gamma2 = t;
  no_gamma2.gamma2.setZero();
  CHECK_FALSE(verify_triplet(no_gamma2).surjective);

  BoundaryTriplet swapped = t;
  std::swap(swapped.gamma1, swapped.gamma2);
  CHECK(verify_triplet(swapped).valid());
}

TEST_CASE("triplet_to_system") {
  const BoundarySystem s = triplet_to_system(zero_relation_triplet());
  Matrix expected(2, 2);
  expected << 1.0, 1.0, 1.0, -1.0;
  expected /= kRoot2;
  const Matrix f = ambient(s.f, s.adjoint_graph);
  CHECK((f - expected).norm() < 1e-14);

  Vector e1(2), ones(2);
  e1 << 1.0, 0.0;
  ones << 1.0, 1.0;
  Vector img = f * e1;
  CHECK(std::abs(img(0) - 1.0 / kRoot2) < 1e-15);
  CHECK(std::abs(img(1) - 1.0 / kRoot2) < 1e-15);
  img = f * ones;
  CHECK(std::abs(img(0) - kRoot2) < 1e-15);
  CHECK(std::abs(img(1)) < 1e-15);
  CHECK(verify_system(s).valid());

  BoundaryTriplet broken = zero_relation_triplet();
  broken.gamma1 *= 3.0;
  try {
    triplet_to_system(broken);
    FAIL("expected InvalidTriplet");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::InvalidTriplet);
  }
}

TEST_CASE("system_to_triplet") {
  const BoundaryTriplet t = zero_relation_triplet();
  const BoundaryTriplet back = system_to_triplet(triplet_to_system(t), Matrix::Identity(1, 1));
  CHECK((back.gamma1 - t.gamma1).norm() < 1e-14);
  CHECK((back.gamma2 - t.gamma2).norm() < 1e-14);

  // The canonical system of the zero relation gives Gamma1 = x, Gamma2 = x'.
  const BoundarySystem canon = canonical_system(Relation::zero(1));
  const BoundaryTriplet ct = system_to_triplet(canon, Matrix::Identity(1, 1));
  CHECK((ambient(ct.gamma1, ct.adjoint_graph) - row({1.0, 0.0})).norm() < 1e-14);
  CHECK((ambient(ct.gamma2, ct.adjoint_graph) - row({0.0, 1.0})).norm() < 1e-14);
  CHECK(verify_triplet(ct).valid());

  try {
    system_to_triplet(canon, 2.0 * Matrix::Identity(1, 1));
    FAIL("expected NotUnitary");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotUnitary);
  }

  const BoundarySystem lopsided =
      make_system(Relation::zero(1), Subspace::full(1), Subspace(1), row({1.0, 1.0}) / kRoot2);
  try {
    system_to_triplet(lopsided, Matrix(0, 1));
    FAIL("expected DimensionMismatch");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::DimensionMismatch);
    REQUIRE(err.indices().has_value());
    CHECK(*err.indices() == std::pair<std::size_t, std::size_t>{1, 0});
  }
}

TEST_CASE("canonical decomposition examples") {
  auto dec = canonical_decomposition(Relation::zero(1));
  CHECK(dec.g_neg.dim() == 0);
  Vector d(2), a(2);
  d << 1.0, 1.0;
  a << 1.0, -1.0;
  CHECK(equal(dec.ghat1, span(Matrix(d))));
  CHECK(equal(dec.ghat2, span(Matrix(a))));

  dec = canonical_decomposition(scalar(I));
  // Graph(-H0) = span{(1, -i)}.
  Vector g(2);
  g << 1.0, -I;
  CHECK(equal(dec.g_neg, span(Matrix(g))));
  CHECK(dec.ghat1.dim() == 0);
  CHECK(dec.ghat2.dim() == 0);

  try {
    canonical_decomposition(scalar(1.0));
    FAIL("expected NotSkewSymmetric");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotSkewSymmetric);
  }
}

TEST_CASE("property: canonical systems satisfy the boundary identity element-wise") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const std::size_t k = seed % (n + 1);
    const Relation h0 = random_skew_symmetric(n, k, seed);
    const auto dec = canonical_decomposition(h0);
    CHECK(dec.g_neg.dim() + dec.ghat1.dim() + dec.ghat2.dim() == 2 * n - h0.graph_dim());
    CHECK(max_cross_inner(dec.g_neg, dec.ghat1) < 1e-9);
    CHECK(max_cross_inner(dec.g_neg, dec.ghat2) < 1e-9);
    CHECK(max_cross_inner(dec.ghat1, dec.ghat2) < 1e-9);

    const BoundarySystem s = canonical_system(h0);
    CHECK(verify_system(s).max_residual <= 1e-9);
    CHECK(verify_system(s).valid());

    // Omega(u, v) = omega(F u, F v) on random graph elements.
    const auto d = static_cast<Eigen::Index>(s.adjoint_graph.dim());
    const StandardUnitaryForm small_omega{s.g1.dim(), s.g2.dim()};
    for (int trial = 0; trial < 3; ++trial) {
      const Vector cu = oracle::random_vector(d, rng);
      const Vector cv = oracle::random_vector(d, rng);
      const Vector u = s.adjoint_graph.basis() * cu;
      const Vector v = s.adjoint_graph.basis() * cv;
      CHECK(std::abs(oracle::omega(u, v) - small_omega(s.f * cu, s.f * cv)) < 1e-9);
    }

    // F vanishes on Graph(-H0).
    if (dec.g_neg.dim() > 0) {
      const Matrix coords = s.adjoint_graph.basis().adjoint() * dec.g_neg.basis();
      CHECK((s.f * coords).norm() < 1e-9);
    }

    // Conversions preserve validity; the round trip with L0 = I is the identity.
    const auto p = static_cast<Eigen::Index>(s.g1.dim());
    const Matrix l0 = p > 0 ? random_unitary(static_cast<std::size_t>(p), seed) : Matrix(0, 0);
    const BoundaryTriplet t = system_to_triplet(s, l0);
    CHECK(verify_triplet(t).valid());
    const BoundarySystem s2 = triplet_to_system(t);
    CHECK(verify_system(s2).max_residual <= 1e-8);
    const BoundaryTriplet t2 = system_to_triplet(s2, Matrix::Identity(p, p));
    CHECK((t2.gamma1 - t.gamma1).norm() <= 1e-9);
    CHECK((t2.gamma2 - t.gamma2).norm() <= 1e-9);
  }
}
