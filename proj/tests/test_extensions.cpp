#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "skewext/extensions.hpp"

using namespace skewext;

namespace {

const Complex I(0.0, 1.0);

Matrix scalar_matrix(Complex a) {
  Matrix m(1, 1);
  m(0, 0) = a;
  return m;
}

Relation scalar(Complex a) { return from_operator(scalar_matrix(a), Subspace::full(1)); }

Relation multivalued() {
  Vector v(2);
  v << 0.0, 1.0;
  return Relation::from_generators(Matrix(v));
}

Matrix row(Complex a, Complex b) {
  Matrix m(1, 2);
  m << a, b;
  return m;
}

BoundaryTriplet zero_triplet() {
  return make_triplet(Relation::zero(1), Subspace::full(1), row(1.0, 0.0), row(0.0, 1.0));
}

bool same(const Relation& a, const Relation& b) { return equal(a.graph(), b.graph(), 1e-9); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("parameter kinds and validation") {
  CHECK(parse_param_kind("unitary_B") == ParamKind::UnitaryB);
  CHECK(to_string(ParamKind::Contraction) == "contraction");
  CHECK(code_of([] { parse_param_kind("unitary"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { ExtensionParam(ParamKind::UnitaryA, scalar_matrix(2.0)); }) ==
        ErrorCode::NotUnitary);
  CHECK(code_of([] { ExtensionParam(ParamKind::Contraction, scalar_matrix(1.5)); }) ==
        ErrorCode::NotContraction);
  CHECK_NOTHROW(ExtensionParam(ParamKind::Contraction, scalar_matrix(0.5)));
}

TEST_CASE("unitary G1 -> G2 parametrization on the zero relation") {
  const BoundarySystem s = canonical_system(Relation::zero(1));
  CHECK(same(theorem_a_extension(s, scalar_matrix(1.0)), scalar(0.0)));
  CHECK(same(theorem_a_extension(s, scalar_matrix(I)), scalar(-I)));
  CHECK(same(theorem_a_extension(s, scalar_matrix(-1.0)), multivalued()));

  CHECK(std::abs(theorem_a_readoff(s, scalar(0.0))(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(theorem_a_readoff(s, scalar(-I))(0, 0) - I) < 1e-12);
  CHECK(std::abs(theorem_a_readoff(s, multivalued())(0, 0) + 1.0) < 1e-12);

  CHECK(code_of([&] { theorem_a_extension(s, scalar_matrix(0.5)); }) == ErrorCode::NotUnitary);
  CHECK(code_of([&] { theorem_a_readoff(s, scalar(-1.0)); }) == ErrorCode::NotSkewSelfAdjoint);

  BoundarySystem broken = s;
  broken.f *= 2.0;
  CHECK(code_of([&] { theorem_a_extension(broken, scalar_matrix(1.0)); }) ==
        ErrorCode::InvalidSystem);
}

TEST_CASE("read-off rejects relations outside the adjoint") {
  // H0 = 0 on C^1 but restricted to the span of e1 in C^2: Graph(H0*) is proper.
  Matrix gens(4, 1);
  gens << 1.0, 0.0, 0.0, 0.0;
  const Relation h0 = Relation::from_generators(gens);
  const BoundarySystem s = canonical_system(h0);
  Matrix a(2, 2);
  a << I, 0.0, 0.0, 0.0;
  const Relation outside = from_operator(a, Subspace::full(2));
  CHECK(code_of([&] { theorem_a_readoff(s, outside); }) == ErrorCode::NotRestriction);
}

TEST_CASE("triplet parametrization on the zero relation") {
  const BoundaryTriplet t = zero_triplet();
  CHECK(same(theorem_b_extension(t, scalar_matrix(1.0)), scalar(0.0)));
  CHECK(same(theorem_b_extension(t, scalar_matrix(I)), scalar(I)));
  CHECK(same(theorem_b_extension(t, scalar_matrix(-1.0)), multivalued()));
  CHECK(code_of([&] { theorem_b_extension(t, scalar_matrix(0.0)); }) == ErrorCode::NotUnitary);

  BoundaryTriplet broken = t;
  broken.gamma2 *= 0.5;
  CHECK(code_of([&] { theorem_b_extension(broken, scalar_matrix(1.0)); }) ==
        ErrorCode::InvalidTriplet);
}

TEST_CASE("bridge between the two parametrizations") {
  const BoundarySystem s = canonical_system(Relation::zero(1));
  CHECK(same(psibar(s, scalar_matrix(I)), scalar(-I)));
  CHECK(same(neg_psi_of_pullback(s, scalar_matrix(1.0), scalar_matrix(I)), scalar(-I)));
  CHECK(psibar_bridge_check(s, scalar_matrix(1.0), scalar_matrix(I)));
  const Matrix l0 = scalar_matrix(std::exp(0.3 * I));
  CHECK(psibar_bridge_check(s, l0, l0));
}

TEST_CASE("Phi on the zero relation") {
  const BoundaryTriplet t = zero_triplet();
  CHECK(std::abs(phi_of(t, scalar(-1.0))(0, 0)) < 1e-12);
  CHECK(std::abs(phi_of(t, scalar(0.0))(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(phi_of(t, scalar(I))(0, 0) - I) < 1e-12);

  CHECK(same(phi_inverse(t, scalar_matrix(0.0)), scalar(-1.0)));
  CHECK(same(phi_inverse(t, scalar_matrix(1.0)), scalar(0.0)));
  CHECK(code_of([&] { phi_inverse(t, scalar_matrix(1.1)); }) == ErrorCode::NotContraction);

  CHECK(code_of([&] { phi_of(t, scalar(1.0)); }) == ErrorCode::NotDissipative);
  // Graph {0} is trivially dissipative, but ran(1 - H) = {0}.
  CHECK(code_of([&] { phi_of(t, Relation::zero(1)); }) == ErrorCode::NotMaximal);

  CHECK(unitarity_equivalence_check(t, scalar(0.0)));
  CHECK(unitarity_equivalence_check(t, scalar(-1.0)));
  CHECK(unitarity_equivalence_check(t, scalar(I)));
}

TEST_CASE("existence report") {
  auto r = existence_report(Relation::zero(1));
  CHECK(r.indices == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(r.equal);
  CHECK(r.has_sksa_extension);
  CHECK(r.triplet_constructible);
  CHECK(r.system_equal_dims);

  r = existence_report(scalar(I));
  CHECK(r.indices == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(r.consistent());
  CHECK(r.equal);

  CHECK(code_of([] { existence_report(scalar(1.0)); }) == ErrorCode::NotSkewSymmetric);
}

TEST_CASE("canonical maximal dissipative extension and its adjoint") {
  CHECK(same(canonical_max_dissipative(Relation::zero(1)), scalar(-1.0)));
  // No deficiency: H = H0* = mult by -i.
  CHECK(same(canonical_max_dissipative(scalar(I)), scalar(-I)));
  CHECK(adjoint_formula_check(Relation::zero(1)));
  CHECK(adjoint_formula_check(scalar(I)));
  CHECK(is_maximal_dissipative(canonical_max_dissipative(random_skew_symmetric(5, 2, 3))));
  CHECK(code_of([] { canonical_max_dissipative(scalar(1.0)); }) == ErrorCode::NotSkewSymmetric);
}

TEST_CASE("property: parametrizations on random skew-symmetric relations") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const std::size_t k = seed % (n + 1);
    const Relation h0 = random_skew_symmetric(n, k, seed);
    const BoundarySystem s = canonical_system(h0);
    const auto p = s.g1.dim();
    REQUIRE(p == s.g2.dim());

    const ExistenceReport rep = existence_report(h0);
    CHECK(rep.consistent());
    CHECK(rep.equal);

    const Matrix l = p > 0 ? random_unitary(p, seed + 100) : Matrix(0, 0);
    const Relation a = theorem_a_extension(s, l);
    CHECK(is_skew_self_adjoint(a));
    CHECK(extends(a, negate(h0)));
    CHECK(is_subspace_of(a.graph(), s.adjoint_graph, 1e-9));
    // negate swaps the containments and keeps skew-self-adjointness.
    CHECK(is_skew_self_adjoint(negate(a)));
    CHECK(extends(negate(a), h0));
    if (p > 0) CHECK((theorem_a_readoff(s, a) - l).norm() <= 1e-8);

    const Matrix l0 = p > 0 ? random_unitary(p, seed + 200) : Matrix(0, 0);
    const BoundaryTriplet t = system_to_triplet(s, l0);
    const Relation b = theorem_b_extension(t, l);
    CHECK(is_skew_self_adjoint(b));
    CHECK(extends(b, h0));
    CHECK(psibar_bridge_check(s, l0, l));

    if (p > 0) {
      const Matrix strict = random_contraction(p, 0.7, seed + 300);
      const Relation d = phi_inverse(t, strict);
      CHECK(is_maximal_dissipative(d));
      CHECK(extends(d, h0));
      CHECK_FALSE(is_skew_self_adjoint(d));
      CHECK((phi_of(t, d) - strict).norm() <= 1e-8);
      CHECK(unitarity_equivalence_check(t, d));

      const Relation u = phi_inverse(t, l);
      CHECK(is_skew_self_adjoint(u));
      CHECK((phi_of(t, u) - l).norm() <= 1e-8);
      CHECK(unitarity_equivalence_check(t, u));
    }

    const Relation cmd = canonical_max_dissipative(h0);
    CHECK(is_maximal_dissipative(cmd));
    CHECK(extends(cmd, negate(h0)));
    CHECK(adjoint_formula_check(h0));
  }
}
