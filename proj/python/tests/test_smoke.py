from fractions import Fraction

import numpy as np
import pytest

import skewext as sx


def full(n):
    return sx.span(np.eye(n, dtype=complex))


def mult(a):
    return sx.from_operator(np.array([[a]], dtype=complex), full(1))


def same(r, s):
    return sx.subspace_equal(r.graph, s.graph, 1e-9)


def test_subspace_basics():
    s = sx.span(np.array([[1, 2], [0, 0]], dtype=complex))
    assert s.dim == 1
    assert sx.orthocomplement(s).dim == 1
    assert sx.distance(s, s) < 1e-14


def test_zero_relation_extensions():
    z = sx.Relation.zero(1)
    assert sx.deficiency_indices(z) == (1, 1)
    s = sx.canonical_system(z)
    assert sx.verify_system(s).valid
    h = sx.theorem_a_extension(s, np.array([[1j]]))
    assert same(h, mult(-1j))
    assert sx.is_skew_self_adjoint(h)
    assert abs(sx.theorem_a_readoff(s, h)[0, 0] - 1j) < 1e-12

    t = sx.system_to_triplet(s, np.eye(1, dtype=complex))
    assert same(sx.theorem_b_extension(t, np.array([[1j]])), mult(1j))
    assert same(sx.phi_inverse(t, np.array([[0.0]])), mult(-1))
    assert abs(sx.phi_of(t, mult(1j))[0, 0] - 1j) < 1e-12
    assert same(sx.canonical_max_dissipative(z), mult(-1))


def test_existence_report():
    rep = sx.existence_report(sx.Relation.zero(1))
    assert rep["indices"] == (1, 1)
    assert rep["consistent"] and rep["has_sksa_extension"]


def test_random_property():
    h0 = sx.random_skew_symmetric(5, 2, 4)
    s = sx.canonical_system(h0)
    l = sx.random_unitary(3, 1)
    assert sx.is_skew_self_adjoint(sx.theorem_a_extension(s, l))
    assert sx.psibar_bridge_check(s, sx.random_unitary(3, 2), l)
    assert sx.adjoint_formula_check(h0)


def test_errors_carry_codes():
    with pytest.raises(sx.Error) as info:
        sx.canonical_system(mult(1.0))
    assert info.value.code == "NotSkewSymmetric"


def test_halfline_exact():
    hl = sx.halfline
    e1 = [(0, 1, 1)]
    assert hl.inner(e1, e1) == (Fraction(1, 2), 0)
    lhs, rhs = hl.green_identity([(0, 2, 1)], e1)
    assert lhs == rhs == (1, 0)
    assert hl.resolvent_solve(e1) == [(1, Fraction(1), (Fraction(1), Fraction(0)))]
    g1, g2 = hl.deficiency()
    assert len(g1) == 1 and g2 == []
    with pytest.raises(sx.Error) as info:
        hl.triplet_attempt()
    assert info.value.code == "DimensionMismatch"
    rep = hl.existence_report()
    assert rep["indices"] == (1, 0) and not rep["equal"]
