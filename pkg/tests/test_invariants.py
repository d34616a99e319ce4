import pytest
from hypothesis import given
from hypothesis import strategies as st

from galoisweyl.groups import GroupDescriptor, GroupElement
from galoisweyl.invariants import (
    SupportSet, eigen_decompose, gamma_generators, invariant_generator_supports,
    is_invariant, jacobian_determinant, monoid_generates, reynolds, weyl_generator_supports,
)
from galoisweyl.ratfunc import VariableContext
from galoisweyl.scalars import ScalarField
from galoisweyl.weyl import WeylAlgebra

from conftest import weyl_elements

A1 = WeylAlgebra(1)
A2 = WeylAlgebra(2)
S2 = GroupDescriptor("S", 2)
G2 = GroupDescriptor("cyclic", 1, 2)


def supp(*vs):
    return SupportSet(len(vs[0]), frozenset(vs))


def test_reynolds_examples():
    assert reynolds(S2, A2.x(1)) == (A2.x(1) + A2.x(2)) * A2.field(1) / 2
    assert reynolds(G2, A1.x(1)) == A1.zero
    assert reynolds(G2, A1.x(1) ** 2) == A1.x(1) ** 2


def test_invariance_examples():
    res = is_invariant(S2, A2.x(1))
    assert not res and res.witness.perm == (1, 0)
    assert is_invariant(GroupDescriptor.G(2, 2, 2), A2.x(1) * A2.x(2))
    for m, n in ((2, 2), (3, 2), (4, 1)):
        A = WeylAlgebra(n, field=ScalarField(m if m > 2 else 1))
        delta = sum((A.d(i) ** m for i in range(1, n + 1)), A.zero)
        assert is_invariant(GroupDescriptor.G(m, 1, n), delta)


@given(weyl_elements(A2))
def test_reynolds_is_a_projection(a):
    D = GroupDescriptor.G(2, 1, 2)
    r = reynolds(D, a)
    assert is_invariant(D, r)
    assert reynolds(D, r) == r


@given(weyl_elements(WeylAlgebra(2, localized=True), max_terms=3))
def test_torus_reynolds(a):
    for kind in ("B-torus", "D-torus"):
        D = GroupDescriptor(kind, 2)
        r = reynolds(D, a)
        assert is_invariant(D, r)
        assert reynolds(D, r) == r


def test_monoid_examples():
    assert monoid_generates(supp((1, 0), (-1, 0), (0, 1), (0, -1))).verdict == "yes"
    v = monoid_generates(supp((1, 0), (0, 1)))
    assert v.verdict == "no" and v.certificate["functional"]
    v = monoid_generates(supp((1, 1), (-1, 0), (0, -1)))
    assert v.verdict == "yes"
    assert v.witnesses[(1, 0)]
    v = monoid_generates(supp((2, 0), (-2, 0), (0, 1), (0, -1)))
    assert v.verdict == "no" and v.certificate["subgroup_index"] == 2


def test_cone_certificate_beyond_search_bound():
    # needs 7 steps to reach -e_1; with bound 2 the exact cone test answers
    v = monoid_generates(supp((1, 0), (0, 1), (-7, -7)), bound=2)
    assert v.verdict == "yes"
    assert "positive_relation" in v.certificate


def test_generator_supports():
    for n in range(1, 5):
        assert weyl_generator_supports(n).vectors == frozenset(
            tuple(s * int(i == j) for j in range(n)) for i in range(n) for s in (1, -1))
        for m in range(1, 5):
            assert monoid_generates(invariant_generator_supports(m, n)).verdict == "yes"


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5))
def test_verdict_certificates_are_sound(vs):
    v = monoid_generates(SupportSet(2, frozenset(vs)))
    if v.verdict == "no" and "functional" in v.certificate:
        c = [float(x) if not isinstance(x, str) else float(eval(x)) for x in v.certificate["functional"]]
        assert all(c[0] * a + c[1] * b >= 0 for a, b in vs)
    if v.verdict == "yes":
        for target, comb in v.witnesses.items():
            total = [0, 0]
            for w in comb:
                total = [total[0] + w[0], total[1] + w[1]]
            assert tuple(total) == target


def test_gamma_generators():
    T = VariableContext(("t1", "t2"))
    t1, t2 = T.gens()
    assert gamma_generators(S2, T) == [t1 + t2, t1 * t2]
    assert gamma_generators(GroupDescriptor.G(3, 1, 2), T) == [t1 + t2, t1 * t2]
    b2 = gamma_generators(GroupDescriptor("B-torus", 2), T)
    assert b2 == [(1 - t1) ** 2 + (1 - t2) ** 2, (1 - t1) ** 2 * (1 - t2) ** 2]


@pytest.mark.parametrize("desc", [GroupDescriptor("S", 3), GroupDescriptor("A", 3),
                                  GroupDescriptor.G(2, 2, 3), GroupDescriptor("B-torus", 3),
                                  GroupDescriptor("D-torus", 3), GroupDescriptor("cyclic", 3, 2)])
def test_gamma_independent(desc):
    T = VariableContext(("t1", "t2", "t3"))
    gens = gamma_generators(desc, T)
    assert jacobian_determinant(gens[:3], T) != T.zero


H10 = GroupElement((1, 0), (0, 1))


def test_decomposition_of_product():
    res = eigen_decompose(2, 2, 2, H10, A2.x(1) * A2.x(2))
    assert res.components == [A2.zero, A2.x(1) * A2.x(2)]
    assert str(res.epsilon) == "-1"
    assert str(res.quotients[1]) == "1"
    assert res.passed


def test_decomposition_of_square_sum():
    a = A2.x(1) ** 2 + A2.x(2) ** 2
    res = eigen_decompose(2, 2, 2, H10, a)
    assert res.components == [a, A2.zero]
    assert res.passed


def test_trivial_quotient():
    a = A2.x(1) + A2.x(2)
    res = eigen_decompose(1, 1, 2, GroupElement((0, 0), (0, 1)), a)
    assert res.components == [a]


def test_membership_counterexample():
    # d1 d2 is G(2,2,2)-invariant and an h-eigenvector, but has no x-factor to divide out
    a = A2.d(1) * A2.d(2)
    res = eigen_decompose(2, 2, 2, H10, a)
    assert res.sums_to_input and all(res.eigen_identities)
    assert res.components[1] == a
    assert res.polynomial == [True, False]
    assert res.localized_invariance == [True, True]
    assert res.decomposition_holds and not res.passed


def test_decompose_rejects_non_invariant():
    with pytest.raises(ValueError):
        eigen_decompose(2, 2, 2, H10, A2.x(1))
