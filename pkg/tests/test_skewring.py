from hypothesis import given

from galoisweyl.groups import GroupDescriptor, induced_action
from galoisweyl.skewring import SkewElement, weyl_skew_context

from conftest import skew_elements

S2 = weyl_skew_context(2)
S1 = weyl_skew_context(1)


def t(ctx, i):
    return ctx.coeff(ctx.base.var(f"t{i}"))


def test_shift_past_coefficient():
    # e_1 t_1 = (t_1 - 1) e_1
    assert S1.e(1) * t(S1, 1) == (t(S1, 1) - 1) * S1.e(1)
    assert str(S1.e(1) * t(S1, 1)) == "(t1 - 1)*E(1)"


def test_cancelling_exponents():
    assert (t(S1, 1) * S1.e(-1)) * S1.e(1) == t(S1, 1)


def test_support():
    assert S1.zero.support() == frozenset()
    assert (t(S1, 1) * S1.e(-1)).support() == {(-1,)}


def test_json_roundtrip():
    a = t(S2, 1) * S2.e(1, -2) + S2.e(0, 1) * 3
    assert SkewElement.from_json(S2, a.to_json()) == a


def test_lattice_inverse():
    e = S2.e(2, -1)
    assert e * e.inverse() == S2.one


@given(skew_elements(S2), skew_elements(S2), skew_elements(S2))
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(skew_elements(S2), skew_elements(S2), skew_elements(S2))
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(skew_elements(S2))
def test_unit(a):
    assert a * S2.one == a == S2.one * a


def test_transposition_action():
    act = induced_action(GroupDescriptor("S", 2), "skew", context=S2)
    swap = next(el for el in act.elements if el.label.perm == (1, 0))
    assert act.act(swap, t(S2, 1) * S2.e(1, 0)) == t(S2, 2) * S2.e(0, 1)


def test_torus_flip_on_skew_side():
    act = induced_action(GroupDescriptor("B-torus", 1), "skew", context=S1)
    flip = next(el for el in act.elements if el.label.exponents == (1,))
    assert act.act(flip, t(S1, 1)) == 2 - t(S1, 1)
    assert flip.apply_vector((1,)) == (-1,)
    assert act.check_compatibility(flip) is None


@given(skew_elements(S2), skew_elements(S2))
def test_group_acts_by_ring_automorphisms(a, b):
    act = induced_action(GroupDescriptor.G(2, 1, 2), "skew", context=S2)
    for g in act.elements[::3]:
        assert act.act(g, a * b) == act.act(g, a) * act.act(g, b)
