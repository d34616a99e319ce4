from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from galoisweyl.groups import (
    GroupDescriptor, GroupElement, MembershipError, WeylGroupAction, element_order,
    group_enumerate, group_inverse, group_mul, induced_action, parse_element, quotient_image,
)
from galoisweyl.scalars import ScalarField
from galoisweyl.weyl import WeylAlgebra, weyl_embed

G212 = GroupDescriptor.G(2, 1, 2)


def el(exps, perm=None):
    return GroupElement(exps, perm if perm is not None else tuple(range(len(exps))))


def test_products():
    assert group_mul(G212, el((1, 0)), el((0, 1))) == el((1, 1))
    assert group_mul(G212, el((1, 0), (1, 0)), el((1, 0))) == el((1, 1), (1, 0))


@pytest.mark.parametrize("m,p,n,order", [(2, 1, 2, 8), (1, 1, 3, 6), (2, 2, 2, 4), (4, 2, 2, 16)])
def test_small_orders(m, p, n, order):
    assert len(group_enumerate(GroupDescriptor.G(m, p, n))) == order


def test_order_formula():
    for m in range(1, 5):
        for p in (d for d in range(1, m + 1) if m % d == 0):
            for n in range(1, 4):
                desc = GroupDescriptor.G(m, p, n)
                assert len(group_enumerate(desc)) == m ** n * factorial(n) // p == desc.order()


def test_other_kinds():
    assert len(group_enumerate(GroupDescriptor("A", 3))) == 3
    assert len(group_enumerate(GroupDescriptor("cyclic", 2, 3))) == 9
    assert len(group_enumerate(GroupDescriptor("B-torus", 2))) == 8
    assert len(group_enumerate(GroupDescriptor("D-torus", 3))) == 24


def test_quotient_examples():
    assert quotient_image(el((1, 1)), 2, 2) == 0
    assert quotient_image(el((1, 0), (1, 0)), 2, 2) == 1
    assert quotient_image(GroupElement.identity(3), 4, 2) == 0


def test_parse_and_print():
    g = el((1, 0, 3), (1, 2, 0))
    assert str(g) == "[1,0,3; (1 2 3)]"
    assert parse_element(str(g)) == g
    assert str(GroupElement.identity(2)) == "[0,0; ()]"
    with pytest.raises(ValueError):
        parse_element("[1,0 (1 2)]")


def test_membership():
    with pytest.raises(MembershipError):
        GroupDescriptor.G(2, 2, 2).check(el((1, 0)))
    with pytest.raises(ValueError):
        GroupDescriptor.G(4, 3, 2)


elements_g412 = st.sampled_from(group_enumerate(GroupDescriptor.G(4, 1, 2)))


@given(elements_g412, elements_g412, elements_g412)
def test_group_axioms(g, h, k):
    D = GroupDescriptor.G(4, 1, 2)
    assert group_mul(D, group_mul(D, g, h), k) == group_mul(D, g, group_mul(D, h, k))
    assert group_mul(D, g, group_inverse(D, g)) == D.identity()
    assert (quotient_image(group_mul(D, g, h), 4, 2)
            == (quotient_image(g, 4, 2) + quotient_image(h, 4, 2)) % 2)
    assert 4 * 2 % element_order(D, g) == 0


def test_cyclic_action_signs():
    A = WeylAlgebra(1)
    act = WeylGroupAction(GroupDescriptor("cyclic", 1, 2), A)
    g = el((1,))
    assert act.act(g, A.x(1)) == -A.x(1)
    assert act.act(g, A.d(1)) == -A.d(1)


def test_transposition_on_weyl():
    A = WeylAlgebra(2)
    act = WeylGroupAction(GroupDescriptor("S", 2), A)
    assert act.act(el((0, 0), (1, 0)), A.x(1) * A.d(2)) == A.x(2) * A.d(1)


def test_torus_conventions():
    L = WeylAlgebra(1, localized=True)
    for kind, sign in (("B-torus", 1), ("D-torus", -1)):
        eps = WeylGroupAction(GroupDescriptor(kind, 1), L).epsilon(1)
        assert eps(L.t(1)) == 2 - L.t(1)
        assert eps(L.d(1)) == L.x(1) ** 2 * L.d(1) * sign
        assert eps(L.x(1)) == L.xinv(1) * (-sign)
        assert eps.compose(eps).is_identity()


@given(elements_g412)
def test_skew_and_weyl_actions_agree(g):
    F = ScalarField(4)
    A = WeylAlgebra(2, field=F)
    weyl = induced_action(GroupDescriptor.G(4, 1, 2), "weyl", algebra=A)
    skew = induced_action(GroupDescriptor.G(4, 1, 2), "skew", algebra=A)
    sk = next(e for e in skew.elements if e.label == g)
    for gen in (A.x(1), A.x(2), A.d(1), A.d(2)):
        assert weyl_embed(weyl.act(g, gen)) == skew.act(sk, weyl_embed(gen))


def test_skew_action_closed():
    act = induced_action(GroupDescriptor.G(2, 2, 2), "skew")
    assert act.is_closed()
    assert act.verify()
