import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from galoisweyl.gwa import cyclic_invariant, uqsl2
from galoisweyl.parser import (
    EvalError, ExprError, LexError, ParseError, evaluate, parse, to_text,
)
from galoisweyl.scalars import ScalarField
from galoisweyl.skewring import weyl_skew_context
from galoisweyl.suites import mutate, roundtrip_contexts
from galoisweyl.weyl import WeylAlgebra

from conftest import gwa_elements, skew_elements, weyl_elements

A2 = WeylAlgebra(2)
L2 = WeylAlgebra(2, localized=True)


def test_weyl_expressions():
    assert evaluate("d1*x1 - x1*d1", A2) == A2.one
    assert evaluate("d1*x1", A2) == A2.x(1) * A2.d(1) + 1
    assert evaluate("(x1 + d2)^2", A2) == A2.x(1) ** 2 + 2 * A2.x(1) * A2.d(2) + A2.d(2) ** 2
    assert evaluate("x1^-1", L2) == L2.xinv(1)
    assert evaluate("X1*x1", L2) == L2.one


def test_gwa_expressions():
    A = cyclic_invariant(1, 1)
    assert evaluate("Xm1*Xp1", A) == A(A.a[0])
    assert evaluate("Xp1*Xm1", A) == A(A.sigma[0](A.a[0]))


def test_skew_lattice_atoms():
    S = weyl_skew_context(2)
    assert evaluate("t1*E(1,-2)", S) == S.coeff(S.base.var("t1")) * S.e(1, -2)


def test_scalar_names():
    F = ScalarField(3, ("q",))
    assert evaluate("zeta^3", F) == F.one
    assert evaluate("q/q", F) == F.one


@pytest.mark.parametrize("text,ctx,cls,pos", [
    ("x1 + ", A2, ParseError, 5),
    ("x1 $ d1", A2, LexError, 3),
    ("x3", A2, EvalError, 0),
    ("x1 * y1", A2, EvalError, 5),
    ("2 + (x1", A2, ParseError, 7),
    ("x1^", A2, ParseError, 3),
    ("E(1,0)", A2, EvalError, 0),
    ("1/0", ScalarField(1), EvalError, 1),
])
def test_error_positions(text, ctx, cls, pos):
    with pytest.raises(cls) as info:
        evaluate(text, ctx)
    assert info.value.position == pos


def test_negative_exponent_needs_localization():
    with pytest.raises(EvalError, match="negative exponent requires localized algebra"):
        evaluate("x1^-1", A2)
    with pytest.raises(EvalError, match="negative exponent requires localized algebra"):
        evaluate("X1", A2)


def test_compound_exponent_cap():
    with pytest.raises(EvalError):
        evaluate("(x1+1)^9", A2)
    assert evaluate("x1^20", A2) == A2.x(1) ** 20


def test_parse_is_pure_syntax():
    tree = parse("x1*d1 + 3")
    assert evaluate(tree, A2) == evaluate("x1*d1 + 3", A2)


@given(weyl_elements(A2))
def test_weyl_roundtrip(a):
    assert evaluate(to_text(a), A2) == a


@given(weyl_elements(L2))
def test_localized_roundtrip(a):
    assert evaluate(to_text(a), L2) == a


S2 = weyl_skew_context(2)


@given(skew_elements(S2))
def test_skew_roundtrip(a):
    assert evaluate(to_text(a), S2) == a


UQ = uqsl2()


@given(gwa_elements(UQ, norm=2))
def test_gwa_roundtrip(a):
    assert evaluate(to_text(a), UQ) == a


@pytest.mark.parametrize("label,ctx,sample", roundtrip_contexts(), ids=lambda v: v if isinstance(v, str) else "")
def test_sampled_roundtrips(label, ctx, sample):
    rng = random.Random(label)
    for _ in range(10):
        e = sample(rng)
        assert evaluate(str(e), ctx) == e


@given(st.text(alphabet="0123456789+-*/^() x1d2Xt", max_size=30))
def test_arbitrary_text_never_crashes(text):
    try:
        evaluate(text, L2)
    except ExprError:
        pass


def test_mutations_never_crash():
    rng = random.Random(3)
    for label, ctx, sample in roundtrip_contexts():
        text = str(sample(rng))
        for _ in range(30):
            try:
                evaluate(mutate(text, rng), ctx)
            except ExprError:
                pass
