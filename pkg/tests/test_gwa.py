import pytest
import sympy
from hypothesis import given

from galoisweyl.gwa import (
    ALPHA_NOTE, WORONOWICZ_NOTE, GwaAlgebra, NotInBaseRingError, cyclic_invariant,
    gwa_check_axioms, gwa_embed, gwa_from_invariants, gwa_instance, gwa_tensor, pull_back,
    trivial_gwa, uqsl2, witten1, woronowicz,
)
from galoisweyl.ratfunc import FieldAutomorphism, VariableContext
from galoisweyl.weyl import WeylAlgebra

from conftest import gwa_elements
from oracles import sympy_equal, to_sympy

SYMS = {n: sympy.Symbol(n) for n in ("q", "c", "h", "p", "C", "H", "s", "Z", "H1", "H2")}


def test_cyclic_invariant_m1_is_a1():
    A = cyclic_invariant(1, 1)
    H = A.base.var("H1")
    assert A.a[0] == H
    assert A.sigma[0](H) == H - 1
    assert not A.notes


@pytest.mark.parametrize("m,expected", [
    (2, "4*H1^2 + 2*H1"),            # t(t+1) at t = 2H
    (3, "27*H1^3 + 27*H1^2 + 6*H1"),  # t(t+1)(t+2) at t = 3H
])
def test_cyclic_invariant_a(m, expected):
    A = cyclic_invariant(m, 1)
    assert str(A.a[0]) == expected
    assert A.notes and "differs in sign" in A.notes[0]


def test_printed_cyclic_formula_differs():
    cert = gwa_from_invariants(2, 1)
    assert cert.passed
    assert cert.a_printed == ["4*H1^2 - 2*H1"]
    assert not cert.printed_matches


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2)])
def test_invariant_certificate(m, n):
    cert = gwa_from_invariants(m, n)
    assert cert.passed, cert.failures
    assert cert.pairs_checked == (3 * n) ** 2


def test_pull_back_of_generators():
    W = WeylAlgebra(1)
    A = cyclic_invariant(2, 1)
    assert pull_back(A.Xm(1), W, 2) == W.d(1) ** 2
    assert pull_back(A.Xp(1) * A.Xm(1), W, 2) == W.x(1) ** 2 * W.d(1) ** 2


def test_relations():
    for A in (cyclic_invariant(2, 1), uqsl2(), witten1(), woronowicz()):
        a = A.a[0]
        assert A.Xm(1) * A.Xp(1) == A(a)
        assert A.Xp(1) * A.Xm(1) == A(A.sigma[0](a))
        d = A.var(A.base.names[0])
        assert A.Xp(1) * d == A(A.sigma[0](A.base.var(A.base.names[0]))) * A.Xp(1)


def test_embedding_of_generators():
    A = cyclic_invariant(2, 1)
    S = A.skew_context()
    assert gwa_embed(A.Xp(1)) == S.e(1)
    assert gwa_embed(A.Xm(1)) == S.coeff(A.a[0]) * S.e(-1)
    assert gwa_embed(A.Xm(1) * A.Xp(1)) == S.coeff(A.a[0])


def test_uqsl2_data():
    A = uqsl2()
    q = sympy.Symbol("q")
    c, h = sympy.symbols("c h")
    a = c + (h ** 2 / (q ** 2 - 1) - h ** -2 / (q ** -2 - 1)) / (q - 1 / q)
    sa = c + (q ** 2 * h ** 2 / (q ** 2 - 1) - q ** -2 * h ** -2 / (q ** -2 - 1)) / (q - 1 / q)
    assert sympy_equal(to_sympy(A.a[0], SYMS), a)
    assert sympy_equal(to_sympy(A.sigma[0](A.a[0]), SYMS), sa)
    assert A.sigma[0](A.base.var("c")) == A.base.var("c")
    # golden output
    assert str(A.Xp(1) * A.Xm(1)) == (
        "((q^3/(q^4 - 2*q^2 + 1))*h^4 + c*h^2 + (q/(q^4 - 2*q^2 + 1)))/h^2")


def test_witten_shift():
    A = witten1()
    p, H = sympy.symbols("p H")
    s2 = A.sigma[0].power(2)(A.base.var("H"))
    assert sympy_equal(to_sympy(s2, SYMS), p ** 2 * (p ** 2 * (H - 1) - 1))
    C = sympy.Symbol("C")
    assert sympy_equal(to_sympy(A.a[0], SYMS), C - H * (H - 1) / (p + 1 / p))


def test_woronowicz_variants():
    s, H, Z = sympy.symbols("s H Z")
    A = woronowicz()
    alpha = -1 / (s * (1 - s ** 2))
    beta = s / (1 - s ** 4)
    assert sympy_equal(to_sympy(A.a[0], SYMS), Z + alpha * H + beta)
    assert WORONOWICZ_NOTE in A.notes and ALPHA_NOTE in A.notes
    assert gwa_check_axioms(A).passed
    printed = gwa_check_axioms(woronowicz("printed"))
    assert not printed.check("sigma_invertible").passed
    assert printed.check("relations_via_embedding").passed
    with pytest.raises(ValueError):
        woronowicz("other")


@pytest.mark.parametrize("build", [lambda: cyclic_invariant(2, 1), uqsl2, witten1,
                                   woronowicz, lambda: cyclic_invariant(3, 2)])
def test_axioms_pass(build):
    rep = gwa_check_axioms(build())
    assert rep.passed, rep.to_json()


def test_dependent_shifts_detected():
    ctx = VariableContext(("H",))
    H = ctx.var("H")
    s = FieldAutomorphism.from_dict(ctx, {"H": H - 1}, {"H": H + 1})
    A = GwaAlgebra(ctx, [H, H], [s, s], "bad")
    chk = gwa_check_axioms(A).check("sigma_linearly_independent")
    assert not chk.passed
    assert tuple(chk.witness) == (1, -1)


def test_tensor_products():
    A = gwa_tensor(cyclic_invariant(2, 1), cyclic_invariant(2, 1))
    assert str(A.base) == "Q[H1, H2]"
    assert gwa_check_axioms(A).passed
    B = gwa_tensor(uqsl2(), cyclic_invariant(2, 1))
    assert B.base.names == ("c", "h", "H1") and B.n == 2
    assert gwa_check_axioms(B).passed
    C = gwa_tensor(uqsl2(), trivial_gwa())
    assert C.n == 1 and C.a[0] == uqsl2().a[0]


def test_catalog_lookup():
    assert gwa_instance("cyclic_invariant", m=2, n=2).n == 2
    with pytest.raises(KeyError):
        gwa_instance("nope")
    with pytest.raises(ValueError):
        gwa_instance("uqsl2", m=3)


def test_coefficients_stay_in_base_ring():
    A = uqsl2()
    with pytest.raises(NotInBaseRingError):
        A(1 / (A.base.var("h") + 1))


A22 = cyclic_invariant(2, 2)
UQ = uqsl2()


@given(gwa_elements(A22), gwa_elements(A22))
def test_product_matches_skew_oracle(u, v):
    assert gwa_embed(u * v) == gwa_embed(u) * gwa_embed(v)


@given(gwa_elements(A22), gwa_elements(A22), gwa_elements(A22))
def test_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(gwa_elements(UQ, norm=1), gwa_elements(UQ, norm=1))
def test_uqsl2_matches_skew_oracle(u, v):
    assert gwa_embed(u * v) == gwa_embed(u) * gwa_embed(v)


@given(gwa_elements(A22))
def test_pull_back_is_multiplicative(u):
    W = WeylAlgebra(2)
    v = A22.Xm(1) * A22.Xp(2) + A22.var("H1")
    assert pull_back(u * v, W, 2) == pull_back(u, W, 2) * pull_back(v, W, 2)
