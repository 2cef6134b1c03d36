"""Exactness and normal-ordering tests for the operator core.

The hand-derived reorderings below are frozen oracles: they were computed
independently with the falling-factorial identity and must never be edited
to match the implementation.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swalg.opalg import (
    Operator,
    ParamPoly,
    act_on_monomial,
    anticommutator,
    commutator,
    parse_operator,
    poly_from_str,
    poly_to_str,
    ring_names,
    serialize_operator,
    substitute_params,
)


def x(n, i, p=1):
    return Operator.coordinate(n, i, p)


def D(n, i, order=1):
    return Operator.derivative(n, i, order)


# ---------------------------------------------------------------------------
# frozen reordering oracles
# ---------------------------------------------------------------------------

def test_reorder_d2_through_inverse_square():
    # D^2 x^-2 = x^-2 D^2 - 4 x^-3 D + 6 x^-4, derived by hand from the
    # product rule applied twice.
    got = D(1, 1, 2) * x(1, 1, -2)
    want = (Operator.monomial(1, (-2,), (2,))
            + Operator.monomial(1, (-3,), (1,), -4)
            + Operator.monomial(1, (-4,), (0,), 6))
    assert got == want


def test_reorder_mixed_rotation_product():
    # (x1 D2)(x2 D1) = x1 x2 D1 D2 + x1 D1: the single cross term comes from
    # D2 acting on x2.
    got = (x(2, 1) * D(2, 2)) * (x(2, 2) * D(2, 1))
    want = (Operator.monomial(2, (1, 1), (1, 1))
            + Operator.monomial(2, (1, 0), (1, 0)))
    assert got == want


def test_reorder_positive_power_truncates():
    # D^3 x = x D^3 + 3 D^2: falling factorials kill k >= 2.
    got = D(1, 1, 3) * x(1, 1)
    want = (Operator.monomial(1, (1,), (3,))
            + Operator.monomial(1, (0,), (2,), 3))
    assert got == want


def test_param_product_expansion():
    names = ring_names(2)
    p = 8 * ParamPoly.variable(names, "a1") - 3
    q = 8 * ParamPoly.variable(names, "a2") - 3
    want = (64 * ParamPoly.variable(names, "a1") * ParamPoly.variable(names, "a2")
            - 24 * ParamPoly.variable(names, "a1")
            - 24 * ParamPoly.variable(names, "a2")
            + ParamPoly.constant(names, 9))
    assert p * q == want


def test_canonical_commutator():
    # [D, x] = 1 in one coordinate.
    got = commutator(D(1, 1), x(1, 1))
    assert got == Operator.identity(1)


# ---------------------------------------------------------------------------
# independent action oracle
# ---------------------------------------------------------------------------

def _act(op, alpha):
    return {k: v for k, v in act_on_monomial(op, alpha).items()}


def _compose_via_action(a, b, alpha):
    """Apply b then a, term by term, using only the direct action."""
    names = a.names
    out = {}
    for beta, poly in act_on_monomial(b, alpha).items():
        for gamma, poly2 in act_on_monomial(a, beta).items():
            cur = out.get(gamma, ParamPoly.zero(names))
            out[gamma] = cur + poly * poly2
    return {k: v for k, v in out.items() if not v.is_zero}


def test_action_on_monomial_matches_calculus():
    op = D(1, 1, 2) * x(1, 1, -2)
    # (D^2 x^-2)(x^5) = d^2/dx^2 x^3 = 6x
    res = _act(op, (5,))
    assert res == {(1,): ParamPoly.constant(ring_names(1), 6)}


@st.composite
def small_operator(draw, n=2, max_terms=3):
    names = ring_names(n)
    nterms = draw(st.integers(1, max_terms))
    op = Operator.zero(n)
    for _ in range(nterms):
        e = tuple(draw(st.integers(-2, 2)) for _ in range(n))
        d = tuple(draw(st.integers(0, 2)) for _ in range(n))
        num = draw(st.integers(-4, 4))
        den = draw(st.integers(1, 3))
        pexp = tuple(draw(st.integers(0, 1)) for _ in range(n + 1))
        poly = ParamPoly(names, {pexp: Fraction(num, den)})
        op = op + Operator.monomial(n, e, d, poly)
    return op


@settings(max_examples=60, deadline=None)
@given(small_operator(), small_operator(),
       st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_product_agrees_with_composed_action(a, b, alpha):
    # The defining property of the operator product: acting with a*b equals
    # acting with b, then a. The right side never calls the reordering code.
    assert _act(a * b, alpha) == _compose_via_action(a, b, alpha)


@settings(max_examples=40, deadline=None)
@given(small_operator(), small_operator(), small_operator())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(small_operator(), small_operator(), small_operator())
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=30, deadline=None)
@given(small_operator(), small_operator(), small_operator())
def test_jacobi_identity(a, b, c):
    total = (commutator(commutator(a, b), c)
             + commutator(commutator(b, c), a)
             + commutator(commutator(c, a), b))
    assert total.is_zero


@settings(max_examples=40, deadline=None)
@given(small_operator(), small_operator())
def test_commutator_antisymmetry(a, b):
    assert commutator(a, b) == -commutator(b, a)
    assert anticommutator(a, b) == anticommutator(b, a)


@settings(max_examples=40, deadline=None)
@given(small_operator(), small_operator())
def test_deriv_order_bookkeeping(a, b):
    prod = a * b
    if not prod.is_zero:
        assert prod.max_deriv_order() <= a.max_deriv_order() + b.max_deriv_order()


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(small_operator())
def test_serialize_roundtrip(op):
    assert parse_operator(serialize_operator(op), 2) == op


def test_serialize_is_canonical():
    a = x(2, 1) * D(2, 2) + D(2, 1, 2)
    b = D(2, 1, 2) + x(2, 1) * D(2, 2)
    assert serialize_operator(a) == serialize_operator(b)
    # derivative-dominant ordering: the D^2 term comes first
    assert serialize_operator(a).splitlines()[0] == "1 | 0 0 | 2 0"


def test_poly_str_roundtrip():
    names = ring_names(3)
    p = ParamPoly(names, {
        (1, 0, 0, 2): Fraction(-8),
        (0, 0, 0, 1): Fraction(3, 2),
        (0, 0, 0, 0): Fraction(-1),
        (0, 1, 0, 0): Fraction(1),
    })
    s = poly_to_str(p)
    assert poly_from_str(s, names) == p
    assert "a1" in s and "s^2" in s
    assert "+ -" not in s


def test_zero_operator_serializes_empty():
    z = Operator.zero(2)
    assert serialize_operator(z) == ""
    assert parse_operator("", 2) == z


# ---------------------------------------------------------------------------
# substitution
# ---------------------------------------------------------------------------

def test_substitute_params_exact():
    n = 2
    op = Operator.monomial(
        n, (0, 0), (0, 0),
        ParamPoly(ring_names(n), {(1, 0, 0): Fraction(8), (0, 0, 2): Fraction(1)}))
    sub = substitute_params(op, {"a1": Fraction(1, 4), "a2": 0, "s": 3})
    assert sub == Operator.identity(n, Fraction(11))


def test_substitute_params_rejects_partial():
    op = Operator.identity(2)
    with pytest.raises(ValueError):
        substitute_params(op, {"a1": 1})
    with pytest.raises(ValueError):
        substitute_params(op, {"a1": 1, "a2": 1, "s": 1, "bogus": 2})


def test_monomial_rejects_negative_derivative():
    with pytest.raises(ValueError):
        Operator.monomial(2, (0, 0), (-1, 0))
