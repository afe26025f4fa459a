"""Field axioms, scalar grammar round trips and Gauss sums."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qkirby.cyclotomic import (
    Cyc,
    ScalarParseError,
    context,
    named_constants,
    parse,
    render,
)

CTX = context(16)


def scalars(ctx=CTX):
    coeff = st.integers(min_value=-9, max_value=9)
    den = st.integers(min_value=1, max_value=6)
    return st.builds(
        lambda cs, d: ctx.from_coeffs([Fraction(c, d) for c in cs]),
        st.lists(coeff, min_size=1, max_size=ctx.degree),
        den)


@settings(max_examples=1000, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    zero = CTX.zero
    one = CTX.one
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a
    assert a * one == a
    assert a - a == zero
    if not a.is_zero():
        assert a * a.inverse() == one
        assert (a / a) == one


@settings(max_examples=300, deadline=None)
@given(scalars())
def test_render_parse_round_trip(a):
    assert parse(render(a)) == a


def test_parse_rejects_garbage():
    for bad in ("", "z^", "spam", "(1 + z [N=16]"):
        with pytest.raises(ScalarParseError):
            parse(bad)
    with pytest.raises(ValueError):
        parse("1 [N=0]")


def test_zeta_order():
    z = CTX.zeta_power(1)
    assert z ** 16 == CTX.one
    assert z ** 8 == -CTX.one


def test_named_constants_squares():
    for p in (2, 3, 4, 5):
        c = named_constants(p)
        assert c.sqrt_p * c.sqrt_p == c.ctx.from_rational(p)
        assert c.sqrt2 * c.sqrt2 == c.ctx.from_rational(2)
        assert c.sqrt_2p == c.sqrt_p * c.sqrt2
        assert c.i * c.i == -c.ctx.one
        assert c.t ** (4 * p) == c.ctx.one
        assert c.t ** (2 * p) == -c.ctx.one
        assert c.q == c.t * c.t


def test_embedding_positivity():
    # the exact square roots match the positive real roots numerically
    for p in (2, 3, 4):
        c = named_constants(p)
        z = c.sqrt_p.to_complex()
        assert abs(z.imag) < 1e-12 and z.real > 0


@pytest.mark.parametrize("p", [2, 3, 4, 5, 6])
def test_gauss_sums_closed_form(p):
    c = named_constants(p)
    pre = {1: 2 * c.sqrt_p * (1 + c.i), -1: 2 * c.sqrt_p * (1 - c.i)}
    for sign in (1, -1):
        for d in range(4 * p):
            val = c.gauss_sum(sign, d)
            if d % 2:
                assert val.is_zero(), (p, sign, d)
            else:
                want = pre[sign] * c.t ** (-sign * (d * d // 4))
                assert val == want, (p, sign, d)
