"""Quantum-group structure data: closed forms against brute-force oracles."""

import pytest

from qkirby.cyclotomic import named_constants
from qkirby.sl2 import (
    RESTRICTED,
    SMALL,
    TILDE,
    ParityUnsupported,
    VariantMismatch,
    lift_to_tilde,
    project_from_tilde,
    quantum_group,
)


def test_pbw_relations():
    for p in (2, 3):
        for variant in (RESTRICTED, TILDE, SMALL):
            u = quantum_group(p, variant)
            e, f, k = u.gen_e(), u.gen_f(), u.gen_k()
            # the Cartan generator of the extension is a square root of K
            step = 2 if variant == TILDE else 1
            conj = u.qpow(2) if step == 1 else u.qpow(1)
            assert k * e == (e * k).scale(conj), (p, variant)
            assert k * f == (f * k).scale(conj.inverse()), (p, variant)
            # [E, F] = (K - K^-1) / (q - q^-1)
            comm = e * f - f * e
            kk = u.gen_k(step) - u.gen_k(-step)
            want = kk.scale((u.qpow(1) - u.qpow(-1)).inverse())
            assert comm == want, (p, variant)
            # nilpotency and Cartan order
            assert (e ** p).is_zero()
            assert (f ** p).is_zero()
            assert u.gen_k(u.cartan_order) == u.unit()


def test_hopf_structure_on_generators():
    for p in (2, 3):
        for variant in (RESTRICTED, TILDE, SMALL):
            u = quantum_group(p, variant)
            e, k = u.gen_e(), u.gen_k()
            # grouplike Cartan generator
            assert u.coproduct(k) == u.outer(k, k)
            assert u.antipode(k) * k == u.unit()
            assert u.counit(k) == u.ctx.one
            assert u.counit(e).is_zero()
            # antipode squared is conjugation by the pivotal element
            g = u.pivotal()
            ginv = u.pivotal_inverse()
            for m in list(u.basis())[: 4 * p]:
                x = u.element({m: u.ctx.one})
                assert u.antipode(u.antipode(x)) == g * x * ginv


@pytest.mark.parametrize("p", [2, 3, 4])
def test_ribbon_closed_form_vs_oracles(p):
    for variant in (TILDE, SMALL):
        u = quantum_group(p, variant)
        v_plus, v_minus = u.ribbon_elements()
        if not (variant == SMALL and p % 2):
            # v = u g^-1 with u the Drinfeld element S(R'')R'
            assert v_plus == u.drinfeld_element() * u.pivotal_inverse()
        assert v_minus == u.invert(v_plus), (p, variant)
        # v is central: it commutes with the generators
        for x in (u.gen_e(), u.gen_f(), u.gen_k()):
            assert v_plus * x == x * v_plus


@pytest.mark.parametrize("p", [2, 3, 4])
def test_monodromy_and_copairing_vs_oracles(p):
    for variant in (TILDE, SMALL):
        u = quantum_group(p, variant)
        m_plus, m_minus = u.m_matrix()
        assert m_plus == u.m_matrix_from_r(), (p, variant)
        assert m_plus * m_minus == u.tensor_unit(2), (p, variant)
        assert u.copairing() == u.copairing_from_m(m_plus), (p, variant)
        # R^-1 = (S x id)(R)
        rinv = u.r_matrix().apply_leg(0, u.antipode_monomial)
        assert u.r_matrix() * rinv == u.tensor_unit(2), (p, variant)


@pytest.mark.parametrize("p", [2, 4])
def test_graded_closed_forms(p):
    u = quantum_group(p, TILDE)
    v_plus, v_minus = u.ribbon_elements()
    one0, one1 = u.idempotents()
    idems = (one0, one1)
    graded = u.graded_ribbon()
    for sign, v in ((1, v_plus), (-1, v_minus)):
        for a in (0, 1):
            assert graded[(sign, a)] == v * idems[a], (p, sign, a)
    w = u.copairing()
    gw = u.graded_copairing()
    for a in (0, 1):
        for b in (0, 1):
            assert gw[(a, b)] == w * u.outer(idems[a], idems[b]), (p, a, b)


@pytest.mark.parametrize("p", [2, 4])
def test_lambda_v_table(p):
    u = quantum_group(p, RESTRICTED)
    lv = u.lambda_v_values()
    c = named_constants(p)
    if p % 4 == 0:
        hot = 1
        sign_factor = c.ctx.one
    else:
        hot = 0
        sign_factor = -c.ctx.one
    assert lv[(1, hot)] == sign_factor * ((1 - c.i) / c.sqrt2) * c.t ** 3
    assert lv[(-1, hot)] == sign_factor * ((1 + c.i) / c.sqrt2) * c.t ** (-3)
    assert lv[(1, hot)] * lv[(-1, hot)] == c.ctx.one
    cold = 1 - hot
    assert lv[(1, cold)].is_zero() and lv[(-1, cold)].is_zero()


def test_lambda_v_rejects_odd_p():
    with pytest.raises(ParityUnsupported):
        quantum_group(3, RESTRICTED).lambda_v_values()


def test_integral_and_cointegral_axioms():
    for p in (2, 3):
        for variant in (RESTRICTED, TILDE, SMALL):
            u = quantum_group(p, variant)
            lam = u.cointegral()
            # x Lambda = eps(x) Lambda on the generators
            for x in (u.gen_e(), u.gen_f(), u.gen_k()):
                assert x * lam == lam.scale(u.counit(x))
            # lambda(Lambda) = 1
            assert u.integral(lam) == u.ctx.one


def test_tilde_integral_restricts_exactly():
    for p in (2, 4):
        ur = quantum_group(p, RESTRICTED)
        ut = quantum_group(p, TILDE)
        for m in ur.basis():
            x = ur.element({m: ur.ctx.one})
            assert ut.integral(lift_to_tilde(x, ut)) == ur.integral(x)


def test_small_integral_normalization():
    # the small integral equals the restricted integral against the even
    # idempotent, with no correction factor
    for p in (2, 4):
        ur = quantum_group(p, RESTRICTED)
        us = quantum_group(p, SMALL)
        one0, _ = ur.idempotents()
        for m in us.basis():
            lhs = us.integral(us.element({m: us.ctx.one}))
            rhs = ur.integral(ur.element({m: ur.ctx.one}) * one0)
            assert lhs == rhs, (p, m)


def test_lift_project_round_trip():
    ur = quantum_group(2, RESTRICTED)
    ut = quantum_group(2, TILDE)
    for m in ur.basis():
        x = ur.element({m: ur.ctx.one})
        assert project_from_tilde(lift_to_tilde(x, ut), ur) == x
    with pytest.raises(ValueError):
        project_from_tilde(ut.monomial(0, 0, 1), ur)


def test_idempotents_split_the_unit():
    for p in (2, 4):
        for variant in (RESTRICTED, TILDE):
            u = quantum_group(p, variant)
            one0, one1 = u.idempotents()
            assert one0 + one1 == u.unit()
            assert one0 * one0 == one0
            assert one1 * one1 == one1
            assert (one0 * one1).is_zero()
    with pytest.raises(VariantMismatch):
        quantum_group(2, SMALL).idempotents()


def test_adjoint_action_of_diagonal_element():
    p = 2
    ur = quantum_group(p, RESTRICTED)
    ut = quantum_group(p, TILDE)
    diag = ut.diagonal_part()

    def lift(m):
        return lift_to_tilde(ur.element({m: ur.ctx.one}), ut)

    for m in ur.basis():
        x = lift(m)
        deg = m[0] - m[1]
        got = ut.tensor(2, {})
        for (m1, m2), c in diag.terms.items():
            acted = ut.adjoint_action(ut.element({m1: c}), x)
            got = got + ut.outer(acted, ut.element({m2: ut.ctx.one}))
        want = ut.outer(x, ut.monomial(0, 0, (2 * deg) % (4 * p)))
        assert got == want, m

    sample = [m for m in ur.basis() if m[2] == 0]
    for mx in sample:
        for my in sample:
            got = ut.tensor(2, {})
            for (m1, m2), c in diag.terms.items():
                ax = ut.adjoint_action(ut.element({m1: c}), lift(mx))
                ay = ut.adjoint_action(ut.element({m2: ut.ctx.one}),
                                       lift(my))
                got = got + ut.outer(ax, ay)
            phase = ur.qpow(2 * (mx[0] - mx[1]) * (my[0] - my[1]))
            assert got == ut.outer(lift(mx), lift(my)).scale(phase)


def test_copairing_contraction_gives_cointegral():
    for p in (2, 4):
        ur = quantum_group(p, RESTRICTED)
        ut = quantum_group(p, TILDE)
        for u in (ur, ut):
            w = u.copairing()
            contracted = w.contract_leg(
                1, lambda m: u.integral(u.element({m: u.ctx.one}))
            ).as_element()
            want = (u.cointegral() if u.variant == RESTRICTED
                    else lift_to_tilde(ur.cointegral(), ut))
            assert contracted == want, (p, u.variant)
            lam = u.cointegral()
            assert u.antipode(lam) == lam, (p, u.variant)
