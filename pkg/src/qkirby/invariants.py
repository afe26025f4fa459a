"""Orchestration layer: handlebody invariants and the verification suite.

Builds on the bead engine to expose the refined invariant J(W, omega) of a
labeled Kirby diagram, the non-refined sum over labelings, the normalized
boundary (3-manifold) invariants for spin structures (p = 0 mod 4) and
cohomology classes (p = 2 mod 4), and Report-producing checks for the
decomposition identities, the rescaling law and the whole identity corpus.
"""

import itertools

from . import beads
from . import corpus
from . import diagrams as dg
from . import hopf
from .cyclotomic import named_constants
from .sl2 import (
    RESTRICTED,
    SMALL,
    TILDE,
    AlgebraElement,
    ParityUnsupported,
    lift_to_tilde,
    quantum_group,
)

__all__ = [
    "StructureKindMismatch",
    "NotCharacteristic",
    "NotEven",
    "ZeroScale",
    "VerificationFailure",
    "Report",
    "valid_labelings",
    "invariant",
    "unrefined_paths",
    "boundary_invariant",
    "decomposition_check",
    "rescale_check",
    "stabilization_identity",
    "verify_suite",
]


class StructureKindMismatch(ValueError):
    """Spin structure at p = 2 mod 4, or cohomology class at p = 0 mod 4."""


class NotCharacteristic(ValueError):
    """The given sublink is not characteristic for the linking matrix."""


class NotEven(ValueError):
    """The given sublink is not even for the linking matrix."""


class ZeroScale(ValueError):
    """Rescaling by zero is not invertible."""


class VerificationFailure(ArithmeticError):
    """Two code paths that must agree produced different scalars."""


class Report:
    """A list of named exact checks with pass/fail status."""

    def __init__(self, title):
        self.title = title
        self.checks = []

    def record(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    @property
    def failures(self):
        return [c for c in self.checks if not c[1]]

    @property
    def ok(self):
        return not self.failures

    def merge(self, other):
        for name, ok, detail in other.checks:
            self.checks.append(("%s: %s" % (other.title, name), ok, detail))

    def summary(self):
        lines = ["%s: %d checks, %d failed"
                 % (self.title, len(self.checks), len(self.failures))]
        for name, ok, detail in self.checks:
            mark = "ok  " if ok else "FAIL"
            lines.append("  [%s] %s%s" % (mark, name,
                                          " -- " + detail if detail else ""))
        return "\n".join(lines)


# -- labelings and signature bookkeeping ---------------------------------


def valid_labelings(d):
    """All label vectors satisfying the dotted-disc cocycle conditions."""
    out = []
    for labs in itertools.product(d.group.elements(),
                                  repeat=d.n_components):
        try:
            d.with_labels(labs)
        except dg.ValidationError:
            continue
        out.append(labs)
    return out


def _nonzero_alpha(p):
    """The degree with invertible framed-unknot values: 1 if p = 0 mod 4."""
    return 1 if p % 4 == 0 else 0


def _signature_factor(lv, alpha, sign, sigma):
    """lambda(v_sign 1_alpha)^sigma, using the inverse pair for sigma < 0."""
    if sigma >= 0:
        return lv[(sign, alpha)] ** sigma
    return lv[(-sign, alpha)] ** (-sigma)


def _power(x, n):
    return x ** n if n >= 0 else x.inverse() ** (-n)


# -- invariants -----------------------------------------------------------


def invariant(d, p, variant="restricted", mode="refined", engine=None,
              conventions=None):
    """The invariant of a labeled diagram as an exact scalar.

    variant "restricted" computes the refined invariant of the labeled
    diagram (mode "refined") or the sum over all valid labelings (mode
    "unrefined"); variant "small" computes the ungraded small-algebra
    invariant (mode "unrefined" only, labels all zero).  For odd p only
    the ungraded evaluations exist, so mode "refined" is rejected.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    if variant == "small":
        if mode != "unrefined":
            raise ValueError("the small variant has no label refinement")
        u = quantum_group(p, RESTRICTED)
        return beads.evaluate_diagram(d, u, mode="small",
                                      conventions=conventions)
    if variant != "restricted":
        raise ValueError("unknown variant %r" % variant)
    u = quantum_group(p, RESTRICTED)
    if p % 2 != 0:
        if mode == "refined":
            raise ParityUnsupported(
                "the label refinement needs even p; use mode 'unrefined'")
        if mode != "unrefined":
            raise ValueError("unknown mode %r" % mode)
        return beads.evaluate_diagram(d, u, mode="tilde-sum",
                                      conventions=conventions)
    if mode == "refined":
        return beads.evaluate_diagram(d, u, mode=engine or "full-tilde",
                                      conventions=conventions)
    if mode != "unrefined":
        raise ValueError("unknown mode %r" % mode)
    direct, summed = unrefined_paths(d, p, conventions=conventions)
    if direct != summed:
        raise VerificationFailure(
            "unrefined paths disagree: direct %s vs per-labeling sum %s"
            % (direct, summed))
    return direct


def unrefined_paths(d, p, conventions=None):
    """The non-refined invariant through two independent code paths.

    Returns (direct, summed): the ungraded evaluation in the ribbon
    extension, and the sum of refined evaluations over all valid label
    vectors.  The two must agree because the degree idempotents sum to 1.
    """
    u = quantum_group(p, RESTRICTED)
    direct = beads.evaluate_diagram(d, u, mode="tilde-sum",
                                    conventions=conventions)
    labelings = valid_labelings(d)
    values = beads.evaluate_diagram_batch(d, u, labelings,
                                          mode="full-tilde",
                                          conventions=conventions)
    summed = u.ctx.zero
    for v in values:
        summed = summed + v
    return direct, summed


def boundary_invariant(d, structure, p, kind=None, conventions=None):
    """Normalized invariant of the boundary 3-manifold with structure.

    The structure is a sublink (tuple of 0/1 per component of the dot-free
    diagram obtained by handle trading): characteristic sublinks encode
    spin structures (p = 0 mod 4), even sublinks encode Z/2 cohomology
    classes (p = 2 mod 4).  The value is lambda(v_+ 1_alpha)^sigma times
    the refined invariant of the traded diagram labeled by the sublink,
    which makes it invariant under blow-ups of either sign.
    """
    if p < 2 or p % 2 != 0:
        raise ParityUnsupported("boundary invariants need even p")
    if kind is None:
        kind = "spin" if p % 4 == 0 else "coh"
    if kind == "spin" and p % 4 != 0:
        raise StructureKindMismatch(
            "spin structures require p = 0 mod 4 (got p = %d)" % p)
    if kind == "coh" and p % 4 != 2:
        raise StructureKindMismatch(
            "cohomology classes require p = 2 mod 4 (got p = %d)" % p)
    if kind not in ("spin", "coh"):
        raise ValueError("unknown structure kind %r" % kind)
    e = dg.trade_handles(d).diagram if d.n_dots else d
    structure = tuple(int(b) % 2 for b in structure)
    if len(structure) != e.n_components:
        raise ValueError(
            "structure has %d entries but the traded diagram has %d "
            "components" % (len(structure), e.n_components))
    link = dg.linking_matrix(e)
    if kind == "spin":
        if structure not in set(dg.characteristic_sublinks(link)):
            raise NotCharacteristic(
                "sublink %r is not characteristic" % (structure,))
    else:
        if structure not in set(dg.even_sublinks(link)):
            raise NotEven("sublink %r is not even" % (structure,))
    sigma = dg.signature(link)
    alpha = _nonzero_alpha(p)
    u = quantum_group(p, RESTRICTED)
    lv = u.lambda_v_values()
    labeled = e.with_labels(tuple((b,) for b in structure))
    value = beads.evaluate_diagram(labeled, u, mode="full-tilde",
                                   conventions=conventions)
    return _signature_factor(lv, alpha, 1, sigma) * value


# -- decomposition checks --------------------------------------------------


def decomposition_check(d, p, conventions=None):
    """Check the handle-trading decomposition identities on one diagram.

    Verifies, exactly: the refined invariant equals the sum of refined
    invariants of the traded diagram over all label extensions (one
    equation per valid labeling), the same without refinement, and -- for
    even p -- the signature-normalized boundary decomposition where the
    extension sum is restricted to characteristic (p = 0 mod 4) or even
    (p = 2 mod 4) sublinks, together with the vanishing of the remaining
    terms.
    """
    if p < 2 or p % 2 != 0:
        raise ParityUnsupported("decomposition checks need even p")
    rep = Report("decomposition of %d-component diagram at p=%d"
                 % (d.n_components, p))
    u = quantum_group(p, RESTRICTED)
    tr = dg.trade_handles(d)
    e = tr.diagram
    zero = u.ctx.zero

    omegas = valid_labelings(d)
    lhs = dict(zip(omegas, beads.evaluate_diagram_batch(
        d, u, omegas, mode="full-tilde", conventions=conventions)))
    psis = list(tr.extensions(None))
    rhs = dict(zip(psis, beads.evaluate_diagram_batch(
        e, u, psis, mode="full-tilde", conventions=conventions)))

    # refined trading identity, one equation per labeling
    for om in omegas:
        total = zero
        for psi in tr.extensions(om):
            total = total + rhs[psi]
        rep.record("trade identity at labels %s" % (om,),
                   lhs[om] == total,
                   "%s vs %s" % (lhs[om], total))

    # non-refined version: both sides summed, plus the ungraded path
    lhs_sum = zero
    for om in omegas:
        lhs_sum = lhs_sum + lhs[om]
    rhs_sum = zero
    for psi in psis:
        rhs_sum = rhs_sum + rhs[psi]
    rep.record("non-refined trade identity", lhs_sum == rhs_sum,
               "%s vs %s" % (lhs_sum, rhs_sum))
    direct = beads.evaluate_diagram(d, u, mode="tilde-sum",
                                    conventions=conventions)
    rep.record("ungraded evaluation matches the labeling sum",
               direct == lhs_sum, "%s vs %s" % (direct, lhs_sum))

    # signature-normalized boundary decomposition
    link = dg.linking_matrix(e)
    sigma = dg.signature(link)
    alpha = _nonzero_alpha(p)
    kind = "spin" if p % 4 == 0 else "coh"
    if kind == "spin":
        allowed = set(dg.characteristic_sublinks(link))
    else:
        allowed = set(dg.even_sublinks(link))
    lv = u.lambda_v_values()
    minus = _signature_factor(lv, alpha, -1, sigma)
    plus = _signature_factor(lv, alpha, 1, sigma)
    for om in omegas:
        total = zero
        for psi in tr.extensions(om):
            if tuple(b[0] for b in psi) in allowed:
                total = total + plus * rhs[psi]
        total = minus * total
        rep.record("%s decomposition at labels %s" % (kind, om),
                   lhs[om] == total, "%s vs %s" % (lhs[om], total))
    total = zero
    for psi in psis:
        if tuple(b[0] for b in psi) in allowed:
            total = total + plus * rhs[psi]
    total = minus * total
    rep.record("non-refined %s decomposition" % kind,
               lhs_sum == total, "%s vs %s" % (lhs_sum, total))

    # vanishing outside the allowed sublink set (dot-free diagrams only:
    # with dots the statement is about the traded link, checked via rhs)
    for psi in psis:
        if tuple(b[0] for b in psi) not in allowed:
            rep.record("vanishing at traded labels %s" % (psi,),
                       rhs[psi].is_zero(), str(rhs[psi]))
    return rep


# -- rescaling --------------------------------------------------------------


def rescale_check(d, xi, p, conventions=None):
    """Check that rescaling the integral pair rescales J by xi^(chi-1).

    Replacing the integral by xi * integral and the cointegral by
    xi^(-1) * cointegral multiplies the invariant by xi^(chi - 1) where
    chi is the Euler characteristic of the handlebody (the integral
    enters once per undotted component, the cointegral once per dot).
    """
    if xi.is_zero():
        raise ZeroScale("the rescaling scalar must be invertible")
    rep = Report("rescaling by %s at p=%d" % (xi, p))
    u = quantum_group(p, RESTRICTED)
    mode = "full-tilde" if p % 2 == 0 else "tilde-sum"
    base = beads.evaluate_diagram(d, u, mode=mode, conventions=conventions)
    scaled = beads.evaluate_diagram(d, u, mode=mode,
                                    conventions=conventions,
                                    integral_scale=xi,
                                    cointegral_scale=xi.inverse())
    chi = dg.euler_characteristic(d)
    expected = base * _power(xi, chi - 1)
    rep.record("J scales by xi^(chi-1) with chi=%d" % chi,
               scaled == expected, "%s vs %s" % (scaled, expected))
    return rep


# -- stabilization identity --------------------------------------------------


def stabilization_identity(p):
    """sum over degrees of lambda(v_- 1_a) lambda(v_+ 1_a), which equals 1.

    This is the scalar by which a canceling pair of opposite-framing
    unknots multiplies the non-refined invariant.
    """
    u = quantum_group(p, RESTRICTED)
    lv = u.lambda_v_values()
    total = u.ctx.zero
    for a in (0, 1):
        total = total + lv[(-1, a)] * lv[(1, a)]
    return total


# -- the verification suite ---------------------------------------------------


def _check_scalars(rep, p):
    c = named_constants(p)
    ctx = c.ctx
    two_sqrt = 2 * c.sqrt_p
    ok_all = True
    for sign in (1, -1):
        pre = two_sqrt * (1 + sign * c.i)
        for dshift in range(4 * p):
            val = c.gauss_sum(sign, dshift)
            if dshift % 2:
                want = ctx.zero
            else:
                want = pre * c.t ** (-sign * (dshift * dshift // 4))
            if val != want:
                ok_all = False
                rep.record("gauss sum sign=%d d=%d" % (sign, dshift), False,
                           "%s vs %s" % (val, want))
    rep.record("quadratic gauss sums, both signs, all shifts", ok_all)
    rep.record("sqrt(p)^2 = p", c.sqrt_p * c.sqrt_p == ctx.from_rational(p))
    rep.record("sqrt(2)^2 = 2", c.sqrt2 * c.sqrt2 == ctx.from_rational(2))


def _check_axioms(rep, p):
    if p % 2 == 0:
        for variant, ribbon in ((RESTRICTED, False), (TILDE, True)):
            g = hopf.split_quantum_group(quantum_group(p, variant))
            r = hopf.check_hopf_axioms(g)
            rep.record("split %s algebra axioms" % variant, r.ok,
                       r.summary() if not r.ok else "")
            r = hopf.check_unimodular_axioms(g)
            rep.record("split %s integral axioms" % variant, r.ok,
                       r.summary() if not r.ok else "")
            if ribbon:
                r = hopf.check_ribbon_axioms(g)
                rep.record("split %s ribbon axioms" % variant, r.ok,
                           r.summary() if not r.ok else "")
        g = hopf.trivial_split(hopf.from_quantum_group(
            quantum_group(p, SMALL)))
        for name, res in (
                ("hopf", hopf.check_hopf_axioms(g)),
                ("ribbon", hopf.check_ribbon_axioms(g)),
                ("integral", hopf.check_unimodular_axioms(g))):
            rep.record("ungraded small %s axioms" % name, res.ok,
                       res.summary() if not res.ok else "")
    else:
        g = hopf.trivial_split(hopf.from_quantum_group(
            quantum_group(p, SMALL)))
        for name, res in (
                ("hopf", hopf.check_hopf_axioms(g)),
                ("ribbon", hopf.check_ribbon_axioms(g)),
                ("integral", hopf.check_unimodular_axioms(g))):
            rep.record("ungraded small %s axioms" % name, res.ok,
                       res.summary() if not res.ok else "")
        g = hopf.trivial_split(hopf.from_quantum_group(
            quantum_group(p, RESTRICTED)))
        r = hopf.check_hopf_axioms(g, reduced_arity=True)
        rep.record("ungraded restricted hopf axioms (reduced arity)", r.ok,
                   r.summary() if not r.ok else "")
        r = hopf.check_unimodular_axioms(g)
        rep.record("ungraded restricted integral axioms", r.ok,
                   r.summary() if not r.ok else "")


def _check_oracles(rep, p):
    for variant in (TILDE, SMALL):
        u = quantum_group(p, variant)
        v_plus, v_minus = u.ribbon_elements()
        if not (variant == SMALL and p % 2):
            drin = u.drinfeld_element() * u.pivotal_inverse()
            rep.record("%s ribbon closed form vs drinfeld element"
                       % variant, v_plus == drin)
        rep.record("%s inverse ribbon closed form vs linear solve"
                   % variant, v_minus == u.invert(v_plus))
        m_plus, m_minus = u.m_matrix()
        rep.record("%s monodromy closed form vs R21 R" % variant,
                   m_plus == u.m_matrix_from_r())
        prod = m_plus * m_minus
        rep.record("%s monodromy inverse" % variant,
                   prod == u.tensor_unit(2))
        rep.record("%s copairing closed form vs (S x id) monodromy"
                   % variant, u.copairing() == u.copairing_from_m(m_plus))
        rinv = u.r_matrix().apply_leg(0, u.antipode_monomial)
        rep.record("%s R-matrix inverse via antipode" % variant,
                   u.r_matrix() * rinv == u.tensor_unit(2))


def _check_graded_forms(rep, p):
    u = quantum_group(p, TILDE)
    v_plus, v_minus = u.ribbon_elements()
    one0, one1 = u.idempotents()
    idems = (one0, one1)
    graded = u.graded_ribbon()
    for sign, v in ((1, v_plus), (-1, v_minus)):
        for a in (0, 1):
            rep.record("graded ribbon closed form (%+d, %d)" % (sign, a),
                       graded[(sign, a)] == v * idems[a])
    w = u.copairing()
    gw = u.graded_copairing()
    for a in (0, 1):
        for b in (0, 1):
            proj = u.outer(idems[a], idems[b])
            rep.record("graded copairing closed form (%d, %d)" % (a, b),
                       gw[(a, b)] == w * proj)


def _check_adjoint_action(rep, p):
    ur = quantum_group(p, RESTRICTED)
    ut = quantum_group(p, TILDE)
    diag = ut.diagonal_part()
    ok1 = True
    ok2 = True
    monos = list(ur.basis())
    lifted = {m: lift_to_tilde(ur.element({m: ur.ctx.one}), ut)
              for m in monos}
    degree = {m: m[0] - m[1] for m in monos}

    def act_first(x):
        out = ut.tensor(2, {})
        for (m1, m2), c in diag.terms.items():
            acted = ut.adjoint_action(ut.element({m1: c}), x)
            out = out + ut.outer(acted, ut.element({m2: ut.ctx.one}))
        return out

    for m in monos:
        got = act_first(lifted[m])
        want = ut.outer(lifted[m],
                        ut.monomial(0, 0, (2 * degree[m]) % (4 * p)))
        if got != want:
            ok1 = False
            rep.record("diagonal adjoint action on %s" % (m,), False)
    rep.record("diagonal element: (D' |> x) (x) D'' = x (x) K^|x|", ok1)

    # the two-sided version on a spanning set of monomial pairs
    sample = [m for m in monos if m[2] == 0]
    for mx in sample:
        for my in sample:
            got = ut.tensor(2, {})
            for (m1, m2), c in diag.terms.items():
                ax = ut.adjoint_action(ut.element({m1: c}), lifted[mx])
                ay = ut.adjoint_action(ut.element({m2: ut.ctx.one}),
                                       lifted[my])
                got = got + ut.outer(ax, ay)
            phase = ur.qpow(2 * degree[mx] * degree[my])
            want = ut.outer(lifted[mx], lifted[my]).scale(phase)
            if got != want:
                ok2 = False
                rep.record("two-sided diagonal action on %s, %s"
                           % (mx, my), False)
    rep.record("diagonal element: (D' |> x) (x) (D'' |> y) "
               "= q^(2|x||y|) x (x) y", ok2)


def _check_modular_identities(rep, p):
    ur = quantum_group(p, RESTRICTED)
    ut = quantum_group(p, TILDE)
    for u in (ur, ut):
        w = u.copairing()
        contracted = w.contract_leg(
            1, lambda m: u.integral(u.element({m: u.ctx.one}))).as_element()
        # the copairing has even Cartan exponents, so in the extension the
        # contraction reproduces the restricted cointegral (lifted), not
        # the extension's own
        want = (u.cointegral() if u.variant == RESTRICTED
                else lift_to_tilde(ur.cointegral(), ut))
        rep.record("%s (id x integral) of copairing = restricted "
                   "cointegral" % u.variant, contracted == want)
        lam = u.cointegral()
        rep.record("%s cointegral is antipode-fixed" % u.variant,
                   u.antipode(lam) == lam)


def _check_lambda_table(rep, p):
    u = quantum_group(p, RESTRICTED)
    lv = u.lambda_v_values()
    c = named_constants(p)
    sqrt2 = c.sqrt2
    if p % 4 == 0:
        hot, cold = 1, 0
        plus = ((1 - c.i) / sqrt2) * c.t ** 3
        minus = ((1 + c.i) / sqrt2) * c.t ** (-3)
    else:
        hot, cold = 0, 1
        plus = -((1 - c.i) / sqrt2) * c.t ** 3
        minus = -((1 + c.i) / sqrt2) * c.t ** (-3)
    rep.record("lambda(v+ 1_%d) closed value" % hot, lv[(1, hot)] == plus,
               "%s vs %s" % (lv[(1, hot)], plus))
    rep.record("lambda(v- 1_%d) closed value" % hot, lv[(-1, hot)] == minus,
               "%s vs %s" % (lv[(-1, hot)], minus))
    rep.record("product lambda(v+ 1_%d) lambda(v- 1_%d) = 1" % (hot, hot),
               lv[(1, hot)] * lv[(-1, hot)] == u.ctx.one)
    rep.record("lambda(v+/- 1_%d) vanish" % cold,
               lv[(1, cold)].is_zero() and lv[(-1, cold)].is_zero())


def _check_gk_moves(rep, p):
    u = quantum_group(p, RESTRICTED)
    for pair in corpus.gk_pairs():
        combos = list(itertools.product((0, 1), repeat=pair.n_labels))
        left0 = pair.left(combos[0])
        right0 = pair.right(combos[0])
        left_labels = [pair.left(c).labels for c in combos]
        right_labels = [pair.right(c).labels for c in combos]
        lv = beads.evaluate_diagram_batch(left0, u, left_labels,
                                          mode="full-tilde")
        rv = beads.evaluate_diagram_batch(right0, u, right_labels,
                                          mode="full-tilde")
        ok = all(a == b for a, b in zip(lv, rv))
        rep.record("graded invariance under %s (%s)"
                   % (pair.move, pair.name), ok,
                   "" if ok else "; ".join(
                       "%s: %s vs %s" % (c, a, b)
                       for c, a, b in zip(combos, lv, rv) if a != b))
        ls = beads.evaluate_diagram(pair.left([0] * pair.n_labels), u,
                                    mode="small")
        rs = beads.evaluate_diagram(pair.right([0] * pair.n_labels), u,
                                    mode="small")
        rep.record("small-variant invariance under %s (%s)"
                   % (pair.move, pair.name), ls == rs,
                   "%s vs %s" % (ls, rs))


def _check_membership(rep, p, names=None):
    u = quantum_group(p, RESTRICTED)
    ok_all = True
    for name in (names or corpus.names()):
        d = corpus.diagram(name)
        try:
            g = beads.evaluate_diagram(d, u, mode="graded-in-U")
        except beads.BeadOutsideU as exc:
            ok_all = False
            rep.record("collected beads of %s stay in the restricted "
                       "algebra" % name, False, str(exc))
            continue
        f = beads.evaluate_diagram(d, u, mode="full-tilde")
        if g != f:
            ok_all = False
            rep.record("restricted and extension evaluations of %s agree"
                       % name, False, "%s vs %s" % (g, f))
    rep.record("even Cartan exponents and restricted evaluation on the "
               "corpus", ok_all)


_SMALL_COMPARISON_P4 = [
    "unknot0", "kink_plus", "kink_minus", "hopf00", "kinks_pm",
    "kink_unknot", "unlink00", "dot_cancel", "dot_lone", "dot_double",
    "dots_two",
]


def _check_restricted_vs_small(rep, p):
    u = quantum_group(p, RESTRICTED)
    us = quantum_group(p, SMALL)
    # normalization statement: the small integral with the sqrt(p/2)
    # prefactor equals the even-degree part of the restricted integral on
    # the nose, lambda_small(x) = lambda(x 1_0)
    one0, _ = u.idempotents()
    ok = all(
        us.integral(us.element({m: us.ctx.one}))
        == u.integral(u.element({m: u.ctx.one}) * one0)
        for m in us.basis())
    rep.record("small integral equals restricted integral against 1_0 "
               "(sqrt(p/2) normalization, exact)", ok)
    names = corpus.names() if p == 2 else _SMALL_COMPARISON_P4
    ok_all = True
    for name in names:
        d = corpus.diagram(name)
        zero = beads.evaluate_diagram(d, u, mode="full-tilde")
        small = beads.evaluate_diagram(d, u, mode="small")
        if zero != small:
            ok_all = False
            rep.record("restricted J(W, 0) = small J(W) on %s" % name,
                       False, "%s vs %s" % (zero, small))
    rep.record("restricted J(W, 0) equals the small-variant invariant on "
               "the corpus", ok_all)


def _check_published_values(rep, p):
    u = quantum_group(p, RESTRICTED)
    one = u.ctx.one
    v = beads.evaluate_diagram(corpus.diagram("hopf00"), u, mode="small")
    rep.record("small invariant of the zero-framed Hopf link trace is 1",
               v == one, str(v))
    v = beads.evaluate_diagram(corpus.diagram("hopf01"), u, mode="small")
    want = one if p % 4 == 2 else u.ctx.zero
    rep.record("small invariant of the (0,1)-framed Hopf link trace "
               "(twisted bundle)", v == want, "%s vs %s" % (v, want))


_DECOMPOSITION_DOTTED = ["dot_cancel", "dot_double", "dot_clasp",
                         "dots_two", "dot_and_hopf"]
_DECOMPOSITION_DOTFREE = ["unknot0", "kink_plus", "kink_minus",
                          "kinks_pm", "unlink00"]


def _check_decomposition(rep, p):
    names = list(_DECOMPOSITION_DOTFREE)
    if p == 2:
        names += _DECOMPOSITION_DOTTED
    elif p % 4 == 0:
        names += ["dot_cancel", "dot_lone"]
    for name in names:
        sub = decomposition_check(corpus.diagram(name), p)
        rep.record("decomposition identities on %s" % name, sub.ok,
                   "" if sub.ok else sub.summary())


_RESCALE_NAMES = ["unknot0", "kink_plus", "hopf00", "dot_cancel"]


def _check_rescaling(rep, p):
    ctx = named_constants(p).ctx
    i_unit = named_constants(p).i
    scales = [("-1", -ctx.one), ("i", i_unit),
              ("i^(p-1)", _power(i_unit, p - 1))]
    for name in _RESCALE_NAMES:
        d = corpus.diagram(name)
        for label, xi in scales:
            sub = rescale_check(d, xi, p)
            rep.record("rescaling by %s on %s" % (label, name), sub.ok,
                       "" if sub.ok else sub.summary())
    # exponent additivity under boundary connected sum (side-by-side
    # diagrams): chi(W # W') - 1 = (chi(W) - 1) + (chi(W') - 1)
    d1 = corpus.diagram("kink_plus")
    d2 = corpus.diagram("dot_cancel")
    union = dg.disjoint_union(d1, d2)
    chi_ok = (dg.euler_characteristic(union) - 1
              == (dg.euler_characteristic(d1) - 1)
              + (dg.euler_characteristic(d2) - 1))
    rep.record("Euler exponent is additive under boundary connected sum",
               chi_ok)
    sub = rescale_check(union, i_unit, p)
    rep.record("rescaling on a boundary connected sum", sub.ok,
               "" if sub.ok else sub.summary())


def _check_stabilization(rep, p):
    val = stabilization_identity(p)
    u = quantum_group(p, RESTRICTED)
    rep.record("degree-summed framed-unknot pairing equals 1",
               val == u.ctx.one, str(val))
    # the same fact seen through diagrams: a split +1/-1 pair of unknots
    # contributes a factor 1 to the non-refined invariant
    d = corpus.diagram("kinks_pm")
    direct, summed = unrefined_paths(d, p)
    rep.record("split opposite-kink pair has non-refined invariant 1",
               direct == u.ctx.one and summed == u.ctx.one,
               "%s / %s" % (direct, summed))


def verify_suite(p_list, deep=True):
    """Run the whole identity corpus for each p and aggregate a Report.

    Odd p runs the ungraded subset (scalars, axioms, oracle
    equivalences); even p additionally runs the graded closed forms, the
    bead-level move corpus and the decomposition/rescaling checks.  With
    ``deep=False`` the slowest sections (axioms, membership,
    decomposition) are skipped.
    """
    rep = Report("verification suite for p in %s" % (list(p_list),))

    def run(tag, fn, *args):
        sub = Report(tag)
        fn(sub, *args)
        rep.merge(sub)

    for p in p_list:
        tag = "p=%d" % p
        run("%s scalars" % tag, _check_scalars, p)
        if deep:
            run("%s axioms" % tag, _check_axioms, p)
        run("%s oracles" % tag, _check_oracles, p)
        if p % 2 == 0:
            run("%s graded forms" % tag, _check_graded_forms, p)
            run("%s lambda table" % tag, _check_lambda_table, p)
            run("%s modular identities" % tag, _check_modular_identities,
                p)
            run("%s small comparison" % tag, _check_restricted_vs_small,
                p)
            run("%s published values" % tag, _check_published_values, p)
            run("%s stabilization" % tag, _check_stabilization, p)
            run("%s rescaling" % tag, _check_rescaling, p)
            if p == 2:
                run("%s adjoint action" % tag, _check_adjoint_action, p)
                run("%s moves" % tag, _check_gk_moves, p)
                if deep:
                    run("%s membership" % tag, _check_membership, p)
            if deep:
                run("%s decomposition" % tag, _check_decomposition, p)
    return rep
