"""Hopf algebras graded by a finite abelian group, and their axioms.

The central object is a *splitting system*: a family of central idempotents
1_alpha indexed by a finite abelian group G, orthogonal, summing to 1, and
compatible with the coalgebra structure.  Such a family cuts an ordinary
ribbon Hopf algebra H into components H_alpha = H 1_alpha carrying the
structure of a G-graded Hopf algebra: graded products, coproducts
Delta_{alpha,beta}: H_{alpha+beta} -> H_alpha (x) H_beta, antipodes
S_alpha: H_alpha -> H_{-alpha}, R-matrix components R_{alpha,beta}, graded
ribbon elements v_alpha, integrals lambda_alpha, and a cointegral in the
zero component.

Everything here is representation-agnostic: an algebra is described by a
:class:`HopfAlgebraData` record of callables acting on monomial keys, and
elements are sparse dicts ``{monomial: Cyc}``.  The axiom checkers run over
explicit spanning sets and report every instance checked, so a green report
is a finite but complete certificate (multilinearity reduces each axiom to
basis/spanning instances).
"""

from __future__ import annotations

import itertools

from .cyclotomic import Cyc, CycContext


class NotASplittingSystem(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class FiniteAbelianGroup:
    """Product of cyclic groups; elements are tuples of residues."""

    def __init__(self, orders: tuple):
        if not orders or any(n < 1 for n in orders):
            raise ValueError("orders must be positive")
        self.orders = tuple(orders)

    def elements(self) -> list:
        return [tuple(e) for e in itertools.product(*[range(n) for n in self.orders])]

    def zero(self) -> tuple:
        return (0,) * len(self.orders)

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def neg(self, a: tuple) -> tuple:
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def __len__(self):
        size = 1
        for n in self.orders:
            size *= n
        return size

    def __repr__(self):
        return "Z" + "xZ".join(str(n) for n in self.orders)


# -- element helpers (elements are dicts mono -> Cyc, zero-free) -------------


def _acc(terms: dict, key, val: Cyc) -> None:
    cur = terms.get(key)
    if cur is None:
        if not val.is_zero():
            terms[key] = val
    else:
        cur = cur + val
        if cur.is_zero():
            del terms[key]
        else:
            terms[key] = cur


def el_scale(x: dict, s: Cyc) -> dict:
    if s.is_zero():
        return {}
    return {m: c * s for m, c in x.items()}


def el_add(x: dict, y: dict) -> dict:
    out = dict(x)
    for m, c in y.items():
        _acc(out, m, c)
    return out


class HopfAlgebraData:
    """An ordinary Hopf algebra presented by structure callables.

    ``mul(m1, m2)`` and ``antipode(m)`` return iterables of
    ``(monomial, Cyc)`` pairs; ``delta(m)`` returns pairs
    ``((m1, m2), Cyc)``; ``counit(m)`` returns a scalar.  Optional ribbon
    data: ``r`` (a two-leg tensor dict), ``ribbon`` (the pair v, v^{-1}),
    ``integral`` (a functional on monomials), ``cointegral`` (an element),
    ``pivotal`` (an element), ``m_tensor`` (the M-matrix, for
    factorizability).  ``generators`` is a list of elements whose monomials
    multiplicatively span the algebra; it licenses the reduced axiom checks.
    """

    def __init__(
        self,
        name: str,
        ctx: CycContext,
        basis: list,
        mul,
        unit: dict,
        delta,
        counit,
        antipode,
        r: dict | None = None,
        ribbon: tuple | None = None,
        integral=None,
        cointegral: dict | None = None,
        pivotal: dict | None = None,
        m_tensor: dict | None = None,
        generators: list | None = None,
    ):
        self.name = name
        self.ctx = ctx
        self.basis = list(basis)
        self.mul = mul
        self.unit = unit
        self.delta = delta
        self.counit = counit
        self.antipode = antipode
        self.r = r
        self.ribbon = ribbon
        self.integral = integral
        self.cointegral = cointegral
        self.pivotal = pivotal
        self.m_tensor = m_tensor
        self.generators = generators or []

    # element-level operations ------------------------------------------------

    def el_mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                c12 = c1 * c2
                for mono, mc in self.mul(m1, m2):
                    _acc(out, mono, c12 * mc)
        return out

    def el_mul_many(self, *xs: dict) -> dict:
        out = self.unit
        for x in xs:
            out = self.el_mul(out, x)
        return out

    def el_delta(self, x: dict) -> dict:
        out: dict = {}
        for m, c in x.items():
            for key, mc in self.delta(m):
                _acc(out, key, c * mc)
        return out

    def el_counit(self, x: dict) -> Cyc:
        acc = self.ctx.zero
        for m, c in x.items():
            acc = acc + c * self.counit(m)
        return acc

    def el_antipode(self, x: dict) -> dict:
        out: dict = {}
        for m, c in x.items():
            for mono, mc in self.antipode(m):
                _acc(out, mono, c * mc)
        return out

    def el_integral(self, x: dict) -> Cyc:
        acc = self.ctx.zero
        for m, c in x.items():
            acc = acc + c * self.integral(m)
        return acc

    # tensor operations (dicts keyed by tuples of monomials) ------------------

    def t_mul(self, x: dict, y: dict, nlegs: int) -> dict:
        out: dict = {}
        for ms, cs in x.items():
            for mo, co in y.items():
                legs = [((), cs * co)]
                dead = False
                for i in range(nlegs):
                    prod = list(self.mul(ms[i], mo[i]))
                    if not prod:
                        dead = True
                        break
                    legs = [
                        (prefix + (mono,), pc * mc)
                        for prefix, pc in legs
                        for mono, mc in prod
                    ]
                if dead:
                    continue
                for key, c in legs:
                    _acc(out, key, c)
        return out

    def t_apply(self, x: dict, leg: int, fn) -> dict:
        """Apply a map (monomial -> iterable of (mono, Cyc)) to one leg."""
        out: dict = {}
        for ms, c in x.items():
            for mono, mc in fn(ms[leg]):
                _acc(out, ms[:leg] + (mono,) + ms[leg + 1 :], c * mc)
        return out

    def t_contract(self, x: dict, leg: int, fn) -> dict:
        """Apply a functional (monomial -> Cyc) to one leg."""
        out: dict = {}
        for ms, c in x.items():
            s = fn(ms[leg])
            if not s.is_zero():
                _acc(out, ms[:leg] + ms[leg + 1 :], c * s)
        return out

    def t_delta_leg(self, x: dict, leg: int) -> dict:
        """Replace one leg by its coproduct (adds a leg)."""
        out: dict = {}
        for ms, c in x.items():
            for (m1, m2), mc in self.delta(ms[leg]):
                _acc(out, ms[:leg] + (m1, m2) + ms[leg + 1 :], c * mc)
        return out

    def t_outer(self, *xs: dict) -> dict:
        terms = {(): self.ctx.one}
        for x in xs:
            new: dict = {}
            for key, c in terms.items():
                for m, mc in x.items():
                    _acc(new, key + (m,), c * mc)
            terms = new
        return terms

    @staticmethod
    def t_swap(x: dict, i: int, j: int) -> dict:
        out: dict = {}
        for ms, c in x.items():
            key = list(ms)
            key[i], key[j] = key[j], key[i]
            _acc(out, tuple(key), c)
        return out

    def t_project_leg(self, x: dict, leg: int, idem: dict) -> dict:
        """Multiply one leg on the right by an idempotent."""
        out: dict = {}
        for ms, c in x.items():
            for mi, ci in idem.items():
                cc = c * ci
                for mono, mc in self.mul(ms[leg], mi):
                    _acc(out, ms[:leg] + (mono,) + ms[leg + 1 :], cc * mc)
        return out

    def t_project(self, x: dict, idems: tuple) -> dict:
        """Multiply each leg on the right by the given idempotents."""
        out = x
        for leg, idem in enumerate(idems):
            out = self.t_project_leg(out, leg, idem)
        return out


def from_quantum_group(U, graded_r_supplier=None) -> HopfAlgebraData:
    """Wrap an sl2 variant into the generic interface."""
    from . import sl2

    def mul(m1, m2):
        return U.product_monomials(m1, m2)

    def delta(m):
        return U.coproduct_monomial(m).terms.items()

    def counit(m):
        return U.ctx.one if (m[0] == 0 and m[1] == 0) else U.ctx.zero

    def antipode(m):
        return U.antipode_monomial(m).terms.items()

    v_plus, v_minus = U.ribbon_elements()
    m_plus, _ = U.m_matrix()
    r = None
    if U.variant != sl2.RESTRICTED:
        r = U.r_matrix().terms
    gens = [U.gen_e().terms, U.gen_f().terms, U.gen_k().terms]
    return HopfAlgebraData(
        name="U_q(sl2) %s p=%d" % (U.variant, U.p),
        ctx=U.ctx,
        basis=list(U.basis()),
        mul=mul,
        unit=U.unit().terms,
        delta=delta,
        counit=counit,
        antipode=antipode,
        r=r,
        ribbon=(v_plus.terms, v_minus.terms),
        integral=lambda m: U.integral(sl2.AlgebraElement(U, {m: U.ctx.one})),
        cointegral=U.cointegral().terms,
        pivotal=U.pivotal().terms,
        m_tensor=m_plus.terms,
        generators=gens,
    )


def group_algebra(ctx: CycContext, order: int) -> HopfAlgebraData:
    """The group algebra of Z/order with its standard ribbon structure.

    A cocommutative toy example: R = 1 (x) 1, v = 1, integral dual to the
    identity, cointegral the sum of all group elements.  Used as a known-good
    (and known-non-factorizable) input for the axiom checkers.
    """

    def mul(m1, m2):
        return (((m1 + m2) % order, ctx.one),)

    def delta(m):
        return (((m, m), ctx.one),)

    def counit(_m):
        return ctx.one

    def antipode(m):
        return (((-m) % order, ctx.one),)

    def integral(m):
        return ctx.one if m == 0 else ctx.zero

    unit = {0: ctx.one}
    return HopfAlgebraData(
        name="k[Z/%d]" % order,
        ctx=ctx,
        basis=list(range(order)),
        mul=mul,
        unit=unit,
        delta=delta,
        counit=counit,
        antipode=antipode,
        r={(0, 0): ctx.one},
        ribbon=(dict(unit), dict(unit)),
        integral=integral,
        cointegral={m: ctx.one for m in range(order)},
        pivotal=dict(unit),
        m_tensor={(0, 0): ctx.one},
        generators=[{1 % order: ctx.one}],
    )


class GradedHopfData:
    """A Hopf algebra together with a verified splitting system."""

    def __init__(self, H: HopfAlgebraData, group: FiniteAbelianGroup, idempotents: dict, graded_r: dict | None = None):
        self.H = H
        self.group = group
        self.idempotents = idempotents
        self._graded_r = graded_r
        self._components: dict = {}
        self._gens: dict = {}

    # components ----------------------------------------------------------------

    def project(self, x: dict, alpha: tuple) -> dict:
        return self.H.el_mul(x, self.idempotents[alpha])

    def component(self, alpha: tuple) -> list:
        cached = self._components.get(alpha)
        if cached is None:
            seen = set()
            cached = []
            for m in self.H.basis:
                x = self.project({m: self.H.ctx.one}, alpha)
                if not x:
                    continue
                # spanning set up to scalar: drop sign duplicates
                key = frozenset(x.items())
                neg = frozenset((mono, -c) for mono, c in x.items())
                if key in seen or neg in seen:
                    continue
                seen.add(key)
                cached.append(x)
            self._components[alpha] = cached
        return cached

    def generators(self, alpha: tuple) -> list:
        cached = self._gens.get(alpha)
        if cached is None:
            cached = []
            seen = set()
            for g in self.H.generators:
                x = self.project(g, alpha)
                key = frozenset(x.items())
                if x and key not in seen:
                    seen.add(key)
                    cached.append(x)
            self._gens[alpha] = cached
        return cached

    # graded structure maps -------------------------------------------------------

    def delta(self, x: dict, alpha: tuple, beta: tuple) -> dict:
        d = self.H.el_delta(x)
        return self.H.t_project(d, (self.idempotents[alpha], self.idempotents[beta]))

    def counit0(self, x: dict) -> Cyc:
        return self.H.el_counit(x)

    def antipode(self, x: dict) -> dict:
        return self.H.el_antipode(x)

    def r(self, alpha: tuple, beta: tuple) -> dict:
        if self._graded_r is not None:
            return self._graded_r[(alpha, beta)]
        if self.H.r is None:
            raise DimensionMismatch("no R-matrix data available")
        return self.H.t_project(self.H.r, (self.idempotents[alpha], self.idempotents[beta]))

    def v(self, alpha: tuple, sign: int = 1) -> dict:
        vp, vm = self.H.ribbon
        return self.project(vp if sign > 0 else vm, alpha)

    def pivotal(self, alpha: tuple) -> dict:
        return self.project(self.H.pivotal, alpha)

    def integral(self, x: dict) -> Cyc:
        return self.H.el_integral(x)

    def cointegral(self) -> dict:
        return self.H.cointegral


def split(
    H: HopfAlgebraData,
    group: FiniteAbelianGroup,
    idempotents: dict,
    graded_r: dict | None = None,
) -> GradedHopfData:
    """Verify the splitting-system equations and return the graded data.

    Checks, for all alpha, beta in the group and all basis monomials m:
    orthogonality 1_alpha 1_beta = delta 1_alpha, completeness sum = 1,
    centrality m 1_alpha = 1_alpha m, Delta(1_alpha) = sum_beta
    1_{alpha-beta} (x) 1_beta, eps(1_alpha) = delta_{alpha,0}, and
    S(1_alpha) = 1_{-alpha}.
    """
    elems = group.elements()
    if set(idempotents) != set(elems):
        raise DimensionMismatch("idempotent family does not match the group")
    ctx = H.ctx
    total: dict = {}
    for alpha in elems:
        ia = idempotents[alpha]
        total = el_add(total, ia)
        for beta in elems:
            prod = H.el_mul(ia, idempotents[beta])
            expect = ia if alpha == beta else {}
            if prod != expect:
                raise NotASplittingSystem("idempotents not orthogonal at %r,%r" % (alpha, beta))
    if total != H.unit:
        raise NotASplittingSystem("idempotents do not sum to 1")
    for alpha in elems:
        ia = idempotents[alpha]
        for m in H.basis:
            x = {m: ctx.one}
            if H.el_mul(x, ia) != H.el_mul(ia, x):
                raise NotASplittingSystem("idempotent %r is not central" % (alpha,))
        d = H.el_delta(ia)
        expect: dict = {}
        for beta in elems:
            gamma = group.add(alpha, group.neg(beta))
            for key, c in H.t_outer(idempotents[gamma], idempotents[beta]).items():
                _acc(expect, key, c)
        if d != expect:
            raise NotASplittingSystem("coproduct incompatible at %r" % (alpha,))
        eps = H.el_counit(ia)
        want = ctx.one if alpha == group.zero() else ctx.zero
        if eps != want:
            raise NotASplittingSystem("counit incompatible at %r" % (alpha,))
        if H.el_antipode(ia) != idempotents[group.neg(alpha)]:
            raise NotASplittingSystem("antipode incompatible at %r" % (alpha,))
    return GradedHopfData(H, group, idempotents, graded_r)


def split_quantum_group(U) -> GradedHopfData:
    """Split a restricted or extended sl2 variant along its Z/2 idempotents.

    The extension is a split ribbon algebra and carries graded R-matrices;
    the restricted variant is split unimodular only (its mixed-degree R
    components would need odd Cartan powers), so no R data is attached.
    """
    from . import sl2

    H = from_quantum_group(U)
    group = FiniteAbelianGroup((2,))
    one0, one1 = U.idempotents()
    idems = {(0,): one0.terms, (1,): one1.terms}
    graded_r = None
    if U.variant == sl2.TILDE:
        graded_r = {
            ((a,), (b,)): t.terms for (a, b), t in U.graded_r_matrix().items()
        }
    return split(H, group, idems, graded_r)


def trivial_split(H: HopfAlgebraData) -> GradedHopfData:
    """View an ungraded Hopf algebra as graded by the trivial group."""
    group = FiniteAbelianGroup((1,))
    graded_r = None
    if H.r is not None:
        graded_r = {((0,), (0,)): H.r}
    return GradedHopfData(H, group, {(0,): H.unit}, graded_r)


def direct_sum(G: GradedHopfData) -> HopfAlgebraData:
    """Reassemble the ungraded Hopf algebra from its graded components."""
    H = G.H
    elems = G.group.elements()

    def mul(m1, m2):
        out: dict = {}
        for alpha in elems:
            x = G.project({m1: H.ctx.one}, alpha)
            y = G.project({m2: H.ctx.one}, alpha)
            for mono, c in H.el_mul(x, y).items():
                _acc(out, mono, c)
        return out.items()

    def delta(m):
        out: dict = {}
        for alpha in elems:
            for beta in elems:
                x = G.project({m: H.ctx.one}, G.group.add(alpha, beta))
                for key, c in G.delta(x, alpha, beta).items():
                    _acc(out, key, c)
        return out.items()

    def counit(m):
        return G.counit0(G.project({m: H.ctx.one}, G.group.zero()))

    def antipode(m):
        out: dict = {}
        for alpha in elems:
            x = G.project({m: H.ctx.one}, alpha)
            for mono, c in G.antipode(x).items():
                _acc(out, mono, c)
        return out.items()

    return HopfAlgebraData(
        name=H.name + " (direct sum)",
        ctx=H.ctx,
        basis=H.basis,
        mul=mul,
        unit=H.unit,
        delta=delta,
        counit=counit,
        antipode=antipode,
        r=H.r,
        ribbon=H.ribbon,
        integral=H.integral,
        cointegral=H.cointegral,
        pivotal=H.pivotal,
        m_tensor=H.m_tensor,
        generators=H.generators,
    )


class AxiomReport:
    """Outcome of an axiom suite: every instance checked, every failure kept."""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures: list = []

    def record(self, axiom: str, instance, ok: bool) -> None:
        self.checked += 1
        if not ok:
            self.failures.append((axiom, instance))

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED (%d)" % len(self.failures)
        return "%s: %d instances, %s" % (self.name, self.checked, status)

    def __repr__(self):
        return "<AxiomReport %s>" % self.summary()


def _pair_slots(G: GradedHopfData, alpha: tuple, reduced: bool) -> list:
    return G.generators(alpha) if reduced else G.component(alpha)


def _last_monomials(H: HopfAlgebraData, reduced: bool) -> list:
    if not reduced:
        return list(H.basis)
    monos = []
    seen = set()
    for g in H.generators:
        for m in g:
            if m not in seen:
                seen.add(m)
                monos.append(m)
    return monos


def check_hopf_axioms(G: GradedHopfData, reduced_arity: bool = False) -> AxiomReport:
    """The Hopf group-coalgebra axioms over explicit spanning sets.

    The multilinear identities (associativity, coproduct multiplicativity,
    coassociativity) are certified on the full raw monomial basis; since the
    splitting idempotents are verified central and the graded structure maps
    are their bilinear projections, every graded instance follows exactly.
    The remaining axioms run per graded component.  With ``reduced_arity``
    the highest slot of each multilinear axiom runs over algebra generators
    instead of the whole basis; induction on generator words makes this
    reduction complete while cutting the instance count by an order of
    magnitude (used for the larger parameters).
    """
    H = G.H
    ctx = H.ctx
    group = G.group
    elems = group.elements()
    zero = group.zero()
    rep = AxiomReport("hopf axioms for %s over %r" % (H.name, group))

    for alpha in elems:
        ia = G.idempotents[alpha]
        comp = G.component(alpha)
        # unit
        for x in comp:
            ok = H.el_mul(ia, x) == x and H.el_mul(x, ia) == x
            rep.record("unit", (alpha,), ok)

    # associativity on raw monomial triples (implies all graded instances)
    basis = list(H.basis)
    last_monos = _last_monomials(H, reduced_arity)
    prod = {}
    for m1 in basis:
        for m2 in basis:
            prod[(m1, m2)] = list(H.mul(m1, m2))
    for m1 in basis:
        for m2 in basis:
            t12 = prod[(m1, m2)]
            ok = True
            for m3 in last_monos:
                lhs: dict = {}
                for mono, c in t12:
                    for mo, c2 in prod[(mono, m3)]:
                        _acc(lhs, mo, c * c2)
                rhs: dict = {}
                for mono, c in prod[(m2, m3)]:
                    for mo, c2 in prod[(m1, mono)]:
                        _acc(rhs, mo, c * c2)
                if lhs != rhs:
                    ok = False
                    break
            rep.record("associativity", (m1, m2), ok)

    # coproduct multiplicativity on raw monomial pairs
    dtab = {m: list(H.delta(m)) for m in basis}
    for m1 in basis:
        d1 = {k: c for k, c in dtab[m1]}
        for m2 in last_monos:
            lhs = {}
            for mono, c in prod[(m1, m2)]:
                for key, c2 in dtab[mono]:
                    _acc(lhs, key, c * c2)
            rhs = H.t_mul(d1, {k: c for k, c in dtab[m2]}, 2)
            rep.record("coproduct multiplicative", (m1, m2), lhs == rhs)

    # coassociativity on raw monomials
    for m in basis:
        d = {k: c for k, c in dtab[m]}
        lhs = H.t_delta_leg(d, 0)
        rhs = H.t_delta_leg(d, 1)
        rep.record("coassociativity", (m,), lhs == rhs)

    for alpha in elems:
        for beta in elems:
            ab = group.add(alpha, beta)
            # coproduct of the unit
            ok = G.delta(G.idempotents[ab], alpha, beta) == H.t_outer(
                G.idempotents[alpha], G.idempotents[beta]
            )
            rep.record("coproduct of unit", (alpha, beta), ok)
            # graded coassociativity spot check: the projections commute
            # with the raw coproduct verified above
            for x in G.generators(ab):
                for gamma in elems:
                    abc = group.add(ab, gamma)
                    idg = G.idempotents[gamma]
                    xg = H.el_mul(G.idempotents[abc], x)
                    top = G.delta(xg, ab, gamma)
                    lhs = H.t_delta_leg(top, 0)
                    lhs = H.t_project_leg(
                        H.t_project_leg(lhs, 0, G.idempotents[alpha]),
                        1, G.idempotents[beta])
                    top2 = G.delta(xg, alpha, group.add(beta, gamma))
                    rhs = H.t_delta_leg(top2, 1)
                    rhs = H.t_project_leg(
                        H.t_project_leg(rhs, 1, G.idempotents[beta]),
                        2, idg)
                    rep.record("graded coassociativity", (alpha, beta, gamma), lhs == rhs)

    # counit
    rep.record("counit of unit", (), G.counit0(G.idempotents[zero]) == ctx.one)
    for x in G.component(zero):
        for y in _pair_slots(G, zero, reduced_arity):
            ok = G.counit0(H.el_mul(x, y)) == G.counit0(x) * G.counit0(y)
            rep.record("counit multiplicative", (), ok)
    for alpha in elems:
        for x in G.component(alpha):
            left = G.delta(x, zero, alpha)
            lhs = {}
            for (m1, m2), c in left.items():
                _acc(lhs, m2, c * H.counit(m1))
            right = G.delta(x, alpha, zero)
            rhs = {}
            for (m1, m2), c in right.items():
                _acc(rhs, m1, c * H.counit(m2))
            rep.record("counit axiom", (alpha,), lhs == x and rhs == x)

    # antipode
    for alpha in elems:
        na = group.neg(alpha)
        ia = G.idempotents[alpha]
        for x in G.component(zero):
            eps = G.counit0(x)
            d = G.delta(x, na, alpha)
            lhs: dict = {}
            for (m1, m2), c in d.items():
                sm1 = H.el_antipode({m1: ctx.one})
                for mono, mc in H.el_mul(sm1, {m2: ctx.one}).items():
                    _acc(lhs, mono, c * mc)
            d2 = G.delta(x, alpha, na)
            rhs: dict = {}
            for (m1, m2), c in d2.items():
                sm2 = H.el_antipode({m2: ctx.one})
                for mono, mc in H.el_mul({m1: ctx.one}, sm2).items():
                    _acc(rhs, mono, c * mc)
            want = el_scale(ia, eps)
            rep.record("antipode", (alpha,), lhs == want and rhs == want)
    return rep


def check_ribbon_axioms(G: GradedHopfData, reduced_arity: bool = False) -> AxiomReport:
    """Quasitriangularity, hexagons, and the graded ribbon relations."""
    H = G.H
    ctx = H.ctx
    group = G.group
    elems = group.elements()
    zero = group.zero()
    rep = AxiomReport("ribbon axioms for %s over %r" % (H.name, group))

    def u_alpha(alpha: tuple) -> dict:
        r = G.r(alpha, group.neg(alpha))
        out: dict = {}
        for (m1, m2), c in r.items():
            sm2 = H.el_antipode({m2: ctx.one})
            for mono, mc in H.el_mul(sm2, {m1: ctx.one}).items():
                _acc(out, mono, c * mc)
        return out

    for alpha in elems:
        for beta in elems:
            ab = group.add(alpha, beta)
            r = G.r(alpha, beta)
            # intertwiner: R Delta(x) = Delta^op(x) R
            for x in _pair_slots(G, ab, reduced_arity):
                lhs = H.t_mul(r, G.delta(x, alpha, beta), 2)
                rhs = H.t_mul(H.t_swap(G.delta(x, beta, alpha), 0, 1), r, 2)
                rep.record("R intertwiner", (alpha, beta), lhs == rhs)
            for gamma in elems:
                # hexagon on the second leg:
                # (id (x) Delta)(R) = R_{13} R_{12}
                bg = group.add(beta, gamma)
                r_bg = G.r(alpha, bg)
                lhs = H.t_delta_leg(r_bg, 1)
                lhs = H.t_project(
                    lhs, (G.idempotents[alpha], G.idempotents[beta], G.idempotents[gamma])
                )
                r_ag = G.r(alpha, gamma)
                r_ab = G.r(alpha, beta)
                unit = H.unit
                t13: dict = {}
                for (m1, m2), c in r_ag.items():
                    for mu, cu in unit.items():
                        _acc(t13, (m1, mu, m2), c * cu)
                t12: dict = {}
                for (m1, m2), c in r_ab.items():
                    for mu, cu in unit.items():
                        _acc(t12, (m1, m2, mu), c * cu)
                rhs = H.t_mul(t13, t12, 3)
                rep.record("hexagon (coproduct on leg 2)", (alpha, beta, gamma), lhs == rhs)
                # hexagon on the first leg:
                # (Delta (x) id)(R) = R_{13} R_{23}
                abg = group.add(alpha, beta)
                r_abg = G.r(abg, gamma)
                lhs = H.t_delta_leg(r_abg, 0)
                lhs = H.t_project(
                    lhs, (G.idempotents[alpha], G.idempotents[beta], G.idempotents[gamma])
                )
                r_ag = G.r(alpha, gamma)
                r_bg = G.r(beta, gamma)
                t13 = {}
                for (m1, m2), c in r_ag.items():
                    for mu, cu in unit.items():
                        _acc(t13, (m1, mu, m2), c * cu)
                t23: dict = {}
                for (m1, m2), c in r_bg.items():
                    for mu, cu in unit.items():
                        _acc(t23, (mu, m1, m2), c * cu)
                rhs = H.t_mul(t13, t23, 3)
                rep.record("hexagon (coproduct on leg 1)", (alpha, beta, gamma), lhs == rhs)

    # ribbon element relations
    us = {alpha: u_alpha(alpha) for alpha in elems}
    for alpha in elems:
        na = group.neg(alpha)
        va = G.v(alpha)
        # v^2 = u S(u)
        lhs = H.el_mul(va, va)
        rhs = H.el_mul(us[alpha], G.antipode(us[na]))
        rep.record("v^2 = u S(u)", (alpha,), lhs == rhs)
        # invertibility and centrality
        rep.record("v invertible", (alpha,), H.el_mul(va, G.v(alpha, -1)) == G.idempotents[alpha])
        for x in G.generators(alpha):
            rep.record("v central", (alpha,), H.el_mul(va, x) == H.el_mul(x, va))
        # S(v_alpha) = v_{-alpha}
        rep.record("S(v) = v", (alpha,), G.antipode(va) == G.v(na))
        # pivotal element g = u v^{-1}, group-like
        ga = G.pivotal(alpha)
        rep.record("pivotal g = u v^{-1}", (alpha,), H.el_mul(us[alpha], G.v(alpha, -1)) == ga)
    rep.record("counit of v", (), G.counit0(G.v(zero)) == ctx.one)
    rep.record("counit of g", (), G.counit0(G.pivotal(zero)) == ctx.one)
    for alpha in elems:
        for beta in elems:
            ab = group.add(alpha, beta)
            na, nb = group.neg(alpha), group.neg(beta)
            lhs = G.delta(G.pivotal(ab), alpha, beta)
            rhs = H.t_outer(G.pivotal(alpha), G.pivotal(beta))
            rep.record("pivotal group-like", (alpha, beta), lhs == rhs)
            # Delta(v) = (v (x) v) (S (x) id)(R_{-a,b}) tau((S (x) id)(R_{-b,a}))
            lhs = G.delta(G.v(ab), alpha, beta)
            f1 = H.t_apply(G.r(na, beta), 0, lambda m: H.antipode(m))
            f2 = H.t_swap(H.t_apply(G.r(nb, alpha), 0, lambda m: H.antipode(m)), 0, 1)
            rhs = H.t_mul(H.t_outer(G.v(alpha), G.v(beta)), H.t_mul(f1, f2, 2), 2)
            rep.record("coproduct of v", (alpha, beta), lhs == rhs)
    return rep


def check_unimodular_axioms(G: GradedHopfData) -> AxiomReport:
    """The two-sided cointegral and the graded right-integral property."""
    H = G.H
    ctx = H.ctx
    group = G.group
    elems = group.elements()
    zero = group.zero()
    rep = AxiomReport("unimodularity axioms for %s over %r" % (H.name, group))
    lam0 = G.cointegral()
    rep.record("integral of cointegral", (), G.integral(lam0) == ctx.one)
    for x in G.component(zero):
        eps = G.counit0(x)
        want = el_scale(lam0, eps)
        ok = H.el_mul(x, lam0) == want and H.el_mul(lam0, x) == want
        rep.record("cointegral two-sided", (), ok)
    for alpha in elems:
        for beta in elems:
            ab = group.add(alpha, beta)
            for x in G.component(ab):
                d = G.delta(x, alpha, beta)
                lhs: dict = {}
                for (m1, m2), c in d.items():
                    s = H.integral(m2)
                    if not s.is_zero():
                        _acc(lhs, m1, c * s)
                rhs = el_scale(G.idempotents[alpha], G.integral(x))
                rep.record("right integral", (alpha, beta), lhs == rhs)
    return rep


def drinfeld_matrix(H: HopfAlgebraData) -> tuple:
    """Matrix of the Drinfeld map f -> f(M') M'' in the monomial basis."""
    if H.m_tensor is None:
        raise DimensionMismatch("no M-matrix data available")
    index = {m: i for i, m in enumerate(H.basis)}
    n = len(index)
    cols: list = [dict() for _ in range(n)]
    for (m1, m2), c in H.m_tensor.items():
        col = cols[index[m1]]
        _acc(col, index[m2], c)
    return cols, n


def drinfeld_rank(H) -> tuple:
    """Exact rank of the Drinfeld map and the algebra dimension."""
    if isinstance(H, GradedHopfData):
        H = H.H
    cols, n = drinfeld_matrix(H)
    # Gaussian elimination on columns over the exact field
    pivots: dict = {}
    rank = 0
    for col in cols:
        col = dict(col)
        while col:
            r = min(col)
            piv = pivots.get(r)
            if piv is None:
                break
            f = col[r] * piv[r].inverse()
            for j, c in piv.items():
                cur = col.get(j, H.ctx.zero) - f * c
                if cur.is_zero():
                    col.pop(j, None)
                else:
                    col[j] = cur
        if col:
            pivots[min(col)] = col
            rank += 1
    return rank, n


def is_factorizable(H) -> bool:
    """Whether the Drinfeld map is bijective."""
    rank, n = drinfeld_rank(H)
    return rank == n
