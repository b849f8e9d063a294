"""Completion engines: Buchberger for global orders, Mora for local orders.

Both engines work fraction-free: S-polynomials cross-multiply leading
coefficients instead of dividing, and every intermediate polynomial is kept
primitive (common coefficient content removed).  Over parametric coefficient
fields this both bounds growth and keeps leading coefficients meaningful for
the stratification workflow.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional

from .orders import MonomialOrder, OrderClass
from .poly import Monomial, Poly

DEFAULT_STEP_BUDGET = 10 ** 6
_BUDGET_ENV = "LOCALSTD_STEP_BUDGET"


def default_step_budget() -> int:
    raw = os.environ.get(_BUDGET_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return DEFAULT_STEP_BUDGET


class OrderClassError(ValueError):
    """A pipeline was fed a monomial order of the wrong class."""


class StepBudgetExceeded(RuntimeError):
    """A reduction loop exceeded its configured step budget."""


@dataclass(frozen=True)
class PolySet:
    """Duplicate-free list of nonzero polynomials sharing context and order."""

    elements: tuple[Poly, ...]
    order: MonomialOrder

    def __init__(self, elements: Iterable[Poly], order: MonomialOrder):
        seen = []
        ctx = None
        for p in elements:
            if p.is_zero():
                raise ValueError("PolySet elements must be nonzero")
            if ctx is None:
                ctx = p.ctx
            elif p.ctx != ctx:
                raise ValueError("PolySet elements must share one context")
            if p not in seen:
                seen.append(p)
        if ctx is None:
            raise ValueError("PolySet must not be empty")
        object.__setattr__(self, "elements", tuple(seen))
        object.__setattr__(self, "order", order)

    @property
    def ctx(self):
        return self.elements[0].ctx

    def leading_monomials(self) -> list[Monomial]:
        return [p.leading_monomial(self.order) for p in self.elements]

    def with_order(self, order: MonomialOrder) -> "PolySet":
        return PolySet(self.elements, order)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class CriticalPair:
    i: int
    j: int
    lcm: Monomial

    def __post_init__(self):
        if not self.i < self.j:
            raise ValueError("pair indices must satisfy i < j")


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps: Optional[int]):
        self.left = default_step_budget() if steps is None else steps

    def tick(self, n: int = 1):
        self.left -= n
        if self.left < 0:
            raise StepBudgetExceeded("reduction step budget exceeded")


# ---------------------------------------------------------------------------
# elementary operations
# ---------------------------------------------------------------------------

def s_polynomial(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    """Cross-multiplied S-polynomial; the shared leading monomial cancels."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    l = mf.lcm(mg)
    a = f.mul_term(cg, l.quo(mf))
    b = g.mul_term(cf, l.quo(mg))
    return (a - b).primitive(order)


def ecart(f: Poly, order: MonomialOrder) -> int:
    """Total degree minus leading-monomial degree."""
    if f.is_zero():
        raise ValueError("ecart of the zero polynomial")
    return f.total_degree() - f.leading_monomial(order).degree


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

def normal_form(f: Poly, G: PolySet, step_budget: Optional[int] = None) -> Poly:
    """Classical multivariate division remainder (global orders only).

    No monomial of the remainder is divisible by any leading monomial of G,
    and f - r lies in the ideal generated by G.
    """
    order = G.order
    if order.classify(f.ctx.arity) is not OrderClass.GLOBAL:
        raise OrderClassError("normal_form requires a global monomial order")
    budget = _Budget(step_budget)
    return _reduce_full(f, list(G.elements), order, budget)


def _reduce_full(f: Poly, gens: list[Poly], order: MonomialOrder, budget: _Budget) -> Poly:
    field = f.ctx.field
    lts = [g.leading_term(order) for g in gens]
    h = f
    r = f.ctx.zero()
    u = field.one
    while h:
        budget.tick()
        ch, mh = h.leading_term(order)
        hit = None
        for (cg, mg), g in zip(lts, gens):
            if mg.divides(mh):
                hit = (cg, mg, g)
                break
        if hit is None:
            r = r + Poly(h.ctx, {mh: ch})
            h = h - Poly(h.ctx, {mh: ch})
            continue
        cg, mg, g = hit
        h = h.scale(cg) - g.mul_term(ch, mh.quo(mg))
        r = r.scale(cg)
        u = u * cg
    if u != field.one:
        r = r.scale(field.one / u)
    return r


def weak_normal_form(f: Poly, G: PolySet, step_budget: Optional[int] = None) -> Poly:
    """Mora weak normal form.

    Returns h with u*f = h modulo <G> for some unit u of the ring implemented
    by the order, such that no leading monomial of the (growing) divisor pool
    divides the leading monomial of h.  Works for local orders; for global
    orders it degenerates to a leading-term reduction loop.
    """
    order = G.order
    if order.classify(f.ctx.arity) is OrderClass.MIXED:
        raise OrderClassError("weak_normal_form rejects mixed monomial orders")
    budget = _Budget(step_budget)
    return _weak_nf(f, list(G.elements), order, budget)


def _weak_nf(f: Poly, gens: list[Poly], order: MonomialOrder, budget: _Budget) -> Poly:
    h = f
    pool = list(gens)
    pool_lm = [g.leading_monomial(order) for g in pool]
    pool_ecart = [ecart(g, order) for g in pool]
    while h:
        budget.tick()
        mh = h.leading_monomial(order)
        best = None
        for idx, mg in enumerate(pool_lm):
            if mg.divides(mh):
                e = pool_ecart[idx]
                if best is None or e < pool_ecart[best]:
                    best = idx
        if best is None:
            return h
        eh = ecart(h, order)
        if eh < pool_ecart[best]:
            pool.append(h)
            pool_lm.append(mh)
            pool_ecart.append(eh)
        h = s_polynomial(h, pool[best], order)
    return h


# ---------------------------------------------------------------------------
# completion (shared pair machinery)
# ---------------------------------------------------------------------------

def _update(G, P, ih, f, lm, order):
    """Gebauer-Moeller pair update: add basis index ih, pruning critical
    pairs with the product and chain criteria."""
    mh = lm[ih]

    def lcm_(i, j):
        return lm[i].lcm(lm[j])

    C = set(G)
    D = set()
    while C:
        ig = min(C)
        C.remove(ig)
        mg = lm[ig]
        l = mh.lcm(mg)

        def divides_lcm(ip):
            return mh.lcm(lm[ip]).divides(l)

        if mh.mul(mg) == l or (
                not any(divides_lcm(ip) for ip in C)
                and not any(divides_lcm(p[1]) for p in D)):
            D.add((ih, ig))

    E = set()
    while D:
        ih_, ig = min(D)
        D.remove((ih_, ig))
        if mh.mul(lm[ig]) != mh.lcm(lm[ig]):
            E.add((ih_, ig))

    P_new = set()
    while P:
        ig1, ig2 = min(P)
        P.remove((ig1, ig2))
        l = lcm_(ig1, ig2)
        if (not mh.divides(l)
                or lcm_(ig1, ih).__eq__(l)
                or lcm_(ig2, ih).__eq__(l)):
            P_new.add((ig1, ig2))
    P_new |= E

    G_new = {ig for ig in G if not mh.divides(lm[ig])}
    G_new.add(ih)
    return G_new, P_new


def _select_pair(P, lm, order):
    """Normal selection: minimal lcm (degree first, then order key)."""
    def rank(pair):
        l = lm[pair[0]].lcm(lm[pair[1]])
        return (l.degree, order.sort_key(l), pair)
    return min(P, key=rank)


def _completion(seed: Iterable[Poly], order: MonomialOrder, reducer, budget: _Budget):
    """Run pair completion starting from the seed, reducing S-polynomials
    with the supplied reducer (full division or Mora weak normal form)."""
    f: list[Poly] = []
    lm: list[Monomial] = []
    G: set[int] = set()
    P: set[tuple[int, int]] = set()

    def add(p: Poly):
        nonlocal G, P
        f.append(p)
        lm.append(p.leading_monomial(order))
        G, P = _update(G, P, len(f) - 1, f, lm, order)

    for p in seed:
        p = p.primitive(order)
        if not p.is_zero() and p not in f:
            add(p)

    while P:
        i, j = _select_pair(P, lm, order)
        P.remove((i, j))
        budget.tick()
        sp = s_polynomial(f[i], f[j], order)
        if sp.is_zero():
            continue
        h = reducer(sp, [f[k] for k in sorted(G)], order, budget)
        if not h.is_zero():
            add(h.primitive(order))

    return [f[k] for k in sorted(G)]


def _minimalize(basis: list[Poly], order: MonomialOrder) -> list[Poly]:
    """Drop elements whose leading monomial is a proper multiple of another's.

    Elements sharing the same leading monomial are all kept: with parametric
    coefficients their leading coefficients carry distinct degeneration data.
    """
    ranked = sorted(basis, key=lambda p: (order.sort_key(p.leading_monomial(order)),
                                          len(p), p.to_str(order)))
    lms = [p.leading_monomial(order) for p in ranked]
    keep = []
    for i, p in enumerate(ranked):
        mi = lms[i]
        redundant = any(lms[j].divides(mi) and lms[j] != mi
                        for j in range(len(ranked)) if j != i)
        if not redundant:
            keep.append(p)
    return keep


def _normalize_output(basis: list[Poly], order: MonomialOrder) -> list[Poly]:
    """Monic for numeric leading coefficients; parametric ones left intact."""
    out = []
    for p in basis:
        field = p.ctx.field
        lc = p.leading_coefficient(order)
        if field.is_constant(lc):
            out.append(p.monic(order))
        else:
            out.append(p.primitive(order))
    return out


def buchberger(F: PolySet, step_budget: Optional[int] = None,
               interreduce: bool = False) -> PolySet:
    """Groebner basis of <F> under a global order, minimalized."""
    order = F.order
    if order.classify(F.ctx.arity) is not OrderClass.GLOBAL:
        raise OrderClassError("buchberger requires a global monomial order")
    budget = _Budget(step_budget)

    def reducer(p, gens, o, b):
        return _reduce_full(p, gens, o, b)

    basis = _completion(F.elements, order, reducer, budget)
    basis = _minimalize(basis, order)
    if interreduce:
        basis = _interreduce(basis, order, budget)
    basis = _normalize_output(basis, order)
    return PolySet(basis, order)


def standard_basis(F: PolySet, step_budget: Optional[int] = None) -> PolySet:
    """Mora standard basis of <F> in the local ring, minimalized."""
    order = F.order
    cls = order.classify(F.ctx.arity)
    if cls is OrderClass.GLOBAL:
        raise OrderClassError("standard_basis requires a local order; use buchberger")
    if cls is OrderClass.MIXED:
        raise OrderClassError("standard_basis rejects mixed monomial orders")
    budget = _Budget(step_budget)

    def reducer(p, gens, o, b):
        return _weak_nf(p, gens, o, b)

    basis = _completion(F.elements, order, reducer, budget)
    basis = _minimalize(basis, order)
    basis = _normalize_output(basis, order)
    return PolySet(basis, order)


def _interreduce(basis: list[Poly], order: MonomialOrder, budget: _Budget) -> list[Poly]:
    """Fully reduce each tail against the others (global orders only)."""
    out = list(basis)
    changed = True
    while changed:
        changed = False
        for i in range(len(out)):
            others = [out[j] for j in range(len(out)) if j != i]
            if not others:
                continue
            r = _reduce_full(out[i], others, order, budget)
            if r.is_zero():
                out.pop(i)
                changed = True
                break
            r = r.primitive(order)
            if r != out[i]:
                out[i] = r
                changed = True
    return out
