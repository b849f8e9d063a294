"""Simple singularity toolkit: A/D/E normal forms, weighted homogeneity,
Hessian corank, numeric classification, versal deformations, Kuranishi-space
stratification catalogs with verifiable witnesses, and the special
1-parameter adjacency families.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .invariants import milnor_local, tyurina_local
from .orders import MonomialOrder, neg_grevlex
from .parser import parse_poly
from .poly import Monomial, Poly, VarCtx


@dataclass(frozen=True)
class SingularityClass:
    family: str   # "A" | "D" | "E"
    index: int

    def __post_init__(self):
        if self.family == "A":
            if self.index < 1:
                raise ValueError("A_n needs n >= 1")
        elif self.family == "D":
            if self.index < 4:
                raise ValueError("D_n needs n >= 4")
        elif self.family == "E":
            if self.index not in (6, 7, 8):
                raise ValueError("E_n needs n in {6, 7, 8}")
        else:
            raise ValueError("family must be one of A, D, E")

    @property
    def name(self) -> str:
        return "%s%d" % (self.family, self.index)

    def __str__(self):
        return self.name

    @staticmethod
    def parse(text: str) -> "SingularityClass":
        text = text.strip().upper()
        if len(text) < 2 or text[0] not in "ADE":
            raise ValueError("bad singularity class %r" % text)
        return SingularityClass(text[0], int(text[1:]))


@dataclass(frozen=True)
class WeightVector:
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if not all(w > 0 for w in self.weights):
            raise ValueError("weights must be positive rationals")

    @property
    def degree(self) -> int:
        """Common denominator d with all d*w_i integral."""
        from math import lcm
        return lcm(*(w.denominator for w in self.weights))

    @property
    def integer_weights(self) -> tuple[int, ...]:
        d = self.degree
        return tuple(int(w * d) for w in self.weights)


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------

def _ambient_names(m: int) -> tuple[str, ...]:
    if m == 2:
        return ("y", "z")
    if m == 3:
        return ("x", "y", "z")
    if m == 4:
        return ("x", "y", "z", "t")
    return tuple("x%d" % i for i in range(1, m - 1)) + ("y", "z")


def normal_form(cls: SingularityClass, ambient_dim: int = 2) -> Poly:
    """The A/D/E polynomial in two distinguished variables plus a sum of
    squares in the remaining ones."""
    if ambient_dim < 2:
        raise ValueError("need at least two variables")
    names = _ambient_names(ambient_dim)
    ctx = VarCtx(names)
    y = ctx.variable("y")
    z = ctx.variable("z")
    n = cls.index
    if cls.family == "A":
        q = y ** 2 + z ** (n + 1)
    elif cls.family == "D":
        q = y ** 2 * z + z ** (n - 1)
    elif n == 6:
        q = y ** 3 + z ** 4
    elif n == 7:
        q = y ** 3 + y * z ** 3
    else:
        q = y ** 3 + z ** 5
    for name in names:
        if name not in ("y", "z"):
            q = q + ctx.variable(name) ** 2
    return q


# ---------------------------------------------------------------------------
# weighted homogeneity
# ---------------------------------------------------------------------------

def weight_vector(f: Poly) -> Optional[WeightVector]:
    """Positive rational weights with every exponent vector of weight 1, or
    None.  Rank-deficient supports get the smallest-denominator completion."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.has_parameters():
        raise ValueError("weight vectors need parameter-free polynomials")
    n = f.ctx.arity
    rows = [[Fraction(e) for e in m] + [Fraction(1)] for m in f.monomials()]
    # Gauss-Jordan over Q
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                fac = rows[i][c]
                rows[i] = [a - fac * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][n] != 0:
            return None  # inconsistent system
    free = [c for c in range(n) if c not in pivots]

    def solution(free_vals):
        w = [Fraction(0)] * n
        for c, v in zip(free, free_vals):
            w[c] = v
        for i, c in enumerate(pivots):
            w[c] = rows[i][n] - sum(rows[i][j] * w[j] for j in free)
        return w

    if not free:
        w = solution([])
        return WeightVector(tuple(w)) if all(x > 0 for x in w) else None
    # deterministic small search over free weights, preferring 1/2
    candidates = [Fraction(1, 2)] + [Fraction(p, q)
                                     for q in range(1, 13)
                                     for p in range(1, q + 1)]
    best = None
    for v in candidates:
        w = solution([v] * len(free))
        if all(x > 0 for x in w):
            score = max(x.denominator for x in w)
            if best is None or score < best[0]:
                best = (score, w)
    return WeightVector(tuple(best[1])) if best else None


def milnor_orlik(w: WeightVector) -> Fraction:
    """Product of (1/w_i - 1); weights must lie strictly inside (0, 1)."""
    out = Fraction(1)
    for wi in w.weights:
        if not 0 < wi < 1:
            raise ValueError("weight %s outside (0, 1)" % wi)
        out *= (1 / wi - 1)
    return out


# ---------------------------------------------------------------------------
# Hessian corank and classification
# ---------------------------------------------------------------------------

def _hessian_matrix(f: Poly):
    """Second partials at the origin as field elements."""
    n = f.ctx.arity
    field = f.ctx.field
    H = [[field.zero] * n for _ in range(n)]
    for i in range(n):
        di = f.partial_derivative(i)
        for j in range(i, n):
            c = di.partial_derivative(j).constant_coeff()
            H[i][j] = c
            H[j][i] = c
    return H


def _rank(mat, field) -> int:
    """Exact rank by Gaussian elimination over the coefficient field; with
    parameters present this is the generic rank."""
    m = [row[:] for row in mat]
    rows, cols = len(m), len(m[0]) if m else 0
    rank = 0
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        for i in range(r + 1, rows):
            if m[i][c]:
                fac = m[i][c] / pv
                m[i] = [a - fac * b for a, b in zip(m[i], m[r])]
        rank += 1
        r += 1
    return rank


def hessian_corank(f: Poly) -> int:
    """Arity minus the rank of the Hessian at the origin (generic rank when
    parameters are present)."""
    return f.ctx.arity - _rank(_hessian_matrix(f), f.ctx.field)


def _quadratic_kernel_change(f: Poly):
    """Invertible rational change of variables diagonalizing the quadratic
    part, kernel directions last.  Returns the list of new coordinate images
    (columns) as polynomials, kernel indices last."""
    n = f.ctx.arity
    field = f.ctx.field
    M = _hessian_matrix(f)  # 2*quadratic form matrix
    # symmetric congruence diagonalization (Lagrange), over the field
    T = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    M = [row[:] for row in M]

    def add_col(dst, src, fac):
        for i in range(n):
            M[i][dst] = M[i][dst] + fac * M[i][src]
        for i in range(n):
            T[i][dst] = T[i][dst] + fac * T[i][src]

    def add_row(dst, src, fac):
        for j in range(n):
            M[dst][j] = M[dst][j] + fac * M[src][j]

    def swap(i, j):
        for r in range(n):
            M[r][i], M[r][j] = M[r][j], M[r][i]
        M[i], M[j] = M[j], M[i]
        for r in range(n):
            T[r][i], T[r][j] = T[r][j], T[r][i]

    k = 0
    while k < n:
        if not M[k][k]:
            pivot = next((j for j in range(k + 1, n) if M[j][j]), None)
            if pivot is not None:
                swap(k, pivot)
            else:
                off = next((j for j in range(k + 1, n) if M[k][j]), None)
                if off is None:
                    # row/col k already zero beyond: move on if fully zero
                    if all(not M[k][j] for j in range(k, n)):
                        k += 1
                        continue
                    k += 1
                    continue
                add_col(k, off, field.one)
                add_row(k, off, field.one)
        if not M[k][k]:
            k += 1
            continue
        for j in range(k + 1, n):
            if M[k][j]:
                fac = -M[k][j] / M[k][k]
                add_col(j, k, fac)
                add_row(j, k, fac)
        k += 1
    kernel = [i for i in range(n) if not M[i][i]]
    regular = [i for i in range(n) if M[i][i]]
    return T, regular, kernel


def _binary_cubic_structure(a, b, c, d, field) -> str:
    """Factor structure of a*y^3+b*y^2 z+c*y z^2+d*z^3 over C:
    'three', 'two', 'one' distinct linear factors, or 'zero'."""
    if not (a or b or c or d):
        return "zero"
    disc = (field.from_fraction(18) * a * b * c * d
            - field.from_fraction(4) * b ** 3 * d
            + b ** 2 * c ** 2
            - field.from_fraction(4) * a * c ** 3
            - field.from_fraction(27) * a ** 2 * d ** 2)
    if disc:
        return "three"
    # Hessian covariant: vanishes identically iff perfect cube
    h1 = field.from_fraction(3) * a * c - b ** 2          # coeff of y^2
    h2 = field.from_fraction(9) * a * d - b * c           # coeff of y z
    h3 = field.from_fraction(3) * b * d - c ** 2          # coeff of z^2
    if not (h1 or h2 or h3):
        return "one"
    return "two"


def classify_simple(f: Poly, mu: Optional[int] = None) -> Optional[SingularityClass]:
    """Arnol'd class of the isolated singular point at the origin, or None
    when the germ is not simple (corank >= 3, or out-of-range invariants).

    Classification is by corank, Milnor number, and the factor structure of
    the residual binary cubic after splitting off the nondegenerate part of
    the quadratic form; no normal-form reduction is performed.
    """
    if f.has_parameters():
        raise ValueError("classification needs a parameter-free polynomial")
    for i in range(f.ctx.arity):
        if f.partial_derivative(i).constant_coeff():
            raise ValueError("the origin is not a critical point")
    if mu is None:
        mu = milnor_local(f).dimension
    if mu < 1:
        return None
    crk = hessian_corank(f)
    if crk == 0:
        return SingularityClass("A", 1) if mu == 1 else None
    if crk == 1:
        return SingularityClass("A", mu)
    if crk != 2:
        return None
    T, regular, kernel = _quadratic_kernel_change(f)
    if len(kernel) != 2:
        return None
    ctx = f.ctx
    images = {}
    for old in range(ctx.arity):
        expr = ctx.zero()
        for new in range(ctx.arity):
            if T[old][new]:
                expr = expr + ctx.variable(ctx.variables[new]).scale(T[old][new])
        images[ctx.variables[old]] = expr
    g = f.substitute(images)
    ky, kz = kernel
    field = ctx.field

    def cubic_coeff(ey, ez):
        exps = [0] * ctx.arity
        exps[ky] = ey
        exps[kz] = ez
        return g.coeff(Monomial(exps))

    a, b, c, d = (cubic_coeff(3, 0), cubic_coeff(2, 1),
                  cubic_coeff(1, 2), cubic_coeff(0, 3))
    structure = _binary_cubic_structure(a, b, c, d, field)
    if structure in ("three", "two"):
        return SingularityClass("D", mu) if mu >= 4 else None
    if structure == "one" and mu in (6, 7, 8):
        return SingularityClass("E", mu)
    return None


# ---------------------------------------------------------------------------
# versal deformation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeformationFamily:
    base: Poly
    monomials: tuple[Monomial, ...]   # ascending degree; lam_i multiplies monomials[i]
    parameters: tuple[str, ...]
    family: Poly

    @property
    def tyurina_number(self) -> int:
        return len(self.monomials)


def build_versal_family(f: Poly, order: Optional[MonomialOrder] = None,
                        prefix: str = "lam") -> DeformationFamily:
    """Deform by the Tyurina quotient basis, one fresh parameter each.

    Parameters pair with the quotient monomials in ascending degree order,
    so lam0 multiplies 1 whenever the ideal is not the unit ideal.
    """
    report = tyurina_local(f, order if order is not None else neg_grevlex())
    monoms = list(report.quotient_basis)
    monoms.reverse()  # local ascending = descending degree; flip
    taken = set(f.ctx.variables) | set(f.ctx.parameters)
    names = []
    for i in range(len(monoms)):
        name = "%s%d" % (prefix, i)
        while name in taken:
            name = name + "_"
        taken.add(name)
        names.append(name)
    new_ctx = f.ctx.with_params(names)
    fam = f.convert_to(new_ctx)
    for name, m in zip(names, monoms):
        fam = fam + Poly(new_ctx, {m: new_ctx.field.param(name)})
    return DeformationFamily(base=f, monomials=tuple(monoms),
                             parameters=tuple(names), family=fam)


# ---------------------------------------------------------------------------
# stratification catalogs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Stratum:
    """One stratum of a Kuranishi-space stratification.

    equations cut the stratum out of the deformation-coefficient space;
    family_src is a rational 1-or-more parameter witness family whose generic
    member realizes the expected type; v_point maps deformation coefficients
    to expressions in the witness parameters (absent when only a complex
    branch parameterizes the stratum, see notes).
    """

    name: str
    expected: SingularityClass
    expected_mu: int
    equations: tuple[str, ...]
    family_src: str
    witness_params: tuple[str, ...]
    side_conditions: tuple[str, ...] = ()
    v_point: tuple[tuple[str, str], ...] = ()
    v_names: tuple[str, ...] = ()
    notes: str = ""
    flagged_variants: tuple[str, ...] = ()

    def family_ctx(self) -> VarCtx:
        return VarCtx(("Y", "Z"), self.witness_params)

    def family(self) -> Poly:
        return parse_poly(self.family_src, self.family_ctx())

    def to_json_dict(self) -> dict:
        d = {
            "name": self.name,
            "equations": list(self.equations),
            "expected": self.expected.name,
            "expected_mu": self.expected_mu,
            "witness_params": list(self.witness_params),
            "side_conditions": list(self.side_conditions),
            "family": self.family_src,
        }
        if self.notes:
            d["notes"] = self.notes
        return d


@dataclass(frozen=True)
class StratumVerification:
    stratum: Stratum
    witness: dict
    mu: int
    tau: int
    corank: int
    classified: Optional[SingularityClass]
    equations_checked: bool
    ok: bool

    def to_json_dict(self) -> dict:
        return {
            "name": self.stratum.name,
            "equations": list(self.stratum.equations),
            "expected": self.stratum.expected.name,
            "witness": {k: str(v) for k, v in self.witness.items()},
            "mu": self.mu,
            "tau": self.tau,
            "corank": self.corank,
            "class": self.classified.name if self.classified else None,
            "equations_checked": self.equations_checked,
            "ok": self.ok,
        }


def _an_catalog(n: int) -> list[Stratum]:
    strata = []
    for m in range(1, n + 1):
        params = tuple("v%d" % i for i in range(m + 1, n + 1))
        tail = " + ".join("v%d*Z^%d" % (i, i) for i in range(m + 1, n + 1))
        src = "Y^2 + Z^%d" % (n + 1) + (" + " + tail if tail else "")
        eqs = tuple("v%d" % k for k in range(2, m + 1))
        side = ("v%d" % (m + 1),) if m < n else ()
        vpt = tuple(("v%d" % k, "0") for k in range(2, m + 1)) + \
            tuple(("v%d" % k, "v%d" % k) for k in range(m + 1, n + 1))
        strata.append(Stratum(
            name="L" if m == 1 else "V2^%d" % m,
            expected=SingularityClass("A", m), expected_mu=m,
            equations=eqs, family_src=src, witness_params=params,
            side_conditions=side, v_point=vpt,
            v_names=tuple("v%d" % k for k in range(2, n + 1)),
        ))
    return strata


def _dn_catalog(n: int) -> list[Stratum]:
    vnames = tuple("v%d" % k for k in range(0, n - 1))
    w2 = "v0^2 - 4*v1*v2"

    def tail(lo: int) -> str:
        return "".join(" + v%d*Z^%d" % (k, k) for k in range(lo, n - 1))

    base = "Y^2*Z + Z^%d" % (n - 1)
    strata = [
        Stratum("L", SingularityClass("A", 1), 1, (),
                base + " + v0*Y*Z + v1*Y^2" + tail(2),
                tuple("v%d" % k for k in range(0, n - 1)),
                side_conditions=(w2,),
                v_point=tuple((v, v) for v in vnames), v_names=vnames),
        Stratum("W2", SingularityClass("A", 2), 2, (w2,),
                base + " + (w1*Y + w2*Z)^2" + tail(3),
                ("w1", "w2") + tuple("v%d" % k for k in range(3, n - 1)),
                side_conditions=("w1", "w2") + (("w2^2 + v3*w1^2",) if n >= 5 else ()),
                v_point=(("v0", "2*w1*w2"), ("v1", "w1^2"), ("v2", "w2^2"))
                + tuple(("v%d" % k, "v%d" % k) for k in range(3, n - 1)),
                v_names=vnames),
        Stratum("V0&V1", SingularityClass("A", 3), 3, ("v0", "v1"),
                base + tail(2),
                tuple("v%d" % k for k in range(2, n - 1)),
                side_conditions=("v2",),
                v_point=(("v0", "0"), ("v1", "0"))
                + tuple(("v%d" % k, "v%d" % k) for k in range(2, n - 1)),
                v_names=vnames),
    ]
    if n >= 5:
        strata.append(Stratum(
            "W2&W3", SingularityClass("A", 3), 3,
            (w2, "v1*v3 + v2"),
            base + " + v1*(Y + s*Z)^2 - s^2*Z^3" + tail(4),
            ("v1", "s") + tuple("v%d" % k for k in range(4, n - 1)),
            side_conditions=("v1", "s",
                             "v1*v4 - s^2" if n >= 6 else "v1 - s^2"),
            v_point=(("v0", "2*v1*s"), ("v1", "v1"), ("v2", "v1*s^2"),
                     ("v3", "-s^2"))
            + tuple(("v%d" % k, "v%d" % k) for k in range(4, n - 1)),
            v_names=vnames))
    # V chain: D_{k+2} on V0^k
    for k in range(2, n - 1):
        params = tuple("v%d" % j for j in range(k + 1, n - 1))
        side = ("v%d" % (k + 1),) if k + 1 <= n - 2 else ()
        strata.append(Stratum(
            "V0^%d" % k, SingularityClass("D", k + 2), k + 2,
            tuple("v%d" % j for j in range(0, k + 1)),
            base + tail(k + 1), params, side_conditions=side,
            v_point=tuple(("v%d" % j, "0") for j in range(0, k + 1))
            + tuple(("v%d" % j, "v%d" % j) for j in range(k + 1, n - 1)),
            v_names=vnames))
    if n >= 6:
        strata.append(Stratum(
            "W2^4", SingularityClass("A", 4), 4,
            (w2, "v1*v3 + v2", "v1*v4 + v3"),
            base + " + (w1*Y - w1^2*w4*Z)^2 - w1^2*w4^2*Z^3 + w4^2*Z^4" + tail(5),
            ("w1", "w4") + tuple("v%d" % k for k in range(5, n - 1)),
            side_conditions=("w1", "w4") + (("w1^2*v5 + w4^2",) if n >= 7 else ()),
            v_point=(("v0", "-2*w1^3*w4"), ("v1", "w1^2"), ("v2", "w1^4*w4^2"),
                     ("v3", "-w1^2*w4^2"), ("v4", "w4^2"))
            + tuple(("v%d" % k, "v%d" % k) for k in range(5, n - 1)),
            v_names=vnames))
    if n == 6:
        strata.append(Stratum(
            "W2^5", SingularityClass("A", 5), 5,
            (w2, "v1*v3 + v2", "v1*v4 + v3", "v1 + v4"),
            "Z*Y^2 - Z^5 - v1*(Y + v1*Z)^2 - v1^2*Z^3 - v1*Z^4",
            ("v1",), side_conditions=("v1",),
            v_point=(), v_names=vnames,
            notes=("stratum has no nonzero rational points; witness family is "
                   "the complex-branch parameterization composed with the "
                   "rational linear change (Y,Z)->(iY,-Z)")))
    return strata


def _e6_catalog() -> list[Stratum]:
    vnames = ("v0", "v1", "v2", "v3", "v4")
    w2 = "v0^2 - 4*v1*v2"
    w3 = "v1^3*v4^2 - v2*(v1*v3 + v2)^2"
    base = "Y^3 + Z^4"
    return [
        Stratum("L", SingularityClass("A", 1), 1, (),
                base + " + v0*Y*Z + v1*Y^2 + v2*Z^2 + v3*Y*Z^2 + v4*Z^3",
                vnames, side_conditions=(w2,),
                v_point=tuple((v, v) for v in vnames), v_names=vnames),
        Stratum("W2", SingularityClass("A", 2), 2, (w2,),
                base + " + (w1*Y + w2*Z)^2 + v3*Y*Z^2 + v4*Z^3",
                ("w1", "w2", "v3", "v4"),
                side_conditions=("w1", "w2", "w1^3*v4 - w1^2*w2*v3 - w2^3"),
                v_point=(("v0", "2*w1*w2"), ("v1", "w1^2"), ("v2", "w2^2"),
                         ("v3", "v3"), ("v4", "v4")),
                v_names=vnames),
        Stratum("W2^3", SingularityClass("A", 3), 3, (w2, w3),
                base + " + v1*(Y + u*Z)^2 + v3*Y*Z^2 + u*(v3 + u^2)*Z^3",
                ("v1", "u", "v3"),
                side_conditions=("v1", "u", "4*v1 - (v3 + 3*u^2)^2"),
                v_point=(("v0", "2*v1*u"), ("v1", "v1"), ("v2", "v1*u^2"),
                         ("v3", "v3"), ("v4", "u*(v3 + u^2)")),
                v_names=vnames),
        Stratum("V0^2", SingularityClass("D", 4), 4, ("v0", "v1", "v2"),
                base + " + v3*Y*Z^2 + v4*Z^3", ("v3", "v4"),
                side_conditions=("4*v3^3 + 27*v4^2",),
                v_point=(("v0", "0"), ("v1", "0"), ("v2", "0"),
                         ("v3", "v3"), ("v4", "v4")),
                v_names=vnames),
        Stratum("W2^4", SingularityClass("A", 4), 4,
                (w2, w3, "4*v1^3 - (v1*v3 + 3*v2)^2"),
                base + " + 1/4*(3*u^2 + v3)^2*(Y + u*Z)^2 + v3*Y*Z^2 + u*(v3 + u^2)*Z^3",
                ("u", "v3"),
                side_conditions=("u", "3*u^2 + v3"),
                v_point=(("v0", "1/2*(3*u^2 + v3)^2*u"),
                         ("v1", "1/4*(3*u^2 + v3)^2"),
                         ("v2", "1/4*(3*u^2 + v3)^2*u^2"),
                         ("v3", "v3"), ("v4", "u*(v3 + u^2)")),
                v_names=vnames),
        Stratum("V&V0^2", SingularityClass("D", 5), 5,
                ("v0", "v1", "v2", "4*v3^3 + 27*v4^2"),
                base + " - 3*a^2*Y*Z^2 - 2*a^3*Z^3", ("a",),
                side_conditions=("a",),
                v_point=(("v0", "0"), ("v1", "0"), ("v2", "0"),
                         ("v3", "-3*a^2"), ("v4", "-2*a^3")),
                v_names=vnames),
        Stratum("W&V0&V2&V4", SingularityClass("A", 5), 5,
                ("v0", "v2", "v4", "v3^2 - 4*v1"),
                base + " + 1/4*v3^2*Y^2 + v3*Y*Z^2", ("v3",),
                side_conditions=("v3",),
                v_point=(("v0", "0"), ("v1", "1/4*v3^2"), ("v2", "0"),
                         ("v3", "v3"), ("v4", "0")),
                v_names=vnames),
    ]


def _e7_catalog() -> list[Stratum]:
    vnames = ("v0", "v1", "v2", "v3", "v4", "v5")
    w2 = "v0^2 - 4*v1*v2"
    w3 = "v1^3*v4^2 - v2*(v1*v3 + v2)^2"
    w4 = "16*v1^5*v2 - ((v1*v3 + 3*v2)^2 - 4*v1^3*v5)^2"
    w4_flagged = "16*v1^5*v2 - ((v1*v2 + 3*v2)^2 - 4*v1^3*v5)^2"
    w5 = "v1*v5^2 - v2"
    w5p = "v1*(v1^2 - 9*v2*v5)^2 - 81*v2^3"
    w6 = "16*v1^5 - 729*v2^3"
    base = "Y^3 + Y*Z^3"
    return [
        Stratum("L", SingularityClass("A", 1), 1, (),
                base + " + v0*Y*Z + v1*Y^2 + v2*Z^2 + v3*Y*Z^2 + v4*Z^3 + v5*Z^4",
                vnames, side_conditions=(w2,),
                v_point=tuple((v, v) for v in vnames), v_names=vnames),
        Stratum("W2", SingularityClass("A", 2), 2, (w2,),
                base + " + (w1*Y + w2*Z)^2 + v3*Y*Z^2 + v4*Z^3 + v5*Z^4",
                ("w1", "w2", "v3", "v4", "v5"),
                side_conditions=("w1", "w2", "w2^2*v3*w1^2 + w2^4 - w2*w1^3*v4"),
                v_point=(("v0", "2*w1*w2"), ("v1", "w1^2"), ("v2", "w2^2"),
                         ("v3", "v3"), ("v4", "v4"), ("v5", "v5")),
                v_names=vnames),
        Stratum("W2^3", SingularityClass("A", 3), 3, (w2, w3),
                base + " + v1*(Y + u*Z)^2 + v3*Y*Z^2 + u*(v3 + u^2)*Z^3 + v5*Z^4",
                ("v1", "u", "v3", "v5"),
                side_conditions=("v1", "u", "4*v1*(v5 - u) - (v3 + 3*u^2)^2"),
                v_point=(("v0", "2*v1*u"), ("v1", "v1"), ("v2", "v1*u^2"),
                         ("v3", "v3"), ("v4", "u*(v3 + u^2)"), ("v5", "v5")),
                v_names=vnames),
        Stratum("V0^2", SingularityClass("D", 4), 4, ("v0", "v1", "v2"),
                base + " + v3*Y*Z^2 + v4*Z^3 + v5*Z^4", ("v3", "v4", "v5"),
                side_conditions=("4*v3^3 + 27*v4^2",),
                v_point=(("v0", "0"), ("v1", "0"), ("v2", "0"),
                         ("v3", "v3"), ("v4", "v4"), ("v5", "v5")),
                v_names=vnames),
        Stratum("V&V0^2", SingularityClass("D", 5), 5,
                ("v0", "v1", "v2", "4*v3^3 + 27*v4^2"),
                base + " - 3*a^2*Y*Z^2 - 2*a^3*Z^3 + v5*Z^4", ("a", "v5"),
                side_conditions=("a", "a - v5"),
                v_point=(("v0", "0"), ("v1", "0"), ("v2", "0"),
                         ("v3", "-3*a^2"), ("v4", "-2*a^3"), ("v5", "v5")),
                v_names=vnames),
        Stratum("V0^4", SingularityClass("E", 6), 6,
                ("v0", "v1", "v2", "v3", "v4"),
                base + " + v5*Z^4", ("v5",), side_conditions=("v5",),
                v_point=(("v0", "0"), ("v1", "0"), ("v2", "0"),
                         ("v3", "0"), ("v4", "0"), ("v5", "v5")),
                v_names=vnames),
        Stratum("V'&V0^2", SingularityClass("D", 6), 6,
                ("v0", "v1", "v2", "v3 + 3*v5^2", "v4 + 2*v5^3"),
                base + " - 3*a^2*Y*Z^2 - 2*a^3*Z^3 + a*Z^4", ("a",),
                side_conditions=("a",),
                v_point=(("v0", "0"), ("v1", "0"), ("v2", "0"),
                         ("v3", "-3*a^2"), ("v4", "-2*a^3"), ("v5", "a")),
                v_names=vnames),
        Stratum("W2~4", SingularityClass("A", 4), 4, (w2, w3, w4),
                base + " + (w1*Y + u*w1*Z)^2 + (2*t*w1 - 3*u^2)*Y*Z^2"
                " + u*(2*t*w1 - 2*u^2)*Z^3 + (t^2 + u)*Z^4",
                ("w1", "u", "t"),
                side_conditions=("w1", "u", "t", "w1 + 3*u*t"),
                v_point=(("v0", "2*u*w1^2"), ("v1", "w1^2"), ("v2", "u^2*w1^2"),
                         ("v3", "2*t*w1 - 3*u^2"),
                         ("v4", "u*(2*t*w1 - 2*u^2)"), ("v5", "t^2 + u")),
                v_names=vnames,
                flagged_variants=(w4_flagged,),
                notes="fourth equation uses v1*v3, the printed v1*v2 variant "
                      "fails the stratum's own parameterization"),
        Stratum("W2~5", SingularityClass("A", 5), 5, (w2, w3, w4, w5),
                base + " + (w1*Y + u*w1*Z)^2 - 3*u^2*Y*Z^2 - 2*u^3*Z^3 + u*Z^4",
                ("w1", "u"), side_conditions=("w1", "u"),
                v_point=(("v0", "2*u*w1^2"), ("v1", "w1^2"), ("v2", "u^2*w1^2"),
                         ("v3", "-3*u^2"), ("v4", "-2*u^3"), ("v5", "u")),
                v_names=vnames),
        Stratum("W2~5'", SingularityClass("A", 5), 5, (w2, w3, w4, w5p),
                base + " + (3*t*u*Y + 3*u^2*t*Z)^2 + (-6*t^2*u - 3*u^2)*Y*Z^2"
                " + u*(-6*t^2*u - 2*u^2)*Z^3 + (t^2 + u)*Z^4",
                ("u", "t"),
                side_conditions=("u", "t", "4*t^2 - 3*u"),
                v_point=(("v0", "18*t^2*u^3"),
                         ("v1", "9*t^2*u^2"), ("v2", "9*t^2*u^4"),
                         ("v3", "-6*t^2*u - 3*u^2"),
                         ("v4", "u*(-6*t^2*u - 2*u^2)"), ("v5", "t^2 + u")),
                v_names=vnames),
        Stratum("W2~6", SingularityClass("A", 6), 6, (w2, w3, w4, w5p, w6),
                base + " + (4*t^3*Y + 16/3*t^5*Z)^2 - 40/3*t^4*Y*Z^2"
                " - 416/27*t^6*Z^3 + 7/3*t^2*Z^4",
                ("t",), side_conditions=("t",),
                v_point=(("v0", "128/3*t^8"), ("v1", "16*t^6"),
                         ("v2", "256/9*t^10"), ("v3", "-40/3*t^4"),
                         ("v4", "-416/27*t^6"), ("v5", "7/3*t^2")),
                v_names=vnames),
    ]


def _e8_catalog() -> list[Stratum]:
    vnames = ("v0", "v1", "v2", "v3", "v4", "v5", "v6")
    w2 = "v0^2 - 4*v1*v2"
    w3 = "v1^3*v4^2 - v2*(v1*v3 + v2)^2"
    w4 = "16*v1^5*v2*v5^2 - ((v1*v3 + 3*v2)^2 - 4*v1^3*v6)^2"
    p = "(v1*v3 + 3*v2)"
    w5 = ("(4*v1^5*v5^2*%s^2 + 16*v1^7*(v1^2 + v1*v3*v5 + 3*v2*v5) - 9*v2*%s^4)"
          "*(4*v1^5*v5^2*%s^2 + 16*v1^7*(v1^2 - v1*v3*v5 - 3*v2*v5) - 9*v2*%s^4)"
          % (p, p, p, p))
    w6 = ("(32*v1^9 - 2*v1^5*v5*%s*(8*v1^2 - 3*v2*v5 - v1*v3*v5) + %s^5)"
          "*(32*v1^9 + 2*v1^5*v5*%s*(8*v1^2 + 3*v2*v5 + v1*v3*v5) - %s^5)"
          % (p, p, p, p))
    w7 = "256*v2 - v1*v5^4"
    base = "Y^3 + Z^5"
    u_expr = "(1/12*b^2 - 1/12*v5^2)"
    w1_expr = "(1/2*t*(v5 - b))"
    a5_family = (base
                 + " + (%s*Y + %s*%s*Z)^2" % (w1_expr, u_expr, w1_expr)
                 + " + (t^2*(v5 - b) - 3*%s^2)*Y*Z^2" % u_expr
                 + " + %s*(t^2*(v5 - b) - 2*%s^2)*Z^3" % (u_expr, u_expr)
                 + " + v5*Y*Z^3 + (t^2 + %s*v5)*Z^4" % u_expr)
    # A6: substitute t = c*b, v5 = b - 8*c^2 into the A5 parameterization
    u6 = "(1/3*(4*b*c^2 - 16*c^4))"
    w16 = "(-4*c^3*b)"
    a6_family = (base
                 + " + (%s*Y + %s*%s*Z)^2" % (w16, u6, w16)
                 + " + (2*c*b*%s - 3*%s^2)*Y*Z^2" % (w16, u6)
                 + " + %s*(2*c*b*%s - 2*%s^2)*Z^3" % (u6, w16, u6)
                 + " + (b - 8*c^2)*Y*Z^3"
                 + " + (c^2*b^2 + %s*(b - 8*c^2))*Z^4" % u6)
    return [
        Stratum("L", SingularityClass("A", 1), 1, (),
                base + " + v0*Y*Z + v1*Y^2 + v2*Z^2 + v3*Y*Z^2 + v4*Z^3"
                " + v5*Y*Z^3 + v6*Z^4",
                vnames, side_conditions=(w2,),
                v_point=tuple((v, v) for v in vnames), v_names=vnames),
        Stratum("W2", SingularityClass("A", 2), 2, (w2,),
                base + " + (w1*Y + w2*Z)^2 + v3*Y*Z^2 + v4*Z^3 + v5*Y*Z^3 + v6*Z^4",
                ("w1", "w2", "v3", "v4", "v5", "v6"),
                side_conditions=("w1", "w2", "w2^3 + w1^2*w2*v3 - w1^3*v4"),
                v_point=(("v0", "2*w1*w2"), ("v1", "w1^2"), ("v2", "w2^2"),
                         ("v3", "v3"), ("v4", "v4"), ("v5", "v5"), ("v6", "v6")),
                v_names=vnames),
        Stratum("W2^3", SingularityClass("A", 3), 3, (w2, w3),
                base + " + (w1*Y + u*w1*Z)^2 + v3*Y*Z^2 + u*(v3 + u^2)*Z^3"
                " + v5*Y*Z^3 + v6*Z^4",
                ("w1", "u", "v3", "v5", "v6"),
                side_conditions=("w1", "u", "4*w1^2*(v6 - u*v5) - (v3 + 3*u^2)^2"),
                v_point=(("v0", "2*u*w1^2"), ("v1", "w1^2"), ("v2", "u^2*w1^2"),
                         ("v3", "v3"), ("v4", "u*(v3 + u^2)"),
                         ("v5", "v5"), ("v6", "v6")),
                v_names=vnames),
        Stratum("V0^2", SingularityClass("D", 4), 4, ("v0", "v1", "v2"),
                base + " + v3*Y*Z^2 + v4*Z^3 + v5*Y*Z^3 + v6*Z^4",
                ("v3", "v4", "v5", "v6"),
                side_conditions=("4*v3^3 + 27*v4^2",),
                v_point=(("v0", "0"), ("v1", "0"), ("v2", "0"), ("v3", "v3"),
                         ("v4", "v4"), ("v5", "v5"), ("v6", "v6")),
                v_names=vnames),
        Stratum("V&V0^2", SingularityClass("D", 5), 5,
                ("v0", "v1", "v2", "4*v3^3 + 27*v4^2"),
                base + " - 3*a^2*Y*Z^2 - 2*a^3*Z^3 + v5*Y*Z^3 + v6*Z^4",
                ("a", "v5", "v6"),
                side_conditions=("a", "v6 - a*v5"),
                v_point=(("v0", "0"), ("v1", "0"), ("v2", "0"),
                         ("v3", "-3*a^2"), ("v4", "-2*a^3"),
                         ("v5", "v5"), ("v6", "v6")),
                v_names=vnames),
        Stratum("V0^4", SingularityClass("E", 6), 6,
                ("v0", "v1", "v2", "v3", "v4"),
                base + " + v5*Y*Z^3 + v6*Z^4", ("v5", "v6"),
                side_conditions=("v6",),
                v_point=(("v0", "0"), ("v1", "0"), ("v2", "0"), ("v3", "0"),
                         ("v4", "0"), ("v5", "v5"), ("v6", "v6")),
                v_names=vnames),
        Stratum("V0^4&V6", SingularityClass("E", 7), 7,
                ("v0", "v1", "v2", "v3", "v4", "v6"),
                base + " + v5*Y*Z^3", ("v5",), side_conditions=("v5",),
                v_point=(("v0", "0"), ("v1", "0"), ("v2", "0"), ("v3", "0"),
                         ("v4", "0"), ("v5", "v5"), ("v6", "0")),
                v_names=vnames),
        Stratum("V'&V0^2", SingularityClass("D", 6), 6,
                ("v0", "v1", "v2", "v3*v5^2 + 3*v6^2", "v4*v5^3 + 2*v6^3"),
                base + " - 3*a^2*Y*Z^2 - 2*a^3*Z^3 + v5*Y*Z^3 + a*v5*Z^4",
                ("a", "v5"),
                side_conditions=("a", "v5", "12*a + v5^2"),
                v_point=(("v0", "0"), ("v1", "0"), ("v2", "0"),
                         ("v3", "-3*a^2"), ("v4", "-2*a^3"),
                         ("v5", "v5"), ("v6", "a*v5")),
                v_names=vnames),
        Stratum("V''&V0^2", SingularityClass("D", 7), 7,
                ("v0", "v1", "v2", "v3*v5^2 + 3*v6^2", "v4*v5^3 + 2*v6^3",
                 "12*v6 + v5^3"),
                base + " - 1/48*v5^4*Y*Z^2 + 1/864*v5^6*Z^3 + v5*Y*Z^3"
                " - 1/12*v5^3*Z^4",
                ("v5",), side_conditions=("v5",),
                v_point=(("v0", "0"), ("v1", "0"), ("v2", "0"),
                         ("v3", "-1/48*v5^4"), ("v4", "1/864*v5^6"),
                         ("v5", "v5"), ("v6", "-1/12*v5^3")),
                v_names=vnames),
        Stratum("W2~4", SingularityClass("A", 4), 4, (w2, w3, w4),
                base + " + (w1*Y + u*w1*Z)^2 + (2*t*w1 - 3*u^2)*Y*Z^2"
                " + u*(2*t*w1 - 2*u^2)*Z^3 + v5*Y*Z^3 + (t^2 + u*v5)*Z^4",
                ("w1", "u", "t", "v5"),
                side_conditions=("w1", "u", "t", "w1^2 - t*w1*v5 - 3*u*t^2"),
                v_point=(("v0", "2*u*w1^2"), ("v1", "w1^2"), ("v2", "u^2*w1^2"),
                         ("v3", "2*t*w1 - 3*u^2"),
                         ("v4", "u*(2*t*w1 - 2*u^2)"),
                         ("v5", "v5"), ("v6", "t^2 + u*v5")),
                v_names=vnames),
        Stratum("W2~5", SingularityClass("A", 5), 5, (w2, w3, w4, w5),
                a5_family, ("t", "b", "v5"),
                side_conditions=("t", "v5 - b", "v5 + b",
                                 "b^3 - b^2*v5 - 8*t^2"),
                v_point=(("v0", "2*%s*%s^2" % (u_expr, w1_expr)),
                         ("v1", "%s^2" % w1_expr),
                         ("v2", "%s^2*%s^2" % (u_expr, w1_expr)),
                         ("v3", "t^2*(v5 - b) - 3*%s^2" % u_expr),
                         ("v4", "%s*(t^2*(v5 - b) - 2*%s^2)" % (u_expr, u_expr)),
                         ("v5", "v5"), ("v6", "t^2 + %s*v5" % u_expr)),
                v_names=vnames),
        Stratum("W2~6", SingularityClass("A", 6), 6, (w2, w3, w4, w5, w6),
                a6_family, ("b", "c"),
                side_conditions=("b", "c", "b + 8*c^2", "b + 16*c^2",
                                 "b - 4*c^2"),
                v_point=(("v0", "2*%s*%s^2" % (u6, w16)),
                         ("v1", "%s^2" % w16),
                         ("v2", "%s^2*%s^2" % (u6, w16)),
                         ("v3", "2*c*b*%s - 3*%s^2" % (w16, u6)),
                         ("v4", "%s*(2*c*b*%s - 2*%s^2)" % (u6, w16, u6)),
                         ("v5", "b - 8*c^2"),
                         ("v6", "c^2*b^2 + %s*(b - 8*c^2)" % u6)),
                v_names=vnames),
        Stratum("W2~7", SingularityClass("A", 7), 7, (w2, w3, w4, w5, w6, w7),
                base + " + (32*c^5*Y - 512*c^9*Z)^2 - 1280*c^8*Y*Z^2"
                " + 16384*c^12*Z^3 - 16*c^2*Y*Z^3 + 320*c^6*Z^4",
                ("c",), side_conditions=("c",),
                v_point=(("v0", "-32768*c^14"), ("v1", "1024*c^10"),
                         ("v2", "262144*c^18"), ("v3", "-1280*c^8"),
                         ("v4", "16384*c^12"), ("v5", "-16*c^2"),
                         ("v6", "320*c^6")),
                v_names=vnames),
    ]


def stratum_catalog(cls: SingularityClass) -> list[Stratum]:
    """Stratification equations with witness parameterizations, per family."""
    if cls.family == "A":
        return _an_catalog(cls.index)
    if cls.family == "D":
        return _dn_catalog(cls.index)
    if cls.index == 6:
        return _e6_catalog()
    if cls.index == 7:
        return _e7_catalog()
    return _e8_catalog()


# ---------------------------------------------------------------------------
# stratum verification
# ---------------------------------------------------------------------------

def _eval_param_expr(src: str, values: dict) -> Fraction:
    ctx = VarCtx(("_dummy",), tuple(values.keys()))
    p = parse_poly(src, ctx)
    spec = p.specialize_params(values)
    if not spec.is_constant():
        raise ValueError("expression %r did not evaluate to a constant" % src)
    return spec.ctx.field.as_fraction(spec.constant_coeff()) if spec else Fraction(0)


def sample_witness(stratum: Stratum, rng: random.Random,
                   max_den: int = 7, retries: int = 20) -> dict:
    """Small random rationals for the witness parameters, retried until no
    side condition vanishes."""
    for _ in range(retries):
        values = {}
        for name in stratum.witness_params:
            num = rng.randint(1, 3) * rng.choice((1, -1))
            den = rng.randint(1, max_den)
            values[name] = Fraction(num, den)
        if all(_eval_param_expr(src, values) != 0
               for src in stratum.side_conditions):
            return values
    raise RuntimeError("no nondegenerate witness found for %s" % stratum.name)


def verify_stratum(cls: SingularityClass, stratum: Stratum,
                   witness: dict) -> StratumVerification:
    """Specialize the witness family, compute (mu, tau, corank, class) and
    compare with the stratum's expectation.  When the stratum carries a
    rational coefficient map, also check its defining equations vanish."""
    witness = {k: Fraction(v) for k, v in witness.items()}
    missing = set(stratum.witness_params) - set(witness)
    if missing:
        raise ValueError("witness misses parameters %s" % sorted(missing))
    for src in stratum.side_conditions:
        if _eval_param_expr(src, witness) == 0:
            raise ValueError("witness violates side condition %r" % src)
    fam = stratum.family()
    f = fam.specialize_params(witness)
    mu = milnor_local(f).dimension
    tau = tyurina_local(f).dimension
    crk = hessian_corank(f)
    got = classify_simple(f, mu=mu)
    equations_checked = False
    if stratum.v_point:
        vvals = {v: _eval_param_expr(src, witness) for v, src in stratum.v_point}
        for eq in stratum.equations:
            if _eval_param_expr(eq, vvals) != 0:
                raise AssertionError("witness does not satisfy stratum equation %r" % eq)
        equations_checked = True
    ok = (mu == stratum.expected_mu and got == stratum.expected)
    return StratumVerification(stratum=stratum, witness=witness, mu=mu,
                               tau=tau, corank=crk, classified=got,
                               equations_checked=equations_checked, ok=ok)


# ---------------------------------------------------------------------------
# special 1-parameter adjacency families
# ---------------------------------------------------------------------------

ADJACENCY_KINDS = ("a-from-d", "a5-from-e6", "d5-from-e6", "a6-from-e7",
                   "d6-from-e7", "a7-from-e8", "d7-from-e8")


def special_adjacency_family(kind: str, n: Optional[int] = None,
                             ambient_dim: int = 2) -> Poly:
    """The 1-parameter deformation realizing one of the special adjacencies,
    as a polynomial over parameter t; suspension squares fill the remaining
    ambient variables.

    The even A_{n-1} <- D_n family natively carries the imaginary unit; it is
    returned composed with the rational linear change (y,z) -> (iy,-z), which
    preserves Milnor/Tyurina numbers, corank and class (the base polynomial
    then reads y^2*z - z^(n-1)).
    """
    kind = kind.strip().lower()
    if kind not in ADJACENCY_KINDS:
        raise ValueError("unknown adjacency kind %r (choose from %s)"
                         % (kind, ", ".join(ADJACENCY_KINDS)))
    names = _ambient_names(ambient_dim)
    ctx = VarCtx(names, ("t",))
    y = ctx.variable("y")
    z = ctx.variable("z")
    t = ctx.parameter("t")

    if kind == "a-from-d":
        if n is None or n < 4:
            raise ValueError("the A<-D family needs the D index n >= 4")
        if n % 2 == 0:
            m = (n - 4) // 2
            f = y ** 2 * z - z ** (n - 1)
            f = f - t * (y - t ** m * z) ** 2
            for k in range(3, 2 * m + 3):
                f = f + ((-t) ** (2 * m + 3 - k) * z ** k).scale_fraction(
                    Fraction((-1) ** k))
        else:
            m = (n - 5) // 2
            f = y ** 2 * z + z ** (n - 1)
            f = f + t ** 2 * (y + t ** (2 * m + 1) * z) ** 2
            for k in range(3, 2 * m + 4):
                f = f + (-(t ** 2)) ** (2 * m + 4 - k) * z ** k
    elif kind == "a5-from-e6":
        f = y ** 3 + z ** 4 + t ** 2 * y ** 2 + (t * y * z ** 2).scale_fraction(2)
    elif kind == "d5-from-e6":
        f = (y ** 3 + z ** 4
             - (t ** 2 * y * z ** 2).scale_fraction(3)
             - (t ** 3 * z ** 3).scale_fraction(2))
    elif kind == "a6-from-e7":
        f = (y ** 3 + y * z ** 3
             + (t ** 3 * (y + z.scale_fraction(4) * t) ** 2).scale_fraction(432)
             - (t ** 2 * y * z ** 2).scale_fraction(120)
             - (t ** 3 * z ** 3).scale_fraction(416)
             + (t * z ** 4).scale_fraction(7))
    elif kind == "d6-from-e7":
        f = (y ** 3 + y * z ** 3
             - (t ** 2 * y * z ** 2).scale_fraction(3)
             - (t ** 3 * z ** 3).scale_fraction(2)
             + t * z ** 4)
    elif kind == "a7-from-e8":
        f = (y ** 3 + z ** 5
             + t ** 5 * (y - t ** 2 * z) ** 2
             - (t ** 4 * y * z ** 2).scale_fraction(5)
             + (t ** 6 * z ** 3).scale_fraction(4)
             - (t * y * z ** 3).scale_fraction(4)
             + (t ** 3 * z ** 4).scale_fraction(5))
    else:  # d7-from-e8
        f = (y ** 3 + z ** 5
             - (t ** 4 * y * z ** 2).scale_fraction(27)
             + (t ** 6 * z ** 3).scale_fraction(54)
             - (t * y * z ** 3).scale_fraction(6)
             + (t ** 3 * z ** 4).scale_fraction(18))

    for name in names:
        if name not in ("y", "z"):
            f = f + ctx.variable(name) ** 2
    return f


ADJACENCY_TARGETS = {
    "a5-from-e6": SingularityClass("A", 5),
    "d5-from-e6": SingularityClass("D", 5),
    "a6-from-e7": SingularityClass("A", 6),
    "d6-from-e7": SingularityClass("D", 6),
    "a7-from-e8": SingularityClass("A", 7),
    "d7-from-e8": SingularityClass("D", 7),
}


def adjacency_target(kind: str, n: Optional[int] = None) -> SingularityClass:
    kind = kind.strip().lower()
    if kind == "a-from-d":
        if n is None:
            raise ValueError("the A<-D family needs n")
        return SingularityClass("A", n - 1)
    return ADJACENCY_TARGETS[kind]
