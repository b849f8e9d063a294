"""Exact coefficient arithmetic: rationals, or rational functions in parameters.

Coefficients live in Q when the context declares no parameters and in the
fraction field Q(l1, ..., lr) otherwise.  Both are provided by sympy's sparse
polynomial domains (gmpy2-backed), wrapped here behind a single small API so
the rest of the package never touches sympy directly.
"""

from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import QQ


class CoeffField:
    """The coefficient field attached to a variable context.

    For an empty parameter list this is Q itself; otherwise the field of
    rational functions in the parameters.  Elements are always stored in
    reduced form with a positively-normalized denominator (sympy invariant),
    which is exactly the ParamCoeff contract.
    """

    def __init__(self, params: tuple[str, ...]):
        self.params = tuple(params)
        if self.params:
            self.domain = QQ.frac_field(*self.params)
            self._gens = dict(zip(self.params, self.domain.gens))
        else:
            self.domain = QQ
            self._gens = {}
        self.zero = self.domain.zero
        self.one = self.domain.one

    def __eq__(self, other):
        return isinstance(other, CoeffField) and self.params == other.params

    def __hash__(self):
        return hash(self.params)

    def __repr__(self):
        if not self.params:
            return "Q"
        return "Q(%s)" % ", ".join(self.params)

    # -- construction --------------------------------------------------

    def from_fraction(self, q) -> object:
        """Coerce an int / Fraction / QQ element into the field."""
        if isinstance(q, int):
            return self.domain.convert(QQ(q))
        if isinstance(q, Fraction):
            return self.domain.convert(QQ(q.numerator, q.denominator))
        return self.domain.convert(q)

    def param(self, name: str):
        if name not in self._gens:
            raise KeyError("unknown parameter %r" % name)
        return self._gens[name]

    # -- predicates -----------------------------------------------------

    def is_zero(self, c) -> bool:
        return not c

    def is_constant(self, c) -> bool:
        """True when c is a plain rational (degree 0 in every parameter)."""
        if not self.params:
            return True
        return c.numer.is_ground and c.denom.is_ground

    def as_fraction(self, c) -> Fraction:
        """Convert a constant element to a Fraction; raises if parametric."""
        if not self.params:
            return Fraction(int(c.numerator), int(c.denominator))
        if not self.is_constant(c):
            raise ValueError("coefficient %s is not constant" % self.to_str(c))
        num = c.numer.LC if c.numer else QQ(0)
        den = c.denom.LC
        q = num / den
        return Fraction(int(q.numerator), int(q.denominator))

    # -- numerator / denominator views ----------------------------------

    def numer_terms(self, c):
        """Terms of the numerator as (param-exponent tuple, Fraction) pairs."""
        if not self.params:
            return [((), Fraction(int(c.numerator), int(c.denominator)))]
        out = []
        for exps, q in c.numer.terms():
            out.append((tuple(exps), Fraction(int(q.numerator), int(q.denominator))))
        return out

    def denom_terms(self, c):
        if not self.params:
            return [((), Fraction(1))]
        out = []
        for exps, q in c.denom.terms():
            out.append((tuple(exps), Fraction(int(q.numerator), int(q.denominator))))
        return out

    def has_param_denominator(self, c) -> bool:
        if not self.params:
            return False
        return not c.denom.is_ground

    # -- content normalization ------------------------------------------

    def common_unit(self, coeffs):
        """A unit u of the field such that dividing every c in coeffs by u
        leaves integer-coefficient, overall-primitive numerators, denominator
        one, and a positive sign on the first coefficient.  Used to keep basis
        elements in primitive form.
        """
        coeffs = [c for c in coeffs if c]
        if not coeffs:
            return self.one
        if not self.params:
            from math import gcd
            num_gcd = 0
            den_lcm = 1
            for c in coeffs:
                num_gcd = gcd(num_gcd, int(c.numerator))
                d = int(c.denominator)
                den_lcm = den_lcm // gcd(den_lcm, d) * d
            u = self.domain.convert(QQ(num_gcd, den_lcm))
            if coeffs[0] * den_lcm < 0:
                u = -u
            return u
        raw_field = self.domain.field
        # clear denominators first
        den_lcm = self.one.denom  # ring one
        for c in coeffs:
            d = c.denom
            g = den_lcm.gcd(d)
            den_lcm = den_lcm * d.quo(g)
        nums = [(c * raw_field.field_new(den_lcm)).numer for c in coeffs]
        g = nums[0]
        for n in nums[1:]:
            if g.is_ground and g.LC == QQ(1):
                break
            g = g.gcd(n)
        # include rational content so the result is integer-primitive
        from math import gcd as igcd, lcm as ilcm
        cnum = 0
        cden = 1
        for n in nums:
            for q in n.coeffs():
                cnum = igcd(cnum, int(q.numerator))
                cden = ilcm(cden, int(q.denominator))
        g = g * QQ(cnum, cden) / g.LC
        u = raw_field.field_new(g) / raw_field.field_new(den_lcm)
        lead = (coeffs[0] / u).numer.LC
        if lead < 0:
            u = -u
        return u

    def canonical_assumption(self, c):
        """Canonical representative of the vanishing locus of c: the integer
        primitive, sign-normalized numerator polynomial."""
        if not self.params:
            return self.one
        from math import gcd as igcd, lcm as ilcm
        num = c.numer
        cnum, cden = 0, 1
        for q in num.coeffs():
            cnum = igcd(cnum, int(q.numerator))
            cden = ilcm(cden, int(q.denominator))
        u = QQ(cnum, cden)
        if num.LC < 0:
            u = -u
        return self.domain.field.field_new(num * (QQ(1) / u))

    # -- substitution ----------------------------------------------------

    def specialize(self, c, values: dict, target: "CoeffField"):
        """Substitute rationals for a subset of parameters.

        values maps parameter name -> Fraction.  The remaining parameters must
        be exactly the parameters of target.  Raises ZeroDivisionError when
        the denominator vanishes under the assignment.
        """
        if not self.params:
            return target.from_fraction(self.as_fraction(c))

        def subst_poly(p):
            acc = target.zero
            for exps, q in p.terms():
                term = target.from_fraction(Fraction(int(q.numerator), int(q.denominator)))
                for name, e in zip(self.params, exps):
                    if e == 0:
                        continue
                    if name in values:
                        term = term * target.from_fraction(Fraction(values[name]) ** e)
                    else:
                        term = term * target.param(name) ** e
                acc = acc + term
            return acc

        num = subst_poly(c.numer)
        den = subst_poly(c.denom)
        if target.is_zero(den):
            raise ZeroDivisionError("denominator vanishes under the assignment")
        return num / den

    def convert_to(self, c, target: "CoeffField"):
        """Embed into a field with a superset of parameters."""
        return self.specialize(c, {}, target)

    # -- printing ----------------------------------------------------------

    def to_str(self, c) -> str:
        """Deterministic string form, parseable by the expression parser as
        long as the denominator is a plain integer (always true for inputs
        built from the parser and for engine outputs).
        """
        if not self.params:
            return _frac_str(Fraction(int(c.numerator), int(c.denominator)))
        if self.has_param_denominator(c):
            return "(%s)/(%s)" % (self._poly_str(c.numer, Fraction(1)),
                                  self._poly_str(c.denom, Fraction(1)))
        den = Fraction(int(c.denom.LC.numerator), int(c.denom.LC.denominator))
        return self._poly_str(c.numer, den)

    def _poly_str(self, p, den: Fraction) -> str:
        if not p:
            return "0"
        terms = sorted(p.terms(), key=lambda t: (sum(t[0]), tuple(t[0])), reverse=True)
        parts = []
        for exps, q in terms:
            coef = Fraction(int(q.numerator), int(q.denominator)) / den
            mon = "*".join(
                n if e == 1 else "%s^%d" % (n, e)
                for n, e in zip(self.params, exps) if e
            )
            if not mon:
                parts.append(_frac_str(coef))
            elif coef == 1:
                parts.append(mon)
            elif coef == -1:
                parts.append("-" + mon)
            else:
                parts.append("%s*%s" % (_frac_str(coef), mon))
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)
