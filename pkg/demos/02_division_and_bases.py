"""Division with remainder, Buchberger completion, and Mora's algorithm.

The punchline is the local ring: under a local order the classical division
loop need not terminate, so reduction is replaced by the weak normal form,
which allows multiplying the dividend by a unit of the local ring.
"""

from localstd import (PolySet, VarCtx, buchberger, ecart, grevlex,
                      neg_grevlex, normal_form, parse_poly, s_polynomial,
                      standard_basis, weak_normal_form)

ctx = VarCtx(["x", "y"])
P = lambda s: parse_poly(s, ctx)

# --- global: classical division and Groebner bases -------------------------

G = buchberger(PolySet([P("x^2 - y"), P("x*y - 1")], grevlex()))
print("Groebner basis of (x^2 - y, x*y - 1):")
for p in G:
    print("   ", p.to_str(grevlex()))

r = normal_form(P("x^4 + x"), G)
print("normal form of x^4 + x:", r)

# --- local: why plain division fails ----------------------------------------

# x is divisible by the leading monomial of x + x^2 under a local order, and
# the naive loop x -> -x^2 -> x^3 -> ... never stops.  Mora's trick: when the
# ecart of the dividend drops below the divisor's, the dividend itself joins
# the divisor pool.  Here one extra step finishes with remainder zero,
# reflecting that x = (x + x^2) / (1 + x) in the local ring.
ctx1 = VarCtx(["x"])
gen = parse_poly("x + x^2", ctx1)
print("ecart of x + x^2 under neg-grevlex:", ecart(gen, neg_grevlex()))
h = weak_normal_form(parse_poly("x", ctx1), PolySet([gen], neg_grevlex()))
print("weak normal form of x modulo (x + x^2):", h)

# --- standard bases ---------------------------------------------------------

f = P("x^3 + y^4 + x*y^2")
gens = [f.partial_derivative(0), f.partial_derivative(1)]
S = standard_basis(PolySet(gens, neg_grevlex()))
print("standard basis of the Jacobian ideal of", f)
for p in S:
    print("   ", p.to_str(neg_grevlex()))
print("leading monomials:",
      [m.to_str(ctx.variables) for m in S.leading_monomials()])

# S-polynomials cross-multiply leading coefficients, so parametric
# computations stay fraction-free:
ctxp = VarCtx(["Y", "Z"], ["v0", "v1", "v2", "v3", "v4"])
FL = parse_poly("Y^2*Z + Z^5 + v0*Y*Z + v1*Y^2 + v2*Z^2 + v3*Z^3 + v4*Z^4", ctxp)
g1, g2 = FL.partial_derivative(0), FL.partial_derivative(1)
sp = s_polynomial(g1, g2, neg_grevlex())
h = weak_normal_form(sp, PolySet([g1, g2], neg_grevlex()))
c, m = h.leading_term(neg_grevlex())
print("reducing the deformed pair exposes the leading coefficient:")
print("    (%s) * %s" % (ctxp.field.to_str(c), m.to_str(ctxp.variables)))
