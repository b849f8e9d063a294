"""Exact polynomials and monomial orders, step by step.

Run as a script; every block prints what it just computed.
"""

from fractions import Fraction

from localstd import VarCtx, grevlex, lex, neg_grevlex, neg_lex, parse_poly

# A context fixes the working variables and, separately, the symbolic
# parameters.  The split matters: derivatives and monomial orders see only
# the variables, while parameters ride along inside the coefficients.
ctx = VarCtx(["x", "y"], ["t"])

f = parse_poly("x^3 + y^4 + x*y^2 + t*x^2", ctx)
print("f =", f)
print("df/dx =", f.partial_derivative(0))
print("df/dy =", f.partial_derivative(1))

# coefficients are exact rational functions of the parameters
g = parse_poly("1/2*t*x + 1/3*t*x", ctx)
print("(t/2)x + (t/3)x =", g)

# substitution is simultaneous and fully expanded
shift = f.substitute({"x": parse_poly("x + 1", ctx)})
print("f(x+1, y) =", shift)

# specializing the parameter collapses to plain rationals
print("f at t=1/4:", f.specialize_params({"t": Fraction(1, 4)}))
print("f at t=0:  ", f.specialize_params({"t": 0}))

# Monomial orders: global orders make 1 the smallest monomial, local orders
# make it the largest.  Leading terms move accordingly.
p = parse_poly("3*x^2 + y^2 + 2*t*x", ctx)
for order, name in [(grevlex(), "grevlex"), (lex(), "lex"),
                    (neg_grevlex(), "neg-grevlex"), (neg_lex(), "neg-lex")]:
    c, m = p.leading_term(order)
    print("%-12s leading term of %s: (%s) * %s"
          % (name, p, ctx.field.to_str(c), m.to_str(ctx.variables)))
    print("             class:", order.classify(2).value)

# A significance permutation changes the tie-break: under lex with z before
# y, any power of y loses to z.
ctx2 = VarCtx(["y", "z"])
q = parse_poly("y^3 + z", ctx2)
print("lex(z,y) leading monomial of y^3 + z:",
      q.leading_monomial(lex(perm=(1, 0))).to_str(ctx2.variables))
