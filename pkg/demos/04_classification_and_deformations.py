"""Weighted homogeneity, the Milnor-Orlik product, and A/D/E recognition."""

from localstd import (SingularityClass, VarCtx, ade_normal_form,
                      build_versal_family, classify_simple, hessian_corank,
                      milnor_local, milnor_orlik, parse_poly, tyurina_local,
                      weight_vector)

# every curve normal form is weighted homogeneous; the Milnor number then
# factors through the weights alone
for name in ["A5", "D7", "E6", "E7", "E8"]:
    cls = SingularityClass.parse(name)
    f = ade_normal_form(cls, 2)
    w = weight_vector(f)
    print("%s: f = %-18s weights (%s)  Milnor-Orlik mu = %s"
          % (name, f, ", ".join(str(x) for x in w.weights), milnor_orlik(w)))

# tau = mu detects weighted homogeneity even when no weights are visible
f = parse_poly("x^3 + y^4 + x*y^2", VarCtx(["x", "y"]))
print("cusp-like f:", f, "| weights:", weight_vector(f),
      "| mu:", milnor_local(f).dimension, "| tau:", tyurina_local(f).dimension)

# classification reads corank, mu and the 3-jet's factor structure
for src, variables in [("y^2 + z^8", "y,z"),
                       ("y^2*z + z^5", "y,z"),
                       ("y^3 + z^5", "y,z"),
                       ("x^2 + y^3 + y*z^3", "x,y,z")]:
    ctx = VarCtx(variables.split(","))
    g = parse_poly(src, ctx)
    print("%-20s corank %d  ->  %s"
          % (src, hessian_corank(g), classify_simple(g)))

# the Tyurina quotient basis spans the Kuranishi space: deforming along it
# gives the versal family
base = parse_poly("y^3 + z^4", VarCtx(["y", "z"]))
fam = build_versal_family(base)
print("versal family of y^3 + z^4 (tau = %d):" % fam.tyurina_number)
print("   ", fam.family)
