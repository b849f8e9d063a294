"""The six invariant pipelines and their bookkeeping helpers."""

from fractions import Fraction

import pytest

from localstd import (Monomial, NonIsolatedError, OrderClassError, VarCtx,
                      degree_bound, grevlex, is_zero_dimensional,
                      jacobian_ideal, leading_coefficients, lex, milnor_fused,
                      milnor_global, milnor_local, neg_grevlex, neg_lex,
                      parse_poly, quotient_basis, tyurina_fused,
                      tyurina_global, tyurina_ideal, tyurina_local)


def P(src, variables="x,y", params=""):
    ctx = VarCtx([v for v in variables.split(",") if v],
                 [p for p in params.split(",") if p])
    return parse_poly(src, ctx)


def mons(report):
    return [tuple(m) for m in report.quotient_basis]


# ---------------------------------------------------------------------------
# ideal constructors
# ---------------------------------------------------------------------------

def test_jacobian_ideal_basic():
    gens = jacobian_ideal(P("y^2 + z^8", "y,z"))
    assert gens == [P("2*y", "y,z"), P("8*z^7", "y,z")]


def test_jacobian_of_linear_is_unit():
    assert jacobian_ideal(P("x", "x")) == [P("1", "x")]


def test_jacobian_drops_zero_partials():
    gens = jacobian_ideal(P("y^2 - x*(x-1)*(x-2)", "x,y,z"))
    assert len(gens) == 2  # d/dz vanished


def test_tyurina_ideal_prepends_f():
    f = P("x^5 + y^5 + x^2*y^2")
    gens = tyurina_ideal(f)
    assert gens[0] == f and len(gens) == 3


def test_tyurina_of_linear():
    gens = tyurina_ideal(P("x", "x"))
    assert gens == [P("x", "x"), P("1", "x")]


# ---------------------------------------------------------------------------
# zero-dimensionality, bound, quotient enumeration
# ---------------------------------------------------------------------------

def test_is_zero_dimensional_examples():
    assert is_zero_dimensional([Monomial((0, 1)), Monomial((2, 0))], 2)
    assert not is_zero_dimensional([Monomial((1, 1))], 2)
    assert is_zero_dimensional([Monomial((1, 0)), Monomial((0, 6))], 2)
    # the constant monomial makes the ideal the unit ideal
    assert is_zero_dimensional([Monomial((0, 0))], 2)


def test_degree_bound_examples():
    assert degree_bound([Monomial((1, 0)), Monomial((0, 6))], 2) == 12
    assert degree_bound([Monomial((1,))], 1) == 1
    assert degree_bound([Monomial((0, 2)), Monomial((1, 1)), Monomial((3, 0))], 2) == 6


def test_quotient_basis_an_example():
    lms = [Monomial((1, 0)), Monomial((0, 6))]
    qb = quotient_basis(lms, 2, neg_grevlex())
    assert [tuple(m) for m in qb] == [(0, 5), (0, 4), (0, 3), (0, 2), (0, 1), (0, 0)]


def test_quotient_basis_single_variable():
    assert [tuple(m) for m in quotient_basis([Monomial((1,))], 1, grevlex())] \
        == [(0,)]


def test_quotient_basis_mixed_staircase():
    lms = [Monomial((1, 0)), Monomial((0, 3)), Monomial((1, 1))]
    qb = quotient_basis(lms, 2, grevlex())
    assert [tuple(m) for m in qb] == [(0, 0), (0, 1), (0, 2)]


def test_quotient_basis_rejects_positive_dimension():
    with pytest.raises(ValueError):
        quotient_basis([Monomial((1, 1))], 2, grevlex())


# ---------------------------------------------------------------------------
# the four plain pipelines on the paper corpus
# ---------------------------------------------------------------------------

def test_greuel_example_all_four():
    f = P("x^5 + y^5 + x^2*y^2")
    assert milnor_global(f).dimension == 16
    assert milnor_local(f).dimension == 11
    assert tyurina_global(f).dimension == 10
    assert tyurina_local(f).dimension == 10


def test_milnor_local_cusp_quotient():
    r = milnor_local(P("x^3 + y^4 + x*y^2"))
    assert r.dimension == 4
    assert mons(r) == [(2, 0), (1, 0), (0, 1), (0, 0)]  # x^2, x, y, 1


def test_milnor_local_smooth_origin():
    r = milnor_local(P("y^2 - x*(x-1)*(x-2)"))
    assert r.dimension == 0 and r.quotient_basis == ()


def test_tyurina_local_weighted_suspension():
    f = P("x^2 + y^3 + z^5 + t^2 + y*z^2 + z^3 + y*z^3 + z^4", "x,y,z,t")
    r1 = tyurina_local(f, neg_grevlex(perm=(3, 2, 1, 0)))
    assert [m.to_str(f.ctx.variables) for m in r1.quotient_basis] == \
        ["z^2", "z", "y", "1"]
    r2 = tyurina_local(f, neg_lex())
    assert [m.to_str(f.ctx.variables) for m in r2.quotient_basis] == \
        ["y^2", "y", "z", "1"]
    assert r1.dimension == r2.dimension == 4


def test_milnor_global_e6_suspension():
    f = P("x^2 + y^3 + z^4 + t^2", "x,y,z,t")
    assert milnor_global(f).dimension == 6


def test_milnor_global_smooth_and_cylinder():
    f2 = P("y^2 - x*(x-1)*(x-2)")
    assert milnor_global(f2).dimension == 2
    assert tyurina_global(f2).dimension == 0
    f3 = P("y^2 - x*(x-1)*(x-2)", "x,y,z")
    with pytest.raises(NonIsolatedError):
        milnor_global(f3)


def test_non_isolated_error_messages():
    f = P("x^2*z^2 + y^2*z^2 + x^2*y^2", "x,y,z")
    with pytest.raises(NonIsolatedError, match="critical"):
        milnor_global(f)
    with pytest.raises(NonIsolatedError, match="singular"):
        tyurina_global(f)


def test_order_class_guards():
    f = P("x^2 + y^2")
    with pytest.raises(OrderClassError):
        milnor_local(f, grevlex())
    with pytest.raises(OrderClassError):
        milnor_global(f, neg_grevlex())
    with pytest.raises(OrderClassError):
        tyurina_local(f, lex())
    with pytest.raises(OrderClassError):
        tyurina_global(f, neg_lex())


def test_order_invariance_of_dimensions():
    corpus = [
        P("x^5 + y^5 + x^2*y^2"),
        P("x^3 + y^4 + x*y^2"),
        P("y^2 + z^8", "y,z"),
        P("x^2 + y^3 + z^5 + t^2 + y*z^2 + z^3 + y*z^3 + z^4", "x,y,z,t"),
    ]
    for f in corpus:
        assert milnor_local(f, neg_grevlex()).dimension == \
            milnor_local(f, neg_lex()).dimension
        assert milnor_global(f, grevlex()).dimension == \
            milnor_global(f, lex()).dimension


# ---------------------------------------------------------------------------
# parametric runs
# ---------------------------------------------------------------------------

def test_parametric_deformation_generic_and_special():
    f = P("x^3 + y^4 + x*y^2 + t*x^2", params="t")
    r = milnor_local(f)
    assert r.dimension == 3
    assert mons(r) == [(0, 2), (0, 1), (0, 0)]
    field = f.ctx.field
    canon = {field.to_str(a) for a in r.genericity_assumptions}
    assert canon == {"t", "4*t - 1"}
    rt = tyurina_local(f)
    assert rt.dimension == 3
    assert milnor_local(f.specialize_params({"t": Fraction(1, 4)})).dimension == 5
    assert milnor_local(f.specialize_params({"t": 0})).dimension == 4


def test_leading_coefficients_parametric():
    f = P("x^3 + y^4 + x*y^2 + t*x^2", params="t")
    r = milnor_local(f)
    field = f.ctx.field
    pairs = {(field.to_str(field.canonical_assumption(c)), tuple(m))
             for c, m in leading_coefficients(r)}
    assert ("t", (1, 0)) in pairs
    assert ("4*t - 1", (0, 3)) in pairs


def test_leading_coefficients_d6_deformation():
    ctx = VarCtx(["Y", "Z"], ["v0", "v1", "v2", "v3", "v4"])
    FL = parse_poly("Y^2*Z + Z^5 + v0*Y*Z + v1*Y^2 + v2*Z^2 + v3*Z^3 + v4*Z^4", ctx)
    r = milnor_local(FL)
    field = ctx.field
    hess = field.canonical_assumption(
        parse_poly("4*v1*v2 - v0^2", ctx).constant_coeff())
    got = {field.canonical_assumption(c) for c, _ in leading_coefficients(r)}
    assert hess in got


def test_leading_coefficients_numeric_are_constant():
    r = milnor_global(P("x^3 + y^3"))
    field = r.basis.ctx.field
    assert all(field.is_constant(c) for c, _ in leading_coefficients(r))
    assert r.genericity_assumptions == ()


# ---------------------------------------------------------------------------
# fused pipelines
# ---------------------------------------------------------------------------

def test_milnor_fused_cusp():
    fr = milnor_fused(P("x^3 + y^4 + x*y^2"))
    assert fr.global_part.dimension == 6
    assert fr.local_part.dimension == 4
    assert set(mons(fr.local_part)) == {(2, 0), (1, 0), (0, 1), (0, 0)}


def test_tyurina_fused_cusp():
    fr = tyurina_fused(P("x^3 + y^4 + x*y^2"))
    assert fr.global_part.dimension == 4
    assert fr.local_part.dimension == 4
    assert set(mons(fr.global_part)) == {(0, 0), (0, 1), (1, 0), (0, 2)}


def test_fused_on_weighted_homogeneous_agrees():
    f = P("x^2 + y^3 + z^4 + t^2", "x,y,z,t")
    fr = milnor_fused(f)
    assert fr.global_part.dimension == fr.local_part.dimension == 6


def test_fused_generic_full_deformation_is_smooth():
    src = ("x^3 + y^4 + x*y^2 + l0 + l1*y + l2*x + l3*x^2")
    f = P(src, params="l0,l1,l2,l3")
    fr = tyurina_fused(f)
    assert fr.global_part.dimension == 0
    assert fr.local_part.dimension == 0
    # the jacobian alone keeps the six Morse points, none at the origin
    fm = milnor_fused(f)
    assert fm.global_part.dimension == 6 and fm.local_part.dimension == 0


def test_fused_within_budget_where_plain_local_is_hard():
    # the fused pipeline must finish fast on the generic deformation; give it
    # a modest budget to prove it is not grinding
    src = ("x^3 + y^4 + x*y^2 + l0 + l1*y + l2*x + l3*x^2")
    f = P(src, params="l0,l1,l2,l3")
    fr = tyurina_fused(f, step_budget=20000)
    assert fr.local_part.dimension == 0


def test_fused_order_guards():
    f = P("x^2 + y^2")
    with pytest.raises(OrderClassError):
        milnor_fused(f, local_order=grevlex())
    with pytest.raises(OrderClassError):
        tyurina_fused(f, global_order=neg_grevlex())


# ---------------------------------------------------------------------------
# inequalities and the local-global sum
# ---------------------------------------------------------------------------

def test_tau_le_mu_and_local_le_global():
    corpus = [
        P("x^5 + y^5 + x^2*y^2"),
        P("x^3 + y^4 + x*y^2"),
        P("x^2 + y^3 + z^4 + t^2", "x,y,z,t"),
        P("y^2 + z^8", "y,z"),
    ]
    for f in corpus:
        mu_l = milnor_local(f).dimension
        mu_g = milnor_global(f).dimension
        tau_l = tyurina_local(f).dimension
        tau_g = tyurina_global(f).dimension
        assert tau_l <= mu_l and tau_g <= mu_g
        assert mu_l <= mu_g and tau_l <= tau_g


def test_weighted_homogeneous_coincidence_local_and_global():
    # A/D/E normal forms have the origin as the only critical point, so all
    # four numbers agree
    cases = [("y^2 + z^6", "y,z"), ("y^2*z + z^4", "y,z"),
             ("y^3 + z^4", "y,z"), ("y^3 + y*z^3", "y,z")]
    for src, variables in cases:
        f = P(src, variables)
        vals = {milnor_local(f).dimension, milnor_global(f).dimension,
                tyurina_local(f).dimension, tyurina_global(f).dimension}
        assert len(vals) == 1


def test_local_to_global_sum_for_double_critical_point():
    f = P("1/3*x^3 + 1/2*x^2", "x")
    assert milnor_global(f).dimension == 2
    assert milnor_local(f).dimension == 1
    shifted = f.substitute({"x": P("x - 1", "x")})
    assert milnor_local(shifted).dimension == 1


def test_report_json_schema():
    r = milnor_local(P("x^3 + y^4 + x*y^2 + t*x^2", params="t"))
    d = r.to_json_dict()
    assert list(d) == ["ideal", "locality", "order", "basis", "leading",
                       "quotient_basis", "dimension", "genericity_assumptions"]
    assert d["ideal"] == "jacobian" and d["locality"] == "local"
    assert d["dimension"] == 3
