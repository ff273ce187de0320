import random
from fractions import Fraction

import pytest

from arcspace.errors import CertificateFailureError, VerificationError
from arcspace.drinfeld import (
    DrinfeldModel,
    ProjectionMap,
    build_drinfeld_model,
    choose_projection,
    ci_reduce,
    drinfeld_pipeline,
    drinfeld_tangent_check,
    jet_cotangent_map,
    model_varset,
    tangent_matrix_rows,
    verify_dgk,
    verify_drinfeld_dims,
    verify_drinfeld_edim,
)
from arcspace.jets import AffineScheme, Arc, jacobian_ideal, ord_along_arc
from arcspace.polyalg import TPoly, TruncSeries, VarSet, parse_poly
from arcspace.polyalg.linalg import exact_rank
from arcspace.polyalg.tpoly import substitute_tpoly

from conftest import monomial_arc


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def test_ci_reduce_hypersurface_identity(quadric):
    arc = monomial_arc(quadric, 1)
    X = ci_reduce(quadric, arc)
    assert X.generators == quadric.generators
    assert X.declared_dim == 3


def test_ci_reduce_recombines_and_preserves_order(ci_fixture):
    arc = monomial_arc(ci_fixture, 1)
    e = ord_along_arc(jacobian_ideal(ci_fixture), arc).value
    X = ci_reduce(ci_fixture, arc, seed=3)
    assert len(X.generators) == 2
    assert ord_along_arc(jacobian_ideal(X), arc).value == e
    # the new generators vanish along the arc (they are combinations)
    from arcspace.jets import eval_along_arc

    for g in X.generators:
        assert eval_along_arc(g, arc).is_zero()


def test_ci_reduce_resamples_degenerate_draws(ci_fixture):
    # plenty of attempts: even seeds whose first draws are dependent succeed
    arc = monomial_arc(ci_fixture, 1)
    for seed in range(8):
        X = ci_reduce(ci_fixture, arc, seed=seed)
        assert exact_rank([[1, 0], [0, 1]]) == 2
        assert len(X.generators) == 2


def test_choose_projection_identity_split(quadric):
    arc = monomial_arc(quadric, 1)
    proj, e = choose_projection(quadric, arc, seed=0)
    assert e == 1
    assert proj.attempt == 0 and proj.is_identity()
    assert [v.name for v in proj.y_vars] == ["x3"]
    proj2, e2 = choose_projection(quadric, monomial_arc(quadric, 2), seed=0)
    assert e2 == 2 and proj2.attempt == 0


def test_choose_projection_resamples_on_bad_identity(ci_fixture):
    # the identity split y = (x2, x3) zeroes det(dp/dy) along this arc
    arc = monomial_arc(ci_fixture, 1)
    Xci = ci_reduce(ci_fixture, arc, seed=0)
    proj, e = choose_projection(Xci, arc, seed=0)
    assert e == 2
    assert proj.attempt >= 1


def test_choose_projection_certificate_failure(ci_fixture):
    arc = monomial_arc(ci_fixture, 1)
    Xci = ci_reduce(ci_fixture, arc, seed=0)
    with pytest.raises(CertificateFailureError):
        choose_projection(Xci, arc, seed=0, resample_limit=0)  # identity only


def test_adversarial_split_order_is_infinite(quadric):
    # y = x0 gives d(g)/dy = x3, which vanishes identically along the arc
    arc = monomial_arc(quadric, 1)
    g = quadric.generators[0]
    from arcspace.polyalg import OrdResult

    assert ord_along_arc(g.partial("x3"), arc) == OrdResult.exact(1)
    assert ord_along_arc(g.partial("x0"), arc) == OrdResult.infinity()


def test_model_structure_first_example(quadric):
    arc = monomial_arc(quadric, 1)
    proj, e = choose_projection(quadric, arc, seed=0)
    model = build_drinfeld_model(quadric, proj, arc, e)
    assert model.m == 8 == e * (1 + 2 * model.d + model.c)
    names = [v.name for v in model.varset]
    assert names[0] == "q_0" and "xbar_0_1" in names and names[-1] == "ybar_0_0"
    z = model.z
    # z has q = t (deviation coords 0), xbar_0 = t mod t^2, all else 0
    nonzero = {model.varset[i].name: x for i, x in enumerate(z) if x}
    assert nonzero == {"xbar_0_1": Fraction(1)}
    for q in model.equations:
        assert q.evaluate(z) == 0


def test_degenerate_adjoint_c1(quadric):
    # for c = 1 the adjoint is (1), so block (iii) is p mod q(t)^2
    arc = monomial_arc(quadric, 1)
    proj, e = choose_projection(quadric, arc, seed=0)
    model = build_drinfeld_model(quadric, proj, arc, e)
    vs = model.varset

    def var_poly(name):
        return parse_poly(name, vs)

    qt = TPoly(vs, [var_poly("q_0"), parse_poly("1", vs)])
    values = [
        TPoly(vs, [var_poly("xbar_0_0"), var_poly("xbar_0_1")]),
        TPoly(vs, [var_poly("xbar_1_0"), var_poly("xbar_1_1")]),
        TPoly(vs, [var_poly("xbar_2_0"), var_poly("xbar_2_1")]),
        TPoly(vs, [var_poly("ybar_0_0")]),
    ]
    p_eval = substitute_tpoly(quadric.generators[0], values)
    rem2 = p_eval.div_monic(qt * qt)[1]
    block3 = [c for c in (rem2.coefficient(0), rem2.coefficient(1)) if not c.is_zero()]
    assert all(any(q == b for q in model.equations) for b in block3)


def test_verify_edim_golden(quadric):
    arc = monomial_arc(quadric, 1)
    res = drinfeld_pipeline(quadric, arc, seed=0, with_dims=False)
    assert res.edim == 6
    arc2 = monomial_arc(quadric, 2)
    res2 = drinfeld_pipeline(quadric, arc2, seed=0, with_dims=False)
    assert res2.edim == 12 and res2.model.m == 16


def test_verify_dims_golden(quadric):
    arc = monomial_arc(quadric, 1)
    res = drinfeld_pipeline(quadric, arc, seed=0)
    assert res.analysis.ecodim == 1
    assert res.analysis.tangent_cone_dim == 5
    arc2 = monomial_arc(quadric, 2)
    res2 = drinfeld_pipeline(quadric, arc2, seed=0)
    assert res2.analysis.ecodim == 2
    assert res2.analysis.tangent_cone_dim == 10


def test_smooth_marker():
    vs = VarSet(["x", "y"])
    line = AffineScheme(vs, (parse_poly("y", vs),))
    arc = Arc.from_strings(vs, ["t", "0"])
    res = drinfeld_pipeline(line, arc, seed=0)
    assert res.e == 0
    assert res.model.is_smooth_marker and res.model.m == 0
    assert res.edim == 0 and res.analysis.ecodim == 0


def test_jet_cotangent_identity_on_affine_space():
    # X = A^1 embedded as V(y) in A^2, identity projection to the x-axis
    vs = VarSet(["x", "y"])
    line = AffineScheme(vs, (parse_poly("y", vs),))
    arc = Arc.from_strings(vs, ["t", "0"])
    proj = ProjectionMap(vs, 1, _identity(2), _identity(2))
    for n in range(4):
        rows = jet_cotangent_map(line, proj, arc, n)
        assert exact_rank(rows) == n + 1


def test_jet_cotangent_full_rank_levels(quadric):
    arc = monomial_arc(quadric, 1)
    proj, e = choose_projection(quadric, arc, seed=0)
    for n in range(7):
        rows = jet_cotangent_map(quadric, proj, arc, n)
        assert exact_rank(rows) == 3 * (n + 1)


def test_jet_cotangent_bad_split_detected(quadric):
    # swap x0 and x3: the projection keeps (x3, x1, x2) and drops x0
    arc = monomial_arc(quadric, 1)
    swap = tuple(tuple({(0, 3): 1, (3, 0): 1}.get((i, j), 1 if i == j and i not in (0, 3) else 0)
                       for j in range(4)) for i in range(4))
    bad = ProjectionMap(quadric.ambient, 3, swap, swap)
    with pytest.raises(VerificationError) as err:
        jet_cotangent_map(quadric, bad, arc, 2)
    assert err.value.observed < err.value.expected


def test_tangent_check_golden(quadric):
    arc = monomial_arc(quadric, 1)
    res = drinfeld_pipeline(quadric, arc, seed=0, with_dims=False)
    rep = drinfeld_tangent_check(res.model, arc)
    assert rep.rank == rep.expected == 6
    arc2 = monomial_arc(quadric, 2)
    res2 = drinfeld_pipeline(quadric, arc2, seed=0, with_dims=False)
    assert drinfeld_tangent_check(res2.model, arc2).rank == 12


def test_tangent_dq_block_scaling(quadric):
    # a(t) -> a(lambda t) scales the dq-block entry on dq^(l) in row (i, n)
    # by lambda^(n + e - l)
    lam = Fraction(2)
    arc = Arc(quadric.ambient, [TruncSeries([0, 1, 1, 1]),
                                TruncSeries([]), TruncSeries([]), TruncSeries([])])
    scaled = Arc(quadric.ambient, [
        TruncSeries([c * lam ** k for k, c in enumerate(comp.coeffs)])
        for comp in arc.components
    ])
    res = drinfeld_pipeline(quadric, arc, seed=0, with_dims=False)
    res_s = drinfeld_pipeline(quadric, scaled, seed=0, with_dims=False)
    model, model_s = res.model, res_s.model
    assert model.e == model_s.e == 1
    rows = tangent_matrix_rows(model, arc)
    rows_s = tangent_matrix_rows(model_s, scaled)
    e, d = model.e, model.d
    idx = 0
    checked = 0
    for n in range(2 * e):
        for i in range(d):
            for l in range(e):
                base = rows[idx][model.q_position(l)]
                assert rows_s[idx][model.q_position(l)] == lam ** (n + e - l) * base
                if base:
                    checked += 1
            idx += 1
    assert checked > 0


def test_determinism_same_seed(ci_fixture):
    arc = monomial_arc(ci_fixture, 1)
    r1 = drinfeld_pipeline(ci_fixture, arc, seed=5, with_dims=False)
    r2 = drinfeld_pipeline(ci_fixture, arc, seed=5, with_dims=False)
    assert [str(q) for q in r1.model.equations] == [str(q) for q in r2.model.equations]
    assert r1.model.z == r2.model.z
    assert r1.model.projection.transform == r2.model.projection.transform
    assert r1.report(5) == r2.report(5)


def test_seed_independence_of_invariants(quadric):
    arc = monomial_arc(quadric, 1)
    dims = set()
    for seed in range(5):
        res = drinfeld_pipeline(quadric, arc, seed=seed)
        dims.add((res.edim, res.analysis.tangent_cone_dim, res.analysis.ecodim))
    assert dims == {(6, 5, 1)}


def test_cross_validation_against_jet_window(quadric):
    arc = monomial_arc(quadric, 1)
    report = verify_dgk(quadric, arc, seed=0)
    assert report["cross_validated"] is True
    assert report["ecodim"] == report["jet_window"]["ecodim"] == 1
    assert report["jet_cotangent_ranks"] == {"1": 6, "3": 12}
    assert report["tangent_rank"] == 6


def test_verify_errors_carry_values():
    with pytest.raises(VerificationError) as err:
        raise VerificationError("demo", 3, 5)
    assert err.value.observed == 3 and err.value.expected == 5


def test_model_varset_size():
    for e, d, c in [(1, 3, 1), (2, 3, 1), (2, 2, 2), (3, 1, 2)]:
        assert len(model_varset(e, d, c)) == e * (1 + 2 * d + c)


def test_random_unimodular_inverse():
    import random as _random

    from arcspace.drinfeld import _matmul, _random_unimodular

    rng = _random.Random(77)
    for n in (2, 3, 5):
        T, Tinv = _random_unimodular(n, rng, 10)
        assert _matmul(T, Tinv) == [[1 if i == j else 0 for j in range(n)]
                                    for i in range(n)]
        assert _matmul(Tinv, T) == [[1 if i == j else 0 for j in range(n)]
                                    for i in range(n)]
