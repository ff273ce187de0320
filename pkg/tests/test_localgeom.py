import random

import pytest
from fractions import Fraction

from arcspace.errors import PointNotOnSchemeError
from arcspace.jets import AffineScheme, Arc, jacobian_ideal, ord_along_arc
from arcspace.localgeom import (
    ecodim_at_point,
    ecodim_jet,
    ecodim_window,
    edim_at_point,
    tangent_cone_dim_at_point,
    translate_to_origin,
)
from arcspace.polyalg import VarSet, parse_poly

from conftest import monomial_arc


@pytest.fixture
def plane():
    return VarSet(["x", "y"])


def test_translate_noop_at_origin(plane):
    gens = [parse_poly("x*y", plane)]
    assert translate_to_origin(gens, [0, 0]) == gens


def test_translate_parabola(plane):
    gens = [parse_poly("y - x^2", plane)]
    shifted = translate_to_origin(gens, [1, 1])
    assert shifted == [parse_poly("y - x^2 - 2*x", plane)]
    assert shifted[0].evaluate([0, 0]) == 0
    # re-substitute to confirm the inverse shift recovers the original
    back = shifted[0].substitute({
        "x": parse_poly("x - 1", plane), "y": parse_poly("y - 1", plane)})
    assert back == gens[0]


def test_translate_off_scheme(plane):
    with pytest.raises(PointNotOnSchemeError):
        translate_to_origin([parse_poly("x - 1", plane)], [2, 0])


def test_edim_node_and_smooth_point(plane):
    assert edim_at_point([parse_poly("x*y", plane)], [0, 0]) == 2
    assert edim_at_point([parse_poly("y - x^2", plane)], [0, 0]) == 1
    with pytest.raises(PointNotOnSchemeError):
        edim_at_point([parse_poly("x - 1", plane)], [2, 0])


def test_edim_jet_formula(quadric):
    # edim of the level-N jet scheme at (t^m, 0,0,0) is 3(N+1) + m for m <= N
    from arcspace.jets import jet_ideal, truncate_arc

    for m, N in [(1, 1), (1, 3), (2, 3), (3, 4)]:
        arc = monomial_arc(quadric, m)
        gens = jet_ideal(quadric, N)
        jp = truncate_arc(arc, N)
        assert edim_at_point(gens, jp) == 3 * (N + 1) + m
        # oracle for the rank pattern: dg~(j)/dx3_(q) at the point is nonzero
        # iff j - q = m (the chain rule moves the shift by exactly m slots)
        x3 = quadric.ambient[3]
        for j in range(N + 1):
            for q in range(N + 1):
                entry = gens[j].partial(x3.derived(q)).evaluate(jp.values)
                assert (entry != 0) == (j - q == m)


def test_tangent_cone_dims(plane, quadric):
    assert tangent_cone_dim_at_point([parse_poly("x*y", plane)], [0, 0]) == 1
    assert tangent_cone_dim_at_point(list(quadric.generators), [0, 0, 0, 0]) == 3
    gens = [parse_poly("y - x^2", plane), parse_poly("x^3", plane)]
    assert tangent_cone_dim_at_point(gens, [0, 0]) == 0


def test_ecodim_smooth_node_quadric(plane, quadric):
    smooth = ecodim_at_point([parse_poly("y - x^2", plane)], [0, 0])
    assert smooth.ecodim == 0
    node = ecodim_at_point([parse_poly("x*y", plane)], [0, 0])
    assert (node.edim, node.tangent_cone_dim, node.ecodim) == (2, 1, 1)
    cone = ecodim_at_point(list(quadric.generators), [0, 0, 0, 0])
    assert (cone.edim, cone.tangent_cone_dim, cone.ecodim) == (4, 3, 1)


def test_ecodim_formula_concordance(plane, quadric):
    for gens, pt in [
        ([parse_poly("x*y", plane)], [0, 0]),
        ([parse_poly("y - x^2", plane)], [Fraction(1, 2), Fraction(1, 4)]),
        (list(quadric.generators), [0, 0, 0, 0]),
    ]:
        a = ecodim_at_point(gens, pt)
        assert a.edim == a.nvars - a.jacobian_rank
        assert a.ecodim == a.edim - a.tangent_cone_dim
        assert a.ecodim == (a.nvars - a.tangent_cone_dim) - a.jacobian_rank


def test_ecodim_jet_golden_values(quadric):
    first = ecodim_jet(quadric, monomial_arc(quadric, 1), 2)
    assert first.ecodim == 1
    second = ecodim_jet(quadric, monomial_arc(quadric, 2), 4)
    assert second.ecodim == 2


def test_ecodim_jet_smooth_scheme():
    vs = VarSet(["x", "y"])
    line = AffineScheme(vs, (parse_poly("y", vs),))
    arc = Arc.from_strings(vs, ["t", "0"])
    for n in range(3):
        assert ecodim_jet(line, arc, n).ecodim == 0


def test_window_stabilization(quadric):
    w = ecodim_window(quadric, monomial_arc(quadric, 1), 2, 4)
    assert w.stabilized and w.ecodim == 1
    assert [w.per_level[n].ecodim for n in (2, 3, 4)] == [1, 1, 1]


def test_monotone_bound(quadric):
    # ecodim at jet level <= contact order with the Jacobian ideal
    for m in (1, 2):
        arc = monomial_arc(quadric, m)
        e = ord_along_arc(jacobian_ideal(quadric), arc).value
        for n in range(2 * e, 2 * e + 3):
            assert ecodim_jet(quadric, arc, n).ecodim <= e


def test_singular_locus_divergence(node):
    arc = Arc.from_strings(node.ambient, ["0", "0"])
    values = [ecodim_jet(node, arc, n).ecodim for n in range(5)]
    assert values == sorted(values)
    assert all(a < b for a, b in zip(values, values[1:]))


def test_smoothness_detection(plane, quadric, node):
    # ecodim = 0 iff the Jacobian rank equals the codimension at the point
    smooth = ecodim_at_point([parse_poly("y - x^2", plane)], [0, 0])
    assert smooth.ecodim == 0 and smooth.jacobian_rank == 1
    nodal = ecodim_at_point(list(node.generators), [0, 0])
    assert nodal.ecodim > 0 and nodal.jacobian_rank < 1
    cone = ecodim_at_point(list(quadric.generators), [0, 0, 0, 0])
    assert cone.ecodim > 0 and cone.jacobian_rank < 1
    off_origin = ecodim_at_point(list(quadric.generators), [1, 0, 0, 0])
    assert off_origin.ecodim == 0 and off_origin.jacobian_rank == 1


def test_local_analysis_json(plane):
    a = ecodim_at_point([parse_poly("x*y", plane)], [0, 0])
    data = a.to_json()
    assert data["nvars"] == 2 and data["edim"] == 2 and data["dim"] == 1
    assert data["ecodim"] == 1 and data["jacobian_rank"] == 0
    assert data["initial_forms"] == ["x*y"]
    assert data["stabilized"] is None


def test_initial_ideal_requires_origin():
    from arcspace.polyalg import initial_ideal

    vs = VarSet(["x", "y"])
    with pytest.raises(ValueError):
        initial_ideal([parse_poly("x*y", vs)], at_origin=False)


def test_random_points_never_break_concordance():
    # the two ecodim pipelines must agree on arbitrary local ideals
    from conftest import random_poly

    rng = random.Random(71)
    vs = VarSet(["x", "y", "z"])
    produced = 0
    while produced < 12:
        gens = []
        for _ in range(rng.randint(1, 2)):
            f = random_poly(vs, rng, max_degree=3, terms=3)
            f = f - parse_poly(str(f.constant_term()), vs)
            if not f.is_zero():
                gens.append(f)
        if not gens:
            continue
        produced += 1
        a = ecodim_at_point(gens, [0, 0, 0])
        assert a.ecodim >= 0
        assert a.edim - a.tangent_cone_dim == a.ecodim
