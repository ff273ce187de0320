"""Second-opinion instances of the quantitative laws.

The two pinned golden examples could in principle be overfit; these cases are
different members of the same theorem families and must show identical
behavior: contact order m for the arc (t^m, 0, ..., 0), jet-level embedding
codimension stabilizing at m when the relevant initial forms are independent,
and the model laws edim = 2de, dim in [(2d-1)e, 2de].
"""

import pytest

from arcspace.drinfeld import drinfeld_pipeline, verify_dgk
from arcspace.jets import AffineScheme, Arc, jacobian_ideal, ord_along_arc
from arcspace.localgeom import ecodim_window
from arcspace.polyalg import OrdResult, VarSet, parse_poly


@pytest.fixture
def sum_of_squares():
    vs = VarSet(["x0", "x1", "x2", "x3"])
    return AffineScheme(vs, (parse_poly("x0*x3 + x1^2 + x2^2", vs),))


@pytest.mark.parametrize("m", [1, 2])
def test_sum_of_squares_family(sum_of_squares, m):
    X = sum_of_squares
    arc = Arc.from_strings(X.ambient, [f"t^{m}", "0", "0", "0"])
    assert ord_along_arc(jacobian_ideal(X), arc) == OrdResult.exact(m)
    w = ecodim_window(X, arc, 2 * m, 2 * m + 2)
    assert w.stabilized and w.ecodim == m
    res = drinfeld_pipeline(X, arc, seed=0)
    assert res.model.m == 8 * m
    assert res.edim == 6 * m
    assert res.analysis.tangent_cone_dim == 5 * m
    assert res.analysis.ecodim == m


def test_non_axis_arc_on_quadric(quadric):
    arc = Arc.from_strings(quadric.ambient, ["t", "t", "t^2", "-t^2"])
    from arcspace.jets import eval_along_arc

    assert eval_along_arc(quadric.generators[0], arc).is_zero()
    assert ord_along_arc(jacobian_ideal(quadric), arc) == OrdResult.exact(1)
    report = verify_dgk(quadric, arc, seed=0)
    assert report["edim"] == 6 and report["dim"] == 5 and report["ecodim"] == 1
    assert report["cross_validated"] and report["tangent_rank"] == 6


def test_rational_coefficient_arc(quadric):
    # x0*x3 = -x1*x2 with x1 = t/2, x2 = 3t, x0 = t, x3 = -3t/2
    arc = Arc.from_strings(quadric.ambient, ["t", "1/2*t", "3*t", "-3/2*t"])
    from arcspace.jets import eval_along_arc

    assert eval_along_arc(quadric.generators[0], arc).is_zero()
    assert ord_along_arc(jacobian_ideal(quadric), arc) == OrdResult.exact(1)
    res = drinfeld_pipeline(quadric, arc, seed=0)
    assert res.edim == 6 and res.analysis.ecodim == 1
