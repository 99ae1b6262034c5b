import math

import numpy as np
import pytest

from conftest import PARAM_GRID
from zbhyp.errors import DegenerateParameterError, DomainError
from zbhyp.phi import ZbParams, aux_eval, phi_plus_extended
from zbhyp.thresholds import (
    classify_curvature,
    classify_g_ratio,
    classify_monotonicity,
    extrema_phi_pm,
    g_ratio,
    g_ratio_up,
    probe_grid,
    thresholds,
)

LOG16 = math.log(16)


@pytest.fixture(scope="module")
def bundles():
    return {ab: thresholds(ab) for ab in PARAM_GRID}


def test_half_half_bundle():
    tb = thresholds((0.5, 0.5))
    assert tb.R == pytest.approx(LOG16, abs=1e-14)
    assert tb.inv_sum == 4.0
    assert tb.c_ab == 16 / 5
    assert tb.delta_plus == pytest.approx(8 / 3, abs=1e-8)
    assert tb.delta_minus == pytest.approx(8 / 3, abs=1e-8)
    assert tb.g_ratio_up == pytest.approx(LOG16, abs=1e-13)
    assert tb.alpha0 > tb.delta_plus
    d = tb.as_dict()
    assert list(d)[:7] == ["R", "inv_sum", "c_ab", "alpha0", "delta_minus", "delta_plus", "g_ratio_up"]


def test_bundle_invariants(bundles):
    for (a, b), tb in bundles.items():
        assert tb.delta_minus <= tb.delta_plus + 1e-10
        if (a, b) != (0.5, 0.5):
            assert tb.delta_minus < tb.delta_plus
        assert tb.alpha0 >= tb.delta_plus
        assert tb.alpha0 >= tb.R - 1e-12
        assert tb.R < tb.inv_sum


def test_alpha0_dominates_samples():
    p = ZbParams(0.3, 0.4)
    tb = thresholds(p)
    xs = np.linspace(0, 1, 1001)
    assert tb.alpha0 >= np.max(phi_plus_extended(p, xs)) - 1e-12
    assert tb.alpha0 >= max(float(aux_eval(p, 0.0).phi_plus), tb.R)


def test_extrema_stable_under_refinement():
    for ab in [(0.5, 0.5), (0.3, 0.4), (0.1, 0.9)]:
        e1 = extrema_phi_pm(ab, 4096)
        e2 = extrema_phi_pm(ab, 8192)
        for k in ("alpha0", "delta_minus", "delta_plus"):
            assert abs(e1[k] - e2[k]) <= 1e-8


def test_half_half_alpha0_is_interior():
    e = extrema_phi_pm((0.5, 0.5))
    assert 0.3 < e["alpha0_at"] < 0.6
    assert e["delta_plus_at"] == 0.0 and e["delta_minus_at"] == 0.0


def test_degenerate_errors():
    with pytest.raises(DegenerateParameterError):
        thresholds((0.0, 0.5))
    with pytest.raises(DomainError):
        classify_curvature((0.5, 0.5), 3.0, n=10)
    with pytest.raises(DomainError):
        classify_curvature((0.5, 0.5), 3.0, target="psi")


def test_probe_grid_shape():
    xs = probe_grid(512, 1e-4)
    assert len(xs) == 512
    assert xs[0] == pytest.approx(1e-4) and xs[-1] == pytest.approx(1 - 1e-4)
    assert np.all(np.diff(xs) > 0)


@pytest.mark.parametrize("c,want", [(LOG16 - 0.1, "convex"), (16 / 5 + 0.1, "concave"), (3.0, "neither")])
def test_curvature_examples(c, want):
    v = classify_curvature((0.5, 0.5), c, target="phi")
    assert v.verdict == want
    assert (v.witness is not None) == (want == "neither")


@pytest.mark.parametrize("c,want", [(LOG16, "increasing"), (4.0, "decreasing"), (3.0, "neither")])
def test_monotonicity_examples(c, want):
    assert classify_monotonicity((0.5, 0.5), c).verdict == want


@pytest.mark.parametrize("c,want", [(5.0, "decreasing"), (2.0, "increasing"), (3.0, "neither")])
def test_g_ratio_examples(c, want):
    assert classify_g_ratio((0.5, 0.5), c).verdict == want


def test_g_ratio_symmetric_and_up_value():
    xs = np.array([0.2, 0.7])
    np.testing.assert_allclose(g_ratio((0.2, 0.6), 3.0, xs), g_ratio((0.6, 0.2), 3.0, xs))
    assert g_ratio_up((0.5, 0.5)) == pytest.approx(LOG16)


def test_sharpness_one_tenth_band(bundles):
    for ab, tb in bundles.items():
        if tb.R + 0.1 < tb.c_ab:
            assert classify_curvature(ab, tb.R + 0.1).verdict == "neither"
        if tb.c_ab - 0.1 > tb.R:
            assert classify_curvature(ab, tb.c_ab - 0.1).verdict == "neither"


def test_phi_range_below_R():
    from zbhyp.phi import phi
    from zbhyp.special import beta
    for ab in [(0.5, 0.5), (0.2, 0.7)]:
        R = thresholds(ab).R
        xs = probe_grid(256, 1e-9)
        v = phi(ab, R - 0.3, xs)
        assert v.min() >= R - 0.3 - 1e-9 and v.max() <= beta(*ab) + 1e-9
