import numpy as np
import pytest

from lsfcolloc import solve
from lsfcolloc.eigensolver import EigenRequest
from lsfcolloc.potential import builtin
from lsfcolloc.transforms import TransformParams


def test_harmonic_oscillator_1d():
    s = solve(builtin("harmonic1d"), 40, k=4)
    np.testing.assert_allclose(s.eigenvalues, [0.5, 1.5, 2.5, 3.5], atol=1e-9)
    assert s.grid_points == 39
    assert s.params.half_width > 0


def test_distinct_listing_skips_multiplets():
    s_all = solve(builtin("sextic3d"), 10, k=4)
    s_dis = solve(builtin("sextic3d"), 10, k=3, levels="distinct")
    assert s_all.eigenvalues[1] == pytest.approx(s_all.eigenvalues[2], abs=1e-9)
    np.testing.assert_allclose(s_dis.eigenvalues, [2.978379470, 5.296297359, 5.866068948], atol=1e-8)


def test_explicit_params_bypass_optimizer():
    params = TransformParams(4.0)
    s = solve(builtin("harmonic1d"), 20, k=1, params=params)
    assert s.params is params


def test_bad_listing():
    with pytest.raises(ValueError):
        solve(builtin("harmonic1d"), 10, levels="some")


def test_request_is_forwarded():
    s = solve(builtin("pe"), 16, k=2, request=EigenRequest(block_size=2, residual_tolerance=1e-12))
    assert np.all(s.residual_norms < 1e-9)
