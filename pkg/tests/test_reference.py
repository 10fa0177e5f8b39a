import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lsfcolloc.errors import DomainError
from lsfcolloc.reference import (KNOWN_MODELS, REFERENCE_ROWS, distinct_levels,
                                 exact_harmonic_levels, normal_mode_frequencies,
                                 reference_levels, reference_values)


def brute_levels(v, count):
    w = normal_mode_frequencies(v)
    return sorted(float(np.dot(w, np.array(n) + 0.5))
                  for n in itertools.product(range(count), repeat=len(w)))[:count]


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**6), st.integers(1, 12))
def test_exact_levels_match_brute_force(dims, seed, count):
    v = np.random.default_rng(seed).uniform(-0.3, 0.3, (dims, dims))
    v = (v + v.T) / 2
    np.testing.assert_allclose(exact_harmonic_levels(v, count), brute_levels(v, count), rtol=1e-13)


def test_uncoupled_and_table_coupling():
    np.testing.assert_allclose(exact_harmonic_levels(np.zeros((3, 3)), 4), [1.5, 2.5, 2.5, 2.5])
    v = (np.ones((4, 4)) - np.eye(4)) / 3
    # frequencies sqrt(2) once and sqrt(2/3) three times
    e = exact_harmonic_levels(v, 4)
    assert e[0] == pytest.approx(0.5 * (np.sqrt(2) + 3 * np.sqrt(2 / 3)), rel=1e-14)
    assert e[0] == pytest.approx(1.931851653, abs=1e-9)
    assert e[1] == pytest.approx(2.748348234, abs=1e-9)


def test_unbound_coupling():
    with pytest.raises(DomainError):
        exact_harmonic_levels([[-1.5]], 1)
    with pytest.raises(DomainError):
        exact_harmonic_levels([[0.0]], 0)


def test_distinct_levels():
    np.testing.assert_allclose(distinct_levels([2.0, 1.0, 2.0 + 1e-12, 3.0]), [1.0, 2.0, 3.0])


def test_reference_table_contents():
    assert {"harmonic4d", "pe", "pe_radial", "quartic_pair", "witwit", "sextic3d",
            "sextic4d"} <= set(KNOWN_MODELS)
    vals, listing = reference_levels("sextic3d", n=18)
    assert listing == "distinct"
    assert vals[0] == 2.978302843
    vals, listing = reference_levels("pe", 1.0, n=40)
    assert listing == "all" and vals[1] == vals[2]
    vals, _ = reference_levels("quartic_pair", 100.0, n=20)
    assert vals[0] == 6.911899705
    vals, _ = reference_levels("witwit", 1e6, strategy="rot", n=30)
    assert vals[0] == 169.2145660
    vals, _ = reference_levels("sextic4d", label="Kaluza")
    assert vals == [3.959304]
    assert all(r.source for r in REFERENCE_ROWS)


def test_reference_lookup_errors():
    with pytest.raises(LookupError):
        reference_values("no-such-model")
    assert reference_levels("pe", 1.0, n=22) == (None, None)
