import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lsfcolloc.errors import DomainError, ParseError, ShapeError
from lsfcolloc.potential import (BUILTINS, PolynomialPotential, builtin, evaluate, grid_sum,
                                 grid_values, make_coupled_harmonic, make_pullen_edmonds,
                                 make_quartic_pair, make_sextic, make_witwit_quartic,
                                 parse_potential_file, parse_potential_text)


def test_from_terms_merges_and_drops_zeros():
    p = PolynomialPotential.from_terms(2, [(1.0, (2, 0)), (0.5, (2, 0)), (0.0, (0, 2)),
                                           (3.0, (1, 1)), (-3.0, (1, 1))])
    assert p.as_dict() == {(2, 0): 1.5}
    assert p.degree == 2


def test_validation():
    with pytest.raises(ShapeError):
        PolynomialPotential.from_terms(2, [(1.0, (2,))])
    with pytest.raises(DomainError):
        PolynomialPotential.from_terms(1, [(1.0, (-1,))])
    with pytest.raises(DomainError):
        PolynomialPotential.from_terms(1, [(1.0, (8,))])
    with pytest.raises(DomainError):
        PolynomialPotential.from_terms(1, [(1.0, (2,))], kinetic_masses=(0.0,))


def test_evaluate_single_point_and_batch():
    pe = make_pullen_edmonds(1.0)
    assert pe([1.0, 2.0]) == pytest.approx(0.5 + 2.0 + 4.0)
    pts = np.array([[0.0, 0.0], [1.0, 2.0], [-1.0, 0.5]])
    np.testing.assert_allclose(evaluate(pe, pts), [0.0, 6.5, 0.5 + 0.125 + 0.25])


def test_builtin_models():
    assert set(BUILTINS) >= {"harmonic4d", "pe", "pe_radial", "quartic_pair", "witwit",
                             "sextic3d", "sextic4d"}
    ww = make_witwit_quartic()
    x = np.array([0.1, -0.2, 0.3])
    lam = 1e6
    expect = (0.5 * x @ x + lam * (x[0]**4 / 2 + x[1]**4 / 3 + x[2]**4 / 6
              + 2 * (x[0]**2 * x[1]**2 / 2 + x[0]**2 * x[2]**2 / 2 + x[1]**2 * x[2]**2 / 4)))
    assert ww(x) == pytest.approx(expect, rel=1e-14)
    s = make_sextic(3)
    assert s([1.0, 1.0, 1.0]) == pytest.approx(3 * (0.5 + 2 + 0.5) + 3)
    qp = make_quartic_pair(0.1)
    assert qp([1.0, 1.0]) == pytest.approx(1.0 + 0.1 * 4)
    with pytest.raises(DomainError):
        builtin("nope")
    with pytest.raises(DomainError):
        make_sextic(2)


def test_coupled_harmonic_quadratic_form():
    v = np.array([[0.1, 0.2], [0.2, -0.1]])
    p = make_coupled_harmonic(2, v)
    x = np.array([0.7, -1.3])
    assert p(x) == pytest.approx(0.5 * x @ x + 0.5 * x @ v @ x)
    with pytest.raises(DomainError):
        make_coupled_harmonic(2, [[0, 1], [0, 0]])


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**31 - 1))
def test_substitution_matches_pointwise_composition(dims, seed):
    rng = np.random.default_rng(seed)
    terms = [(rng.normal(), rng.integers(0, 6 // dims + 1, dims)) for _ in range(5)]
    p = PolynomialPotential.from_terms(dims, terms)
    A = rng.normal(size=(dims, dims))
    q = p.substitute(A)
    y = rng.normal(size=(7, dims))
    np.testing.assert_allclose(evaluate(q, y), evaluate(p, y @ A.T), rtol=1e-10, atol=1e-10)


def test_permuted():
    p = PolynomialPotential.from_terms(3, [(1.0, (4, 0, 0)), (2.0, (0, 1, 1))])
    q = p.permuted((2, 0, 1))
    x = np.array([0.3, 0.5, -0.7])
    assert q(x) == pytest.approx(p(x[[1, 2, 0]]))


def test_grid_values_c_order_and_power_sum():
    p = PolynomialPotential.from_terms(2, [(1.0, (1, 0)), (10.0, (0, 1)), (0.5, (2, 2))])
    nodes = np.array([-1.0, 0.0, 2.0])
    vals = grid_values(p, nodes)
    # first axis varies slowest
    assert vals[1] == pytest.approx(p([-1.0, 0.0]))
    assert vals[3] == pytest.approx(p([0.0, -1.0]))
    assert grid_sum(p, nodes) == pytest.approx(vals.sum(), rel=1e-14)


def test_parse_roundtrip(tmp_path):
    p = make_sextic(4)
    path = tmp_path / "sextic.pot"
    path.write_text("# four sextic oscillators\n" + p.to_text())
    assert parse_potential_file(path).as_dict() == pytest.approx(p.as_dict())


@pytest.mark.parametrize("text,line", [
    ("1.0 2 0\nabc 0 2\n", 2),
    ("1.0 2 0\n1.0 2\n", 2),
    ("1.0\n", 1),
    ("1.0 2 x\n", 1),
    ("1.0 -2\n", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as err:
        parse_potential_text(text)
    assert err.value.line == line


def test_parse_empty():
    with pytest.raises(ParseError):
        parse_potential_text("# nothing\n\n")
