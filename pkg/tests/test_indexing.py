import itertools

import pytest
from hypothesis import given, strategies as st

from lsfcolloc.errors import DomainError
from lsfcolloc.indexing import decode, decode_floor_formula, encode, node_label, node_offset


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("dims", range(1, 5))
def test_exhaustive_bijection(m, dims):
    seen = []
    for idx in itertools.product(range(1, m + 1), repeat=dims):
        flat = encode(idx, m)
        assert decode(flat, m, dims) == idx
        assert decode_floor_formula(flat, m, dims) == idx
        seen.append(flat)
    # C order: lexicographic multi-indices give consecutive flat indices
    assert seen == list(range(1, m**dims + 1))


@given(st.integers(2, 40), st.integers(1, 6), st.data())
def test_roundtrip_random(m, dims, data):
    flat = data.draw(st.integers(1, m**dims))
    assert encode(decode(flat, m, dims), m) == flat


def test_floor_formula_needs_small_eps():
    # eps = 0.5 is fine for M = 2 but not once c * eps > 1
    assert decode_floor_formula(encode((4, 1), 4), 4, 2, eps=0.5) != (4, 1)
    assert decode_floor_formula(encode((4, 1), 4), 4, 2, eps=0.25) == (4, 1)


def test_first_index_varies_slowest():
    assert encode((1, 1, 2), 5) == 2
    assert encode((2, 1, 1), 5) == 26


def test_index_errors():
    with pytest.raises(DomainError):
        encode((0, 1), 3)
    with pytest.raises(DomainError):
        encode((1, 4), 3)
    with pytest.raises(DomainError):
        decode(0, 3, 2)
    with pytest.raises(DomainError):
        decode(10, 3, 2)
    with pytest.raises(DomainError):
        encode((), 3)


def test_node_labels():
    assert [node_offset(i, 6) for i in range(1, 6)] == [-2, -1, 0, 1, 2]
    assert all(node_label(node_offset(i, 10), 10) == i for i in range(1, 10))
    with pytest.raises(DomainError):
        node_offset(6, 6)
    with pytest.raises(DomainError):
        node_label(3, 6)
