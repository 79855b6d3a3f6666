import pytest
from hypothesis import given, strategies as st

from bruhat_operads.core import (
    is_interval_end,
    k_subsets,
    make_subset,
    monotone_bijection,
    packet,
)


@pytest.mark.parametrize("n, k, expected", [
    (3, 2, [(1, 2), (1, 3), (2, 3)]),
    (4, 4, [(1, 2, 3, 4)]),
    (3, 4, []),
    (0, 0, [()]),
])
def test_k_subsets(n, k, expected):
    assert k_subsets(n, k) == expected


def test_k_subsets_rejects_negative():
    with pytest.raises(ValueError):
        k_subsets(-1, 2)


@pytest.mark.parametrize("s, expected", [
    ((1, 2, 3), ((1, 2), (1, 3), (2, 3))),
    ((1, 2), ((1,), (2,))),
    ((1, 3, 4), ((1, 3), (1, 4), (3, 4))),
])
def test_packet(s, expected):
    p = packet(s)
    assert p.members == expected
    assert p.source == s


def test_packet_positions():
    p = packet((1, 2, 3, 4))
    assert p.positions({(1, 2, 3), (2, 3, 4)}) == (0, 3)
    assert p.position((1, 3, 4)) == 2


def test_make_subset():
    assert make_subset([3, 1, 2], 3) == (1, 2, 3)
    for bad in ([1, 1], [0, 2]):
        with pytest.raises(ValueError):
            make_subset(bad)
    with pytest.raises(ValueError):
        make_subset([1, 5], 4)


def test_monotone_bijection_examples():
    phi = monotone_bijection([1, 2, 3], [1, 2, 5])
    assert dict(phi) == {1: 1, 2: 2, 3: 5}
    assert dict(monotone_bijection([4], [9])) == {4: 9}
    assert dict(monotone_bijection([1, 2], [1, 2])) == {1: 1, 2: 2}
    assert phi.preimage((2, 5)) == (2, 3)
    assert phi.image((1, 3)) == (1, 5)


def test_monotone_bijection_size_mismatch():
    with pytest.raises(ValueError):
        monotone_bijection([1, 2], [1])


@given(st.sets(st.integers(1, 12), min_size=1, max_size=8))
def test_packet_shape(s):
    s = tuple(sorted(s))
    p = packet(s)
    assert len(p) == len(s)
    assert len(set(p.members)) == len(s)
    assert all(len(m) == len(s) - 1 for m in p.members)
    assert set().union(*map(set, p.members)) == set(s) or len(s) == 1
    assert list(p.members) == sorted(p.members)


@given(st.sets(st.integers(-50, 50), max_size=10), st.integers(0, 100))
def test_monotone_bijection_roundtrip(src, shift):
    src = sorted(src)
    dst = [2 * x + shift for x in src]
    phi = monotone_bijection(src, dst)
    inv = phi.inverse()
    assert [inv[phi[x]] for x in src] == src
    assert all(phi[a] < phi[b] for a, b in zip(src, src[1:]))


@pytest.mark.parametrize("positions, length, expected", [
    ((), 4, True), ((0, 1, 2, 3), 4, True), ((0, 1), 4, True), ((2, 3), 4, True),
    ((1,), 3, False), ((0, 2), 3, False), ((1, 2), 4, False),
])
def test_is_interval_end(positions, length, expected):
    assert is_interval_end(positions, length) is expected
