import doctest
from math import factorial

import pytest

import eulerlab.perms
from eulerlab.perms import (MAX_ENUM_N, enumerate_perms, inverse,
                            is_derangement, stable_subsets, stats)


def test_doctests():
    failures, _ = doctest.testmod(eulerlab.perms)
    assert failures == 0


def test_enumeration_order_and_count():
    perms = list(enumerate_perms(3))
    assert perms[0] == (1, 2, 3)
    assert perms[-1] == (3, 2, 1)
    assert perms == sorted(perms)
    assert len(perms) == 6
    for n in range(1, 7):
        assert sum(1 for _ in enumerate_perms(n)) == factorial(n)


def test_enumeration_partition():
    for n in (1, 4, 5):
        whole = list(enumerate_perms(n))
        glued = []
        for first in range(1, n + 1):
            glued.extend(enumerate_perms(n, first=first))
        assert glued == whole


def test_enumeration_guards():
    with pytest.raises(ValueError):
        list(enumerate_perms(0))
    with pytest.raises(ValueError):
        list(enumerate_perms(MAX_ENUM_N + 1))
    with pytest.raises(ValueError):
        list(enumerate_perms(3, first=4))


def test_stats_examples():
    st = stats((1, 2, 3, 4))
    assert (st.des, st.exc, st.fix, st.maj) == (0, 0, 4, 0)
    assert st.des_set == ()
    st = stats((2, 1))
    assert (st.des, st.exc, st.fix, st.maj) == (1, 1, 0, 1)
    st = stats((2, 4, 1, 3))
    assert (st.des, st.exc, st.fix, st.maj) == (1, 2, 0, 2)
    assert st.des_set == (2,)
    st = stats((4, 3, 2, 1))
    assert (st.des, st.exc, st.maj) == (3, 2, 6)


def test_stats_consistency():
    for n in range(1, 7):
        for perm in enumerate_perms(n):
            st = stats(perm)
            assert st.des == len(st.des_set)
            assert st.maj == sum(st.des_set)
            assert 0 <= st.exc <= n - 1
            assert st.maj >= st.exc


def test_stats_validation():
    with pytest.raises(ValueError):
        stats((1, 3))
    with pytest.raises(ValueError):
        stats((0, 1))
    with pytest.raises(ValueError):
        stats((1, 1, 2))


def test_inverse():
    assert inverse((2, 4, 1, 3)) == (3, 1, 4, 2)
    assert inverse((1,)) == (1,)
    for perm in enumerate_perms(5):
        assert inverse(inverse(perm)) == perm


def test_is_derangement():
    assert is_derangement((2, 1))
    assert not is_derangement((1, 2))
    # 321 fixes position 2, so it is not a derangement
    assert not is_derangement((3, 2, 1))
    assert sorted(p for p in enumerate_perms(3) if is_derangement(p)) == \
        [(2, 3, 1), (3, 1, 2)]
    assert sum(1 for p in enumerate_perms(4) if is_derangement(p)) == 9


def test_stable_subsets():
    assert stable_subsets(2, 1) == [()]
    assert stable_subsets(2, 3) == [(), (2,), (3,)]
    assert stable_subsets(2, 5) == [
        (), (2,), (3,), (4,), (5,), (2, 4), (2, 5), (3, 5)]
    with pytest.raises(ValueError):
        stable_subsets(2, 0)


def test_stable_subsets_no_consecutive():
    for sub in stable_subsets(1, 9):
        assert all(b - a >= 2 for a, b in zip(sub, sub[1:]))
    # Fibonacci count: subsets of an m-chain without neighbors
    counts = [len(stable_subsets(1, m)) for m in range(0, 7)]
    assert counts == [1, 2, 3, 5, 8, 13, 21]
