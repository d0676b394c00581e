"""Distribution polynomials built by enumerating the symmetric group.

Every builder folds one statistic vector over S_n and returns a sparse
polynomial with integer coefficients.  Builders are cached: the joint
descent/excedance polynomial for n = 9 takes a few seconds to enumerate
and several verification suites want it.

Variable conventions (fixed package-wide):

* ``s`` marks descents, ``t`` marks excedances in the joint polynomial;
* ``p`` marks descents, ``q`` carries the major-index/excedance gap in
  the three-variable refinements;
* ``x`` is the variable of single-statistic polynomials.

The three-variable builders assert that the major index of every
permutation is at least its excedance count.  A violation would falsify
the identities this package verifies, so it stops the build immediately
with the offending permutation in the message.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, partial

from .mpoly import MPoly
from .parallel import pmap, thread_count
from .perms import MAX_ENUM_N, enumerate_perms, inverse, stable_subsets, stats


def _merge(parts):
    total: dict = {}
    for part in parts:
        for key, count in part.items():
            total[key] = total.get(key, 0) + count
    return total


def _fold(n: int, counter) -> dict:
    """Run ``counter(n, first)`` over the first-value partition of S_n.

    Single pass when one thread is configured; otherwise one task per
    first value, merged in increasing order.
    """
    if thread_count() <= 1 or n < 4:
        return counter(n, None)
    return _merge(pmap(partial(counter, n), range(1, n + 1)))


def _count_des_exc(n: int, first: int | None) -> dict:
    counts: dict[tuple[int, int], int] = {}
    for perm in enumerate_perms(n, first):
        des = 0
        exc = 0
        prev = perm[0]
        if prev > 1:
            exc = 1
        for i in range(1, n):
            v = perm[i]
            if prev > v:
                des += 1
            if v > i + 1:
                exc += 1
            prev = v
        key = (des, exc)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _count_single(n: int, first: int | None, stat: str) -> dict:
    use_des = stat == "des"
    counts: dict[int, int] = {}
    for perm in enumerate_perms(n, first):
        k = 0
        if use_des:
            for i in range(1, n):
                if perm[i - 1] > perm[i]:
                    k += 1
        else:
            for i in range(n):
                if perm[i] > i + 1:
                    k += 1
        counts[k] = counts.get(k, 0) + 1
    return counts


def _count_trivariate(n: int, first: int | None, derangements_only: bool) -> dict:
    counts: dict[tuple[int, int, int], int] = {}
    for perm in enumerate_perms(n, first):
        des = 0
        maj = 0
        exc = 0
        fixed = False
        prev = perm[0]
        if prev > 1:
            exc = 1
        elif prev == 1:
            fixed = True
        for i in range(1, n):
            v = perm[i]
            if prev > v:
                des += 1
                maj += i
            if v > i + 1:
                exc += 1
            elif v == i + 1:
                fixed = True
            prev = v
        if derangements_only and fixed:
            continue
        if maj < exc:
            raise AssertionError(
                f"major index below excedance count for {perm}")
        key = (exc, des, maj - exc)
        counts[key] = counts.get(key, 0) + 1
    return counts


@lru_cache(maxsize=None)
def eulerian_st(n: int) -> MPoly:
    """Joint distribution of (des, exc) over S_n, as a polynomial in s, t."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"n must be between 1 and {MAX_ENUM_N}, got {n}")
    counts = _fold(n, _count_des_exc)
    return MPoly(("s", "t"), {(d, e): c for (d, e), c in counts.items()})


@lru_cache(maxsize=None)
def classic_eulerian(n: int, stat: str = "des") -> MPoly:
    """Single-statistic distribution over S_n in the variable x."""
    if stat not in ("des", "exc"):
        raise ValueError(f"stat must be 'des' or 'exc', got {stat!r}")
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"n must be between 1 and {MAX_ENUM_N}, got {n}")
    counts = _fold(n, partial(_count_single, stat=stat))
    return MPoly(("x",), {(k,): c for k, c in counts.items()})


@lru_cache(maxsize=None)
def derangement_poly(n: int) -> MPoly:
    """Excedance distribution over the derangements of S_n, in x."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"n must be between 1 and {MAX_ENUM_N}, got {n}")
    counts: dict[int, int] = {}
    for perm in enumerate_perms(n):
        exc = 0
        fixed = False
        for i, v in enumerate(perm, start=1):
            if v > i:
                exc += 1
            elif v == i:
                fixed = True
                break
        if fixed:
            continue
        counts[exc] = counts.get(exc, 0) + 1
    return MPoly(("x",), {(k,): c for k, c in counts.items()})


_TRIVAR_MAX_N = 11


@lru_cache(maxsize=None)
def trivariate(n: int) -> MPoly:
    """Distribution of (exc, des, maj - exc) over S_n, in t, p, q.

    The exponent of t is the excedance count, p marks descents and q
    carries the gap between major index and excedance count.
    """
    if not 1 <= n <= _TRIVAR_MAX_N:
        raise ValueError(f"n must be between 1 and {_TRIVAR_MAX_N}, got {n}")
    counts = _fold(n, partial(_count_trivariate, derangements_only=False))
    return MPoly(("t", "p", "q"),
                 {(e, d, g): c for (e, d, g), c in counts.items()})


@lru_cache(maxsize=None)
def derangement_lhs(n: int) -> MPoly:
    """Same refinement as :func:`trivariate`, restricted to derangements."""
    if not 2 <= n <= _TRIVAR_MAX_N:
        raise ValueError(f"n must be between 2 and {_TRIVAR_MAX_N}, got {n}")
    counts = _fold(n, partial(_count_trivariate, derangements_only=True))
    return MPoly(("t", "p", "q"),
                 {(e, d, g): c for (e, d, g), c in counts.items()})


@lru_cache(maxsize=None)
def xi(n: int, i: int) -> MPoly:
    """Weight polynomial of the sparse-descent-set slice of S_n, in p, q.

    Sums ``p ** (1 + des(w)) * q ** maj(w)`` over the inverses w of the
    permutations whose descent set lies inside [2, n-2], contains no two
    consecutive positions, and has exactly i - 1 members.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 1 <= i <= n // 2:
        raise ValueError(f"i must lie in 1..{n // 2} for n={n}, got {i}")
    allowed = _slice_filter(n)
    counts: dict[tuple[int, int], int] = {}
    for perm in enumerate_perms(n):
        st = stats(perm)
        if len(st.des_set) != i - 1 or st.des_set not in allowed:
            continue
        w = stats(inverse(perm))
        key = (1 + w.des, w.maj)
        counts[key] = counts.get(key, 0) + 1
    return MPoly(("p", "q"), {(a, b): c for (a, b), c in counts.items()})


def _slice_filter(n: int) -> set[tuple[int, ...]]:
    # the interval [2, n-2] is empty below n = 4, leaving only the empty set
    if n < 4:
        return {()}
    return set(stable_subsets(2, n - 2))


def xi_transposed(n: int, i: int) -> MPoly:
    """Variant of :func:`xi` with the filter applied to the inverse instead.

    Equal to :func:`xi` because inversion is a bijection of S_n; kept as
    an independently computed route so the equality can be checked rather
    than assumed.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 1 <= i <= n // 2:
        raise ValueError(f"i must lie in 1..{n // 2} for n={n}, got {i}")
    allowed = _slice_filter(n)
    counts: dict[tuple[int, int], int] = {}
    for perm in enumerate_perms(n):
        st = stats(inverse(perm))
        if len(st.des_set) != i - 1 or st.des_set not in allowed:
            continue
        w = stats(perm)
        key = (1 + w.des, w.maj)
        counts[key] = counts.get(key, 0) + 1
    return MPoly(("p", "q"), {(a, b): c for (a, b), c in counts.items()})


def exc_slice(n: int, k: int) -> MPoly:
    """Descent distribution over the excedance-k slice of S_n, in s."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must lie in 0..{n - 1} for n={n}, got {k}")
    return eulerian_st(n).coeff_of("t", k)


# ----------------------------------------------------------------------
# declarative construction, used by the command line

FAMILIES = ("des_exc", "classic_eulerian", "derangement", "trivariate",
            "derangement_refined", "xi", "exc_slice")


@dataclass(frozen=True)
class DistributionSpec:
    """A family name plus the integers needed to pin down one member."""
    family: str
    n: int
    i: int | None = None
    k: int | None = None


def build_distribution(spec: DistributionSpec) -> MPoly:
    if spec.family not in FAMILIES:
        raise ValueError(f"unknown family {spec.family!r}; "
                         f"expected one of {', '.join(FAMILIES)}")
    if spec.family == "xi":
        if spec.i is None:
            raise ValueError("family 'xi' needs --i")
        return xi(spec.n, spec.i)
    if spec.family == "exc_slice":
        if spec.k is None:
            raise ValueError("family 'exc_slice' needs --k")
        return exc_slice(spec.n, spec.k)
    if spec.i is not None or spec.k is not None:
        raise ValueError(f"family {spec.family!r} takes no --i/--k")
    builder = {
        "des_exc": eulerian_st,
        "classic_eulerian": classic_eulerian,
        "derangement": derangement_poly,
        "trivariate": trivariate,
        "derangement_refined": derangement_lhs,
    }[spec.family]
    return builder(spec.n)
