"""
Index-level embedding of the degenerate flag variety into the variety of
odd-dimensional partial flags in dimension 2n-2.

The embedded image is the Schubert variety of ``embedded_flag_perm(n)``;
``opposite_base_perm(n)`` anchors the opposite side of the Richardson
intersections.  Vector-space projections are never materialized: the
whole correspondence is checked on coordinate indices, where it must
restrict to a bijection between non-vanishing Plucker coordinates on
both sides.  Signs are irrelevant here because only vanishing of
coordinates is compared.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .symgroup import (
    Perm,
    apply_to_set,
    bruhat_leq,
    chain_perm,
    compose,
    grassmann_leq,
    longest_element,
    min_coset_rep,
    simple,
)

IndexSet = tuple[int, ...]


def embedded_flag_perm(n: int) -> Perm:
    """
    The element of S_{2n-2} whose Schubert variety is the embedded
    degenerate flag variety: even slots carry r, odd slots carry n+r-1.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    images = []
    for i in range(1, 2 * n - 1):
        r = (i + 1) // 2
        images.append(r if i % 2 == 0 else n + r - 1)
    return tuple(images)


def opposite_base_perm(n: int) -> Perm:
    """The base point of the Richardson pairs: fixes 1, shifts even slots up."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    images = [1]
    for i in range(2, 2 * n - 1):
        r = (i + 1) // 2
        images.append(r + 1 if i % 2 == 0 else n + r - 1)
    return tuple(images)


def project_index(j: int, k: int, n: int) -> int:
    """Fold [n+1, n+k-1] down by n; identity on [k, n]."""
    if k <= j <= n:
        return j
    if n + 1 <= j <= n + k - 1:
        return j - n
    raise ValueError(f"{j} outside [{k}, {n + k - 1}]")


def lift_index(j: int, k: int, n: int) -> int:
    """Send [k-1] up by n; identity on [k, n]."""
    if k <= j <= n:
        return j
    if 1 <= j <= k - 1:
        return j + n
    raise ValueError(f"{j} outside [1, {n}]")


def lift_seq(seq: Sequence[int], n: int) -> tuple[int, ...]:
    """Prefix 1..k-1, then lift each entry; k is the sequence length."""
    k = len(seq)
    return tuple(range(1, k)) + tuple(lift_index(j, k, n) for j in seq)


def admissible_sets(u: Perm, v: Perm, k: int, n: int) -> list[IndexSet]:
    """
    All index sets of size 2k-1 sandwiched between u([2k-1]) and
    v([2k-1]) in the componentwise order.
    """
    size = 2 * k - 1
    top = apply_to_set(v, range(1, size + 1))
    bottom = apply_to_set(u, range(1, size + 1))
    return [
        K
        for K in itertools.combinations(range(1, 2 * n - 1), size)
        if grassmann_leq(K, top) and grassmann_leq(bottom, K)
    ]


@dataclass(frozen=True)
class CorrespondencePair:
    """A Schubert index x in S_n against a Richardson pair u <= v in S_{2n-2}."""

    x: Perm
    u: Perm
    v: Perm
    excluded: Optional[tuple[IndexSet, IndexSet]] = None

    @property
    def n(self) -> int:
        return len(self.x)


def _validate_pair(pair: CorrespondencePair) -> None:
    n = pair.n
    big = 2 * n - 2
    if len(pair.u) != big or len(pair.v) != big:
        raise ValueError(f"u, v must live in S_{big}")
    if not bruhat_leq(pair.u, pair.v):
        raise ValueError("pair violates u <= v")
    if not bruhat_leq(pair.v, embedded_flag_perm(n)):
        raise ValueError("pair violates v <= embedded flag permutation")
    parabolic = set(range(2, big - 1, 2))
    for name, w in (("u", pair.u), ("v", pair.v)):
        if min_coset_rep(w, parabolic) != w:
            raise ValueError(f"{name} is not minimal in its even-parabolic coset")


def correspondence_tables(
    pair: CorrespondencePair,
) -> dict[int, list[tuple[IndexSet, IndexSet]]]:
    """
    Per size k, the matching (I, K) between non-vanishing coordinates of
    the small side and admissible sets of the Richardson side, or raise
    if the pair's invariants fail.
    """
    _validate_pair(pair)
    n = pair.n
    tables: dict[int, list[tuple[IndexSet, IndexSet]]] = {}
    for k in range(1, n):
        bound = apply_to_set(pair.x, range(1, k + 1))
        small = [
            I
            for I in itertools.combinations(range(1, n + 1), k)
            if grassmann_leq(I, bound)
        ]
        tables[k] = [
            (I, tuple(sorted(set(range(1, k)) | {lift_index(j, k, n) for j in I})))
            for I in small
        ]
    return tables


def verify_correspondence(pair: CorrespondencePair) -> bool:
    """
    True iff for every k the lift is a bijection from the non-vanishing
    small coordinates onto the admissible sets, inverted by the fold.
    """
    tables = correspondence_tables(pair)
    n = pair.n
    for k, matches in tables.items():
        image = {K for _, K in matches}
        if len(image) != len(matches):
            return False
        if image != set(admissible_sets(pair.u, pair.v, k, n)):
            return False
        for I, K in matches:
            folded = tuple(sorted(project_index(j, k, n) for j in K if j >= k))
            if folded != I:
                return False
    return True


def chain_pair(n: int, m: int) -> CorrespondencePair:
    """
    The pair for the descending chain x = s_m ... s_1: the Richardson
    variety between the base point and its m-fold shift.
    """
    if not 1 <= m <= n - 1:
        raise ValueError(f"m must lie in [1, {n - 1}]")
    base = opposite_base_perm(n)
    shifted = compose(chain_perm(2 * n - 2, m, 1), base)
    return CorrespondencePair(x=chain_perm(n, m, 1), u=base, v=shifted)


def middle_divisor_pair(i: int) -> CorrespondencePair:
    """
    The pair identifying the middle Schubert divisor of an odd-rank flag
    variety (n = 2i-1) with a Richardson variety; exactly one coordinate
    is excluded on each side.
    """
    if i < 2:
        raise ValueError("middle divisor pair needs i >= 2")
    n = 2 * i - 1
    x = compose(longest_element(n), simple(n, i))
    return CorrespondencePair(
        x=x,
        u=simple(2 * n - 2, 2 * i - 1),
        v=embedded_flag_perm(n),
        excluded=(tuple(range(i, n + 1)), tuple(range(1, n + 1))),
    )


def pair_report(pair: CorrespondencePair) -> dict:
    """JSON-ready description with the per-size bijection tables."""
    from .symgroup import format_perm

    verified = verify_correspondence(pair)
    tables = correspondence_tables(pair)
    return {
        "x": format_perm(pair.x),
        "u": format_perm(pair.u),
        "v": format_perm(pair.v),
        "verified": verified,
        "excluded": [list(side) for side in pair.excluded] if pair.excluded else None,
        "tables": {
            str(k): [[list(I), list(K)] for I, K in matches]
            for k, matches in tables.items()
        },
    }
