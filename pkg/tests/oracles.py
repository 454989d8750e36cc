"""
Independent brute-force oracles the tests check the library against.

Everything here recomputes from first principles (graph closures, full
enumerations, exact determinants) and deliberately avoids the library's
own shortcuts.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from flagdeg.symgroup import Perm, all_perms, identity, length


def transposition(n: int, i: int, j: int) -> Perm:
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
    return tuple(images)


def bruhat_closure(n: int) -> dict[Perm, set[Perm]]:
    """
    For each u, the set {w : u <= w}, as the transitive closure of the
    covering moves u -> u*t with t a transposition and length +1.
    """
    perms = list(all_perms(n))
    ts = [transposition(n, i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    up_edges: dict[Perm, list[Perm]] = {}
    for u in perms:
        lu = length(u)
        edges = []
        for t in ts:
            w = tuple(u[t[a] - 1] for a in range(n))  # u * t
            if length(w) == lu + 1:
                edges.append(w)
        up_edges[u] = edges
    closure: dict[Perm, set[Perm]] = {}
    for u in sorted(perms, key=length, reverse=True):
        reach = {u}
        for w in up_edges[u]:
            reach |= closure[w]
        closure[u] = reach
    return closure


def parabolic_elements(n: int, mask: set[int]) -> list[Perm]:
    """All elements of <s_i : i in mask>, by BFS over generators."""
    from flagdeg.symgroup import mult_right

    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for v in frontier:
            for i in mask:
                w = mult_right(v, i)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


def coset_min_oracle(v: Perm, mask: set[int]) -> Perm:
    """Minimum-length element of v * <s_i : i in mask> by full enumeration."""
    from flagdeg.symgroup import compose

    coset = [compose(v, h) for h in parabolic_elements(len(v), mask)]
    return min(coset, key=lambda w: (length(w), w))


def all_reduced_words(v: Perm) -> list[tuple[int, ...]]:
    """Every reduced word of v, via DFS over right descents."""
    from flagdeg.symgroup import mult_right, right_descents

    if length(v) == 0:
        return [()]
    words = []
    for i in right_descents(v):
        for tail in all_reduced_words(mult_right(v, i)):
            words.append(tail + (i,))
    return words


def exact_det(rows: list[list[int]]) -> Fraction:
    """Fraction-free-enough determinant over the rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] / m[col][col]
            for c in range(col, size):
                m[r][c] -= factor * m[col][c]
    return det


def minor(matrix: list[list[int]], rows: tuple[int, ...]) -> Fraction:
    """Determinant of the submatrix on the given 1-indexed rows and leading columns."""
    k = len(rows)
    sub = [[matrix[r - 1][c] for c in range(k)] for r in rows]
    return exact_det(sub)


def random_unimodularish(n: int, rng) -> list[list[int]]:
    """A random integer matrix with nonzero determinant."""
    while True:
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        if exact_det(m) != 0:
            return m


def subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(1, n + 1), k))
