"""
Symmetric group combinatorics on 1-indexed one-line notation.

A permutation v in S_n is stored as the tuple ``(v(1), ..., v(n))``; all
indices and values run from 1 to n.  Products compose as functions,
``compose(u, v)(i) == u(v(i))``, so a word ``s_a s_b`` evaluated left to
right applies ``s_b`` first.

Two partial orders live here: the Bruhat order on S_n, decided through
rank counts, and the induced componentwise order on k-subsets of [n]
(the "Grassmannian" order on sorted index tuples).
"""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def is_one_line(seq: Sequence[int]) -> bool:
    """Check that seq is a permutation of [1..n] in one-line notation."""
    n = len(seq)
    return n > 0 and sorted(seq) == list(range(1, n + 1))


def parse_perm(text: str) -> Perm:
    """
    Parse comma-separated one-line notation, e.g. ``"2,3,1,4"``.

    >>> parse_perm("2,3,1")
    (2, 3, 1)
    """
    try:
        images = tuple(int(part) for part in text.strip().split(","))
    except ValueError:
        raise ValueError(f"not a permutation string: {text!r}") from None
    if not is_one_line(images):
        raise ValueError(f"not a permutation of 1..{len(images)}: {text!r}")
    return images


def format_perm(v: Perm) -> str:
    return ",".join(str(x) for x in v)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def simple(n: int, i: int) -> Perm:
    """The simple transposition s_i = (i, i+1) in S_n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} is not a generator of S_{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def compose(u: Perm, v: Perm) -> Perm:
    """Functional composition: compose(u, v)(i) = u(v(i))."""
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)} vs {len(v)}")
    return tuple(u[x - 1] for x in v)


def inverse(v: Perm) -> Perm:
    inv = [0] * len(v)
    for i, x in enumerate(v, start=1):
        inv[x - 1] = i
    return tuple(inv)


def length(v: Perm) -> int:
    """Number of inversions #{(i,j) : i<j, v(i)>v(j)}."""
    n = len(v)
    return sum(1 for i in range(n) for j in range(i + 1, n) if v[i] > v[j])


def right_descents(v: Perm) -> list[int]:
    """Indices i with v s_i < v, i.e. v(i) > v(i+1)."""
    return [i for i in range(1, len(v)) if v[i - 1] > v[i]]


def mult_right(v: Perm, i: int) -> Perm:
    """v * s_i: swap the images at positions i, i+1."""
    images = list(v)
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def perm_of_word(n: int, letters: Iterable[int]) -> Perm:
    """Evaluate a word in the generators, left to right: s_{a1} s_{a2} ..."""
    v = identity(n)
    for a in letters:
        if not 1 <= a <= n - 1:
            raise ValueError(f"letter s_{a} outside S_{n}")
        v = mult_right(v, a)
    return v


def rank_count(w: Perm, i: int, j: int) -> int:
    """
    #{a in [1..i] : w(a) >= j}, the rank function deciding Bruhat order.

    >>> rank_count((4, 3, 1, 2), 2, 3)
    2
    """
    n = len(w)
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i},{j}) out of range for S_{n}")
    return sum(1 for a in range(i) if w[a] >= j)


def bruhat_leq(u: Perm, v: Perm) -> bool:
    """
    True iff u <= v in Bruhat order: every rank count of u is <= that of v.

    >>> bruhat_leq((1, 2, 3), (3, 1, 2))
    True
    >>> bruhat_leq((2, 3, 1), (3, 1, 2))
    False
    """
    n = len(u)
    if len(v) != n:
        raise ValueError(f"rank mismatch: {len(u)} vs {len(v)}")
    for i in range(1, n + 1):
        cu = cv = 0
        # Sweep j downward so each count is cumulative.
        for j in range(n, 1, -1):
            cu += sum(1 for a in range(i) if u[a] == j)
            cv += sum(1 for a in range(i) if v[a] == j)
            if cu > cv:
                return False
    return True


def grassmann_leq(A: Sequence[int], B: Sequence[int]) -> bool:
    """
    Componentwise order on sorted index tuples of equal size (reflexive).

    >>> grassmann_leq((1, 3), (2, 3))
    True
    >>> grassmann_leq((2, 4), (1, 4))
    False
    """
    if len(A) != len(B):
        raise ValueError(f"cardinality mismatch: {len(A)} vs {len(B)}")
    return all(a <= b for a, b in zip(sorted(A), sorted(B)))


def apply_to_set(v: Perm, A: Iterable[int]) -> tuple[int, ...]:
    """Elementwise image of an index set, returned sorted."""
    return tuple(sorted(v[a - 1] for a in A))


def min_coset_rep(v: Perm, mask: Iterable[int]) -> Perm:
    """
    Minimal length representative of the coset v<s_i : i in mask>.

    Obtained by sorting v's images over each run of consecutive mask
    generators (generators i and i+1 both in the mask glue positions
    i..i+2 into one sorted block).
    """
    n = len(v)
    mask_set = set(mask)
    if any(not 1 <= i <= n - 1 for i in mask_set):
        raise ValueError(f"mask {sorted(mask_set)} outside generators of S_{n}")
    images = list(v)
    i = 1
    while i <= n - 1:
        if i in mask_set:
            j = i
            while j + 1 <= n - 1 and j + 1 in mask_set:
                j += 1
            images[i - 1 : j + 1] = sorted(images[i - 1 : j + 1])
            i = j + 1
        else:
            i += 1
    return tuple(images)


def coxeter_c(n: int) -> Perm:
    """
    The Coxeter element s_{n-1} s_{n-2} ... s_1 = [n, 1, 2, ..., n-1].

    >>> coxeter_c(4)
    (4, 1, 2, 3)
    """
    if n < 1:
        raise ValueError("rank must be positive")
    return (n,) + tuple(range(1, n))


def longest_element(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def leq_c(v: Perm) -> bool:
    """
    True iff v <= coxeter_c(n): every prefix image v([d]) is [d-1]
    together with one value >= d.
    """
    n = len(v)
    seen: set[int] = set()
    for d in range(1, n):
        seen.add(v[d - 1])
        # |seen| = d, so one value >= d forces the rest to be [d-1].
        if sum(1 for x in seen if x >= d) != 1:
            return False
    return True


def chain_perm(n: int, hi: int, lo: int) -> Perm:
    """The product s_hi s_{hi-1} ... s_lo; identity when hi < lo."""
    return perm_of_word(n, range(hi, lo - 1, -1))


def reduced_word(v: Perm) -> tuple[int, ...]:
    """
    Canonical reduced word, read left to right as s_{a1} s_{a2} ...

    Deterministic: the smallest right descent is stripped repeatedly, so
    the last letter of the word is the first descent stripped.

    >>> reduced_word((2, 3, 1, 4))
    (1, 2)
    >>> reduced_word((4, 3, 1, 2))
    (2, 3, 1, 2, 1)
    """
    stripped = []
    w = v
    while True:
        descents = right_descents(w)
        if not descents:
            break
        i = descents[0]
        stripped.append(i)
        w = mult_right(w, i)
    return tuple(reversed(stripped))


def format_word(letters: Sequence[int]) -> str:
    """Render a word as ``"s1 s2"``; the empty word renders as ``"e"``."""
    if not letters:
        return "e"
    return " ".join(f"s{a}" for a in letters)


def distinct_letter(v: Perm) -> bool:
    """True iff the canonical reduced word repeats no letter."""
    word = reduced_word(v)
    return len(set(word)) == len(word)


def support(v: Perm) -> tuple[int, ...]:
    """
    Generator indices appearing in any reduced word of v: those d with
    v([d]) != [d].
    """
    n = len(v)
    out = []
    top = 0
    for d in range(1, n):
        top = max(top, v[d - 1])
        if top > d:
            out.append(d)
    return tuple(out)


def all_perms(n: int) -> Iterable[Perm]:
    """All of S_n in lexicographic one-line order."""
    return itertools.permutations(range(1, n + 1))
