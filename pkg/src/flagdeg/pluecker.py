"""
Plucker coordinates with signs, quadratic exchange relations, and their
initial forms under the degeneration weight.

A coordinate is indexed by a sequence of pairwise distinct entries of
[1..n]; reordering multiplies by the sign of the sorting permutation, and
a repeated entry kills the coordinate.  A relation is a signed sum of
degree-two monomials in normalized (sorted, sign +1) coordinates.

The weight of a sorted index tuple I with #I = k counts its entries in
[k, n-1].  The initial form of a relation keeps exactly the terms of
minimal total weight; dropped terms always weigh strictly more.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

Coord = tuple[int, ...]


class Term(NamedTuple):
    """coeff * p_a * p_b with sorted factors, #a <= #b."""

    coeff: int
    a: Coord
    b: Coord


@dataclass(frozen=True)
class Relation:
    """A signed sum of degree-two monomials, tagged with its generators."""

    n: int
    k: int
    j_seq: tuple[int, ...]
    l_seq: tuple[int, ...]
    terms: tuple[Term, ...]

    def __bool__(self) -> bool:
        return bool(self.terms)


def normalize(seq: Sequence[int]) -> Optional[tuple[int, Coord]]:
    """
    Sign-normalize a raw index sequence: ``(sign, sorted support)``, or
    None when an entry repeats.

    >>> normalize((2, 1, 3))
    (-1, (1, 2, 3))
    >>> normalize((3, 1, 3)) is None
    True
    """
    if len(set(seq)) != len(seq):
        return None
    inversions = sum(
        1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j]
    )
    return (-1 if inversions % 2 else 1, tuple(sorted(seq)))


def weight(I: Sequence[int], n: int) -> int:
    """Entries of I lying in [#I, n-1]."""
    k = len(I)
    return sum(1 for x in I if k <= x <= n - 1)


def term_weight(term: Term, n: int) -> int:
    return weight(term.a, n) + weight(term.b, n)


def _canonical(a: Coord, b: Coord) -> tuple[Coord, Coord]:
    if (len(a), a) > (len(b), b):
        return b, a
    return a, b


def _collect(monomials: dict[tuple[Coord, Coord], int]) -> tuple[Term, ...]:
    terms = [Term(c, a, b) for (a, b), c in monomials.items() if c != 0]
    terms.sort(key=lambda t: (t.a, t.b))
    return tuple(terms)


def generate_relation(
    n: int, j_seq: Sequence[int], l_seq: Sequence[int], k: int
) -> Relation:
    """
    The exchange relation swapping the first k entries of J against every
    k-subsequence of L: ``p_J p_L - sum p_J' p_L'``, with like terms
    combined and vanishing coordinates dropped.
    """
    J = tuple(j_seq)
    L = tuple(l_seq)
    e, d = len(J), len(L)
    if not 1 <= k <= e:
        raise ValueError(f"need 1 <= k <= #J, got k={k}, #J={e}")
    if e > d:
        raise ValueError(f"need #J <= #L, got #J={e}, #L={d}")
    for seq in (J, L):
        if len(set(seq)) != len(seq) or any(not 1 <= x <= n for x in seq):
            raise ValueError(f"{seq} is not a sequence of distinct entries of [1..{n}]")

    acc: dict[tuple[Coord, Coord], int] = {}

    def add(sign: int, raw_a: Sequence[int], raw_b: Sequence[int]) -> None:
        na, nb = normalize(raw_a), normalize(raw_b)
        if na is None or nb is None:
            return
        key = _canonical(na[1], nb[1])
        acc[key] = acc.get(key, 0) + sign * na[0] * nb[0]

    add(1, J, L)
    for positions in itertools.combinations(range(d), k):
        j_new = list(J)
        l_new = list(L)
        for b, pos in enumerate(positions):
            j_new[b] = L[pos]
            l_new[pos] = J[b]
        add(-1, j_new, l_new)

    return Relation(n=n, k=k, j_seq=J, l_seq=L, terms=_collect(acc))


def initial_form(rel: Relation) -> Relation:
    """The sub-sum of terms of minimal total weight."""
    if not rel.terms:
        return rel
    weights = [term_weight(t, rel.n) for t in rel.terms]
    least = min(weights)
    kept = tuple(t for t, w in zip(rel.terms, weights) if w == least)
    if len(kept) == len(rel.terms):
        return rel
    return Relation(n=rel.n, k=rel.k, j_seq=rel.j_seq, l_seq=rel.l_seq, terms=kept)


def enumerate_relations(
    n: int,
    *,
    restrict_k: Optional[int] = None,
    max_degree_pairs: Optional[int] = None,
) -> Iterator[Relation]:
    """
    The canonical stream of nonzero exchange relations for rank n.

    Covers every pair of supports A (size e) and B (size d), e <= d,
    every exchange depth k, and every k-subset S of A used as the prefix
    of J = (sorted S, sorted A minus S); order is lexicographic in
    (e, d, A, B, k, S).  Relations that normalize to zero are skipped.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    pairs_seen = 0
    degrees = range(1, n)
    for e in degrees:
        for d in range(e, n):
            if max_degree_pairs is not None and pairs_seen >= max_degree_pairs:
                return
            pairs_seen += 1
            for A in itertools.combinations(range(1, n + 1), e):
                for B in itertools.combinations(range(1, n + 1), d):
                    ks = [restrict_k] if restrict_k is not None else range(1, e + 1)
                    for k in ks:
                        if not 1 <= k <= e:
                            continue
                        for S in itertools.combinations(A, k):
                            rest = tuple(x for x in A if x not in S)
                            rel = generate_relation(n, S + rest, B, k)
                            if rel.terms:
                                yield rel


def relation_to_json(rel: Relation) -> dict:
    return {
        "k": rel.k,
        "J": list(rel.j_seq),
        "L": list(rel.l_seq),
        "terms": [{"c": t.coeff, "A": list(t.a), "B": list(t.b)} for t in rel.terms],
    }


def relation_from_json(data: dict, n: int) -> Relation:
    terms = tuple(
        Term(item["c"], tuple(item["A"]), tuple(item["B"])) for item in data["terms"]
    )
    return Relation(
        n=n,
        k=data["k"],
        j_seq=tuple(data["J"]),
        l_seq=tuple(data["L"]),
        terms=terms,
    )
