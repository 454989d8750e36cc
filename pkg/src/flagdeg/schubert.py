"""
Schubert vanishing ideals and the monomial scan.

A context wraps a permutation v: the coordinate p_A vanishes on the
Schubert variety of v exactly when the sorted tuple A fails the
componentwise comparison against v([#A]).  Restricting a relation drops
the terms with a vanishing factor; a relation certifies reducibility of
the degenerate Schubert variety when its initial form restricts to a
single surviving term.

``sweep`` runs the full S_n table: one row per permutation with the
monomial verdict, the seven fast criteria, the rank-1/rank-2
classification and the mono-freeness guarantee, in lexicographic
one-line order.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Optional, Sequence

from .pluecker import Relation, Term, enumerate_relations, initial_form, term_weight
from .symgroup import (
    Perm,
    all_perms,
    apply_to_set,
    format_perm,
    format_word,
    grassmann_leq,
    identity,
    reduced_word,
)


class ResourceLimitError(RuntimeError):
    """Raised when a sweep exceeds its rank bound or wall-clock budget."""


@dataclass(frozen=True)
class SchubertContext:
    """A permutation together with its coordinate-vanishing predicate."""

    v: Perm

    @cached_property
    def n(self) -> int:
        return len(self.v)

    @cached_property
    def _prefix_images(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(self.v[:d])) for d in range(1, self.n + 1))

    @cached_property
    def _vanish_cache(self) -> dict[tuple[int, ...], bool]:
        return {}

    def vanishes(self, A: Sequence[int]) -> bool:
        key = tuple(A)
        cache = self._vanish_cache
        hit = cache.get(key)
        if hit is None:
            if not 1 <= len(key) <= self.n:
                raise ValueError(f"coordinate {key} out of range for rank {self.n}")
            hit = not grassmann_leq(key, self._prefix_images[len(key) - 1])
            cache[key] = hit
        return hit


@dataclass(frozen=True)
class MonomialWitness:
    """A relation whose restricted initial form is the single surviving term."""

    k: int
    j_seq: tuple[int, ...]
    l_seq: tuple[int, ...]
    term: Term

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "J": list(self.j_seq),
            "L": list(self.l_seq),
            "term": {"c": self.term.coeff, "A": list(self.term.a), "B": list(self.term.b)},
        }


@dataclass(frozen=True)
class SweepRow:
    v: Perm
    one_line: str
    word: str
    mono: bool
    flags: tuple[bool, bool, bool, bool, bool, bool, bool]
    thm41: bool
    guarantee: Optional[str]


def vanishes(ctx: SchubertContext, A: Sequence[int]) -> bool:
    """True iff p_A is in the vanishing ideal of ctx's Schubert variety."""
    return ctx.vanishes(A)


def restrict(rel: Relation, ctx: SchubertContext) -> Relation:
    """Drop every term with a factor vanishing on the Schubert variety."""
    kept = tuple(t for t in rel.terms if not ctx.vanishes(t.a) and not ctx.vanishes(t.b))
    if len(kept) == len(rel.terms):
        return rel
    return Relation(n=rel.n, k=rel.k, j_seq=rel.j_seq, l_seq=rel.l_seq, terms=kept)


@lru_cache(maxsize=None)
def relation_stream(n: int, restrict_k: Optional[int] = None) -> tuple[Relation, ...]:
    return tuple(enumerate_relations(n, restrict_k=restrict_k))


@lru_cache(maxsize=None)
def initial_pairs(
    n: int, restrict_k: Optional[int] = None
) -> tuple[tuple[Relation, Relation], ...]:
    return tuple((rel, initial_form(rel)) for rel in relation_stream(n, restrict_k))


def degenerates_to_monomial(
    rel: Relation, ctx: SchubertContext
) -> Optional[MonomialWitness]:
    """The witness if rel's initial form becomes one monomial on X_v."""
    surviving = restrict(initial_form(rel), ctx)
    if len(surviving.terms) != 1:
        return None
    return MonomialWitness(
        k=rel.k, j_seq=rel.j_seq, l_seq=rel.l_seq, term=surviving.terms[0]
    )


def iter_witnesses(
    ctx: SchubertContext, *, restrict_k: Optional[int] = None
) -> Iterator[MonomialWitness]:
    for rel, init in initial_pairs(ctx.n, restrict_k):
        surviving = [
            t for t in init.terms if not ctx.vanishes(t.a) and not ctx.vanishes(t.b)
        ]
        if len(surviving) == 1:
            yield MonomialWitness(
                k=rel.k, j_seq=rel.j_seq, l_seq=rel.l_seq, term=surviving[0]
            )


def scan(
    ctx: SchubertContext, *, restrict_k: Optional[int] = None
) -> list[MonomialWitness]:
    """All monomial witnesses for ctx, in enumeration order."""
    return list(iter_witnesses(ctx, restrict_k=restrict_k))


@lru_cache(maxsize=None)
def _mono_status(v: Perm, restrict_k: Optional[int]) -> bool:
    return next(iter_witnesses(SchubertContext(v), restrict_k=restrict_k), None) is not None


def has_monomial(ctx: SchubertContext, *, restrict_k: Optional[int] = None) -> bool:
    return _mono_status(ctx.v, restrict_k)


def ideal_unchanged_under_init(ctx: SchubertContext) -> bool:
    """
    True iff every term dropped by an initial form has a factor that
    vanishes on X_v, so the restricted ideal equals its initial ideal.
    """
    for rel, init in initial_pairs(ctx.n):
        if init is rel:
            continue
        kept = set(init.terms)
        for t in rel.terms:
            if t in kept:
                continue
            if not ctx.vanishes(t.a) and not ctx.vanishes(t.b):
                return False
    return True


def rank_reduce(v: Perm, window: tuple[int, int]) -> Perm:
    """
    Shift a permutation supported on generators [m..M] down to rank
    M - m + 2; the monomial scan is invariant under this shift.
    """
    m, M = window
    n = len(v)
    if not 1 <= m <= M <= n - 1:
        raise ValueError(f"window {window} is not a generator range of S_{n}")
    for pos in range(1, n + 1):
        inside = m <= pos <= M + 1
        if not inside and v[pos - 1] != pos:
            raise ValueError(f"{v} moves position {pos} outside window {window}")
    return tuple(v[m - 1 + t] - (m - 1) for t in range(M - m + 2))


def _sweep_row(args: tuple[int, Perm, Optional[int]]) -> SweepRow:
    from . import criteria

    n, v, restrict_k = args
    ctx = SchubertContext(v)
    mono = has_monomial(ctx, restrict_k=restrict_k)
    if v == identity(n):
        flags = (False,) * 7
    else:
        flags = tuple(
            criteria.criterion(i, v) is not None for i in range(1, 8)
        )
    thm41 = criteria.thm41(v) is not None
    guarantee = criteria.monofree_guarantee(v)
    if (any(flags) or thm41) and not mono:
        raise AssertionError(f"criterion hit without monomial for {v}")
    if guarantee is not None and mono:
        raise AssertionError(f"guarantee {guarantee} on monomial element {v}")
    return SweepRow(
        v=v,
        one_line=format_perm(v),
        word=format_word(reduced_word(v)),
        mono=mono,
        flags=flags,  # type: ignore[arg-type]
        thm41=thm41,
        guarantee=guarantee,
    )


def sweep(
    n: int,
    *,
    restrict_k: Optional[int] = None,
    jobs: int = 1,
    budget_seconds: Optional[float] = None,
) -> list[SweepRow]:
    """
    One row per element of S_n in lexicographic one-line order.

    Ranks up to 5 run unconditionally; rank 6 needs an explicit
    wall-clock budget, larger ranks are refused.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    if n > 6:
        raise ResourceLimitError(f"sweep over S_{n} is out of budget (max rank 6)")
    if n == 6 and budget_seconds is None:
        raise ResourceLimitError("sweep over S_6 requires an explicit time budget")
    deadline = time.monotonic() + budget_seconds if budget_seconds else None
    tasks = [(n, v, restrict_k) for v in all_perms(n)]
    rows: list[SweepRow] = []
    if jobs <= 1:
        for task in tasks:
            rows.append(_sweep_row(task))
            if deadline is not None and time.monotonic() > deadline:
                raise ResourceLimitError(f"sweep over S_{n} exceeded its time budget")
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for row in pool.map(_sweep_row, tasks, chunksize=max(1, len(tasks) // (4 * jobs))):
                rows.append(row)
                if deadline is not None and time.monotonic() > deadline:
                    raise ResourceLimitError(f"sweep over S_{n} exceeded its time budget")
    return rows


def mono_count(rows: list[SweepRow]) -> int:
    return sum(1 for row in rows if row.mono)


def flag_totals(rows: list[SweepRow]) -> tuple[int, ...]:
    return tuple(sum(1 for row in rows if row.flags[i]) for i in range(7))
