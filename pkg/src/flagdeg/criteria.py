"""
Fast sufficient conditions for a degenerate Plucker relation to become a
monomial on a Schubert variety, and guarantees that none ever does.

The seven numbered criteria transcribe the reducibility conditions
literally, quantifier order included; each returned witness carries the
instantiating indices, and ``witness_relation`` rebuilds the explicit
exchange relation that certifies the monomial, so tests can replay every
hit against the scan.

Guarantees go the other way: elements below the Coxeter element
``c = [n,1,...,n-1]``, products of c with pairwise commuting simple
reflections, commuting factorizations, and rank reduction each force a
monomial-free scan.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import schubert
from .pluecker import Relation, generate_relation
from .symgroup import (
    Perm,
    bruhat_leq,
    chain_perm,
    compose,
    coxeter_c,
    format_perm,
    identity,
    inverse,
    leq_c,
    min_coset_rep,
    simple,
    support,
)

GUARANTEE_TAGS = (
    "LeqC",
    "CoxeterTimesSimple",
    "CoxeterTimesCommuting",
    "DistinctLettersLeqC",
    "CommutingFactorization",
    "RankReduction",
)


@dataclass(frozen=True)
class CriterionWitness:
    criterion: int
    params: dict[str, int]

    def __iter__(self):
        return iter(self.params.values())


def _check_not_identity(w: Perm) -> None:
    if all(w[i] == i + 1 for i in range(len(w))):
        raise ValueError("criteria exclude the identity permutation")


def _prefix(w: Perm, i: int) -> set[int]:
    """w([i]) as a set; w([0]) is empty."""
    return set(w[:i])


def crit1(w: Perm) -> Optional[CriterionWitness]:
    _check_not_identity(w)
    n = len(w)
    for i in range(1, n):
        if w[i - 1] >= w[i]:
            continue
        blocked = _prefix(w, i - 1) | {w[i]}
        if i > w[i - 1] or i in blocked:
            continue
        for j in range(1, n + 1):
            if j != i and j <= w[i - 1] and j not in blocked:
                return CriterionWitness(1, {"i": i, "j": j})
    return None


def crit2(w: Perm) -> Optional[CriterionWitness]:
    _check_not_identity(w)
    n = len(w)
    for i in range(3, n):
        if w[i - 1] >= w[i]:
            continue
        blocked = _prefix(w, i - 1) | {w[i]}
        if i - 1 not in blocked or w[i] > i - 1:
            continue
        for l in range(1, n + 1):
            if l > w[i - 1] or l in blocked:
                continue
            for x in range(1, n + 1):
                if x != i - 1 and w[i] <= x and x in blocked:
                    return CriterionWitness(2, {"i": i, "l": l, "x": x})
    return None


def crit3(w: Perm) -> Optional[CriterionWitness]:
    _check_not_identity(w)
    n = len(w)
    winv = inverse(w)
    for j in range(2, n):
        if winv[j - 1] >= winv[j]:
            continue
        for i in range(1, j):
            pref = _prefix(w, i)
            if j in pref and i not in pref and j + 1 <= w[i]:
                return CriterionWitness(3, {"j": j, "i": i})
    return None


def crit4(w: Perm) -> Optional[CriterionWitness]:
    _check_not_identity(w)
    n = len(w)
    winv = inverse(w)
    for i in range(1, n - 1):
        if winv[i - 1] <= winv[i]:
            continue
        pref = _prefix(w, i + 1)
        if i in pref or i + 1 not in pref:
            continue
        for j in range(i + 2, n + 1):
            if j not in pref and j <= w[i + 1]:
                return CriterionWitness(4, {"i": i, "j": j})
    return None


def crit5(w: Perm) -> Optional[CriterionWitness]:
    _check_not_identity(w)
    n = len(w)
    for i in range(2, n):
        if i in _prefix(w, i + 1) or i <= w[i]:
            continue
        pref = _prefix(w, i)
        for l in range(i + 1, n + 1):
            if l in pref and l > w[i]:
                return CriterionWitness(5, {"i": i, "l": l})
    return None


def _first_moved(w: Perm) -> int:
    return next(i for i in range(1, len(w) + 1) if w[i - 1] != i)


def crit6(w: Perm) -> Optional[CriterionWitness]:
    _check_not_identity(w)
    n = len(w)
    i = _first_moved(w)
    if w[i - 1] >= n:
        return None
    j = next((j for j in range(i + 1, n) if w[j - 1] > w[i - 1]), None)
    if j is None:
        return None
    if w[i - 1] > j - 1:
        return CriterionWitness(6, {"i": i, "j": j})
    return None


def crit7(w: Perm) -> Optional[CriterionWitness]:
    _check_not_identity(w)
    n = len(w)
    i = _first_moved(w)
    if w[i - 1] != n:
        return None
    j = next((j for j in range(i + 2, n) if w[j - 1] > w[i]), None)
    if j is None:
        return None
    if i not in set(w[i : j - 1]):
        return CriterionWitness(7, {"i": i, "j": j})
    return None


_CRITERIA = {1: crit1, 2: crit2, 3: crit3, 4: crit4, 5: crit5, 6: crit6, 7: crit7}


def criterion(index: int, w: Perm) -> Optional[CriterionWitness]:
    return _CRITERIA[index](w)


def witness_relation(witness: CriterionWitness, w: Perm) -> Relation:
    """
    The explicit rank-1 exchange relation whose restricted initial form is
    the monomial promised by the criterion.
    """
    n = len(w)
    p = witness.params
    if witness.criterion == 1:
        i, j = p["i"], p["j"]
        head = _prefix(w, i - 1)
        j_seq = (j, *sorted(head))
        l_set = head | {i, w[i]}
    elif witness.criterion == 2:
        i, l, x = p["i"], p["l"], p["x"]
        base = _prefix(w, i - 1) | {w[i]}
        j_seq = (x, *sorted(base - {i - 1, x}))
        l_set = (base | {l}) - {x}
    elif witness.criterion == 3:
        j, i = p["j"], p["i"]
        pref = _prefix(w, i)
        j_seq = (j, *sorted(pref - {j}))
        l_set = (pref | {i, j + 1}) - {j}
    elif witness.criterion == 4:
        i, j = p["i"], p["j"]
        pref = _prefix(w, i + 1)
        j_seq = (i, *sorted(pref - {i + 1}))
        l_set = pref | {j}
    elif witness.criterion == 5:
        i, l = p["i"], p["l"]
        j_seq = (l, *sorted(_prefix(w, i) - {l}))
        l_set = (_prefix(w, i + 1) - {l}) | {i}
    elif witness.criterion == 6:
        i, j = p["i"], p["j"]
        j_seq = (w[i - 1], *range(1, i))
        l_set = set(range(1, j)) | {w[j - 1]}
    elif witness.criterion == 7:
        i, j = p["i"], p["j"]
        j_seq = (i, *sorted((set(range(1, i)) | {n})))
        l_set = set(range(1, i)) | set(range(i + 1, j)) | {w[j - 1], n}
    else:
        raise ValueError(f"unknown criterion {witness.criterion}")
    return generate_relation(n, j_seq, tuple(sorted(l_set)), 1)


def thm41_witnesses(v: Perm) -> list[tuple[int, int]]:
    """All (j, k) such that the rank-1/rank-2 interval conditions hold."""
    n = len(v)
    vbar = min_coset_rep(v, range(2, n))
    vbarbar = min_coset_rep(v, set(range(1, n)) - {2})
    out = []
    for j in range(2, n + 1):
        for k in range(j + 1, n + 1):
            if (
                bruhat_leq(chain_perm(n, j - 1, 1), vbar)
                and bruhat_leq(vbar, chain_perm(n, k - 2, 1))
                and bruhat_leq(chain_perm(n, k - 1, 2), vbarbar)
            ):
                out.append((j, k))
    return out


def thm41(v: Perm) -> Optional[tuple[int, int]]:
    """
    First (j, k), 1 < j < k <= n, whose interval conditions certify that
    the monomial p_j * p_{1,k} lies in the restricted initial ideal.
    """
    n = len(v)
    vbar = min_coset_rep(v, range(2, n))
    vbarbar = min_coset_rep(v, set(range(1, n)) - {2})
    for j in range(2, n + 1):
        lower_ok = bruhat_leq(chain_perm(n, j - 1, 1), vbar)
        if not lower_ok:
            continue
        for k in range(j + 1, n + 1):
            if (
                bruhat_leq(vbar, chain_perm(n, k - 2, 1))
                and bruhat_leq(chain_perm(n, k - 1, 2), vbarbar)
            ):
                return (j, k)
    return None


def _commuting_swap_letters(u: Perm) -> Optional[tuple[int, ...]]:
    """Letters k for u = product of disjoint swaps (k, k+1); None otherwise."""
    letters = []
    pos = 1
    n = len(u)
    while pos <= n:
        if u[pos - 1] == pos:
            pos += 1
        elif pos < n and u[pos - 1] == pos + 1 and u[pos] == pos:
            letters.append(pos)
            pos += 2
        else:
            return None
    return tuple(letters)


def _support_components(w: Perm) -> list[tuple[int, int]]:
    """Maximal runs (min, max) of consecutive generators in the support."""
    supp = support(w)
    runs: list[tuple[int, int]] = []
    for s in supp:
        if runs and s == runs[-1][1] + 1:
            runs[-1] = (runs[-1][0], s)
        else:
            runs.append((s, s))
    return runs


def _component_factor(w: Perm, run: tuple[int, int]) -> Perm:
    a, b = run
    images = list(identity(len(w)))
    images[a - 1 : b + 1] = w[a - 1 : b + 1]
    return tuple(images)


def monofree_guarantee(w: Perm) -> Optional[str]:
    """
    A tag naming why no relation can degenerate to a monomial on X_w, or
    None when no hypothesis applies.  Tags are tried in a fixed order and
    factorization/rank-reduction recurse into the reduced pieces.
    """
    n = len(w)
    if leq_c(w):
        return "LeqC"
    if n >= 2:
        u = compose(inverse(coxeter_c(n)), w)
        letters = _commuting_swap_letters(u)
        if letters:
            return "CoxeterTimesSimple" if len(letters) == 1 else "CoxeterTimesCommuting"
    runs = _support_components(w)
    if len(runs) >= 2 and all(
        monofree_guarantee(_component_factor(w, run)) is not None for run in runs
    ):
        return "CommutingFactorization"
    if runs:
        m, M = runs[0][0], runs[-1][1]
        if M - m + 2 < n and monofree_guarantee(schubert.rank_reduce(w, (m, M))) is not None:
            return "RankReduction"
    return None


def pure_difference_check(n: int, h: int) -> bool:
    """
    True iff on X_{c s_h} every restricted initial relation is zero or a
    difference of two monomials with coefficients +1 and -1.
    """
    if not 1 <= h <= n - 1:
        raise ValueError(f"s_{h} is not a generator of S_{n}")
    ctx = schubert.SchubertContext(compose(coxeter_c(n), simple(n, h)))
    for _, init in schubert.initial_pairs(n):
        kept = [
            t for t in init.terms if not ctx.vanishes(t.a) and not ctx.vanishes(t.b)
        ]
        if not kept:
            continue
        if len(kept) != 2 or sorted(t.coeff for t in kept) != [-1, 1]:
            return False
    return True


@dataclass(frozen=True)
class DivisorVerdict:
    i: int
    reducible: bool
    case: Optional[int]
    criterion: Optional[int]


def divisor_classification(n: int) -> list[DivisorVerdict]:
    """
    Verdict per Schubert divisor w0*s_i: all reducible for even n, all but
    the middle one for odd n.  Reducible verdicts carry the constructive
    case, pointing at the criterion whose witness certifies them.
    """
    if n <= 2:
        raise ValueError("divisor classification needs rank at least 3")
    out = []
    for i in range(1, n):
        if 2 * i < n:
            out.append(DivisorVerdict(i, True, 1, 1))
        elif 2 * i == n:
            out.append(DivisorVerdict(i, True, 2, 1))
        elif 2 * i == n + 1:
            out.append(DivisorVerdict(i, False, None, None))
        elif 2 * i == n + 2:
            out.append(DivisorVerdict(i, True, 4, 2))
        else:
            out.append(DivisorVerdict(i, True, 3, 2))
    return out


def criteria_report(w: Perm, *, restrict_k: Optional[int] = None) -> dict:
    """JSON-ready per-permutation report used by the check command."""
    n = len(w)
    ctx = schubert.SchubertContext(w)
    witnesses = schubert.scan(ctx, restrict_k=restrict_k)
    is_identity = w == identity(n)
    flags = {
        str(i): (False if is_identity else criterion(i, w) is not None)
        for i in range(1, 8)
    }
    flags["thm41"] = thm41(w) is not None
    return {
        "perm": format_perm(w),
        "mono": bool(witnesses),
        "flags": flags,
        "guarantee": monofree_guarantee(w),
        "witnesses": [wit.to_json() for wit in witnesses],
    }
