import itertools

import pytest

from flagdeg import richardson as rc
from flagdeg import schubert as sb
from flagdeg import symgroup as sg


def test_embedded_flag_perm_values():
    assert rc.embedded_flag_perm(2) == (2, 1)
    assert rc.embedded_flag_perm(3) == (3, 1, 4, 2)
    assert rc.embedded_flag_perm(4) == (4, 1, 5, 2, 6, 3)
    with pytest.raises(ValueError):
        rc.embedded_flag_perm(1)


def test_opposite_base_perm_values():
    assert rc.opposite_base_perm(2) == (1, 2)
    assert rc.opposite_base_perm(3) == (1, 2, 4, 3)
    assert rc.opposite_base_perm(4) == (1, 2, 5, 3, 6, 4)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_base_below_embedded(n):
    assert sg.bruhat_leq(rc.opposite_base_perm(n), rc.embedded_flag_perm(n))


def _shifted_base_oracle(n: int, m: int) -> sg.Perm:
    # Case formula for the m-fold shift of the base point.
    images = []
    for i in range(1, 2 * n - 1):
        if i == 1:
            images.append(m + 1)
        elif i % 2 == 0:
            r = i // 2
            images.append(r if r <= m else r + 1)
        else:
            r = (i + 1) // 2
            images.append(n + r - 1)
    return tuple(images)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_shifted_base_matches_formula(n):
    base = rc.opposite_base_perm(n)
    for m in range(1, n):
        shifted = sg.compose(sg.chain_perm(2 * n - 2, m, 1), base)
        assert shifted == _shifted_base_oracle(n, m)
        assert sg.bruhat_leq(base, shifted)
        assert sg.bruhat_leq(shifted, rc.embedded_flag_perm(n))
        assert sg.length(shifted) == sg.length(base) + m


def test_fold_and_lift_are_inverse():
    for n in (3, 4, 5):
        for k in range(1, n):
            for j in range(1, n + 1):
                assert rc.project_index(rc.lift_index(j, k, n), k, n) == j
            for j in range(k, n + k):
                assert rc.lift_index(rc.project_index(j, k, n), k, n) == j
    with pytest.raises(ValueError):
        rc.project_index(1, 2, 4)
    with pytest.raises(ValueError):
        rc.lift_index(5, 2, 4)


def test_lift_seq():
    assert rc.lift_seq((2, 3), 4) == (1, 2, 3)
    assert rc.lift_seq((1, 3), 4) == (1, 5, 3)
    assert rc.lift_seq((2,), 4) == (2,)


def test_lift_recovers_sandwiched_sets():
    n = 4
    for k in range(1, n):
        prefix = set(range(1, k))
        for extra in itertools.combinations(range(k, n + k), k):
            K = tuple(sorted(prefix | set(extra)))
            folded = sorted(rc.project_index(j, k, n) for j in K if j >= k)
            lifted = rc.lift_seq(tuple(folded), n)
            assert tuple(sorted(lifted)) == K


def test_admissible_sets_antisymmetry():
    n = 3
    v = rc.embedded_flag_perm(n)
    for k in range(1, n):
        assert rc.admissible_sets(v, v, k, n) == [
            sg.apply_to_set(v, range(1, 2 * k))
        ]


def test_admissible_below_embedded_is_sandwich():
    n = 4
    v = rc.embedded_flag_perm(n)
    for k in range(1, n):
        top = sg.apply_to_set(v, range(1, 2 * k))
        below = {
            K
            for K in itertools.combinations(range(1, 2 * n - 1), 2 * k - 1)
            if sg.grassmann_leq(K, top)
        }
        sandwich = {
            K
            for K in itertools.combinations(range(1, 2 * n - 1), 2 * k - 1)
            if set(range(1, k)) <= set(K) <= set(range(1, n + k))
        }
        assert below == sandwich


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_chain_pair_verifies(n):
    for m in range(1, n):
        pair = rc.chain_pair(n, m)
        assert rc.verify_correspondence(pair)


def test_chain_pair_admissible_formula():
    n, m = 4, 2
    pair = rc.chain_pair(n, m)
    for k in range(1, n):
        expected = set()
        if k <= m:
            for i in range(k, m + 2):
                expected.add(
                    tuple(sorted(set(range(1, k)) | set(range(n + 1, n + k)) | {i}))
                )
        else:
            expected.add(tuple(sorted(set(range(1, k + 1)) | set(range(n + 1, n + k)))))
        assert set(rc.admissible_sets(pair.u, pair.v, k, n)) == expected


def test_chain_pair_top_is_coxeter():
    for n in (3, 4, 5):
        assert rc.chain_pair(n, n - 1).x == sg.coxeter_c(n)
    with pytest.raises(ValueError):
        rc.chain_pair(4, 0)
    with pytest.raises(ValueError):
        rc.chain_pair(4, 4)


@pytest.mark.parametrize("i", [2, 3])
def test_middle_divisor_pair_verifies(i):
    pair = rc.middle_divisor_pair(i)
    n = 2 * i - 1
    assert pair.x == sg.compose(sg.longest_element(n), sg.simple(n, i))
    assert pair.v == rc.embedded_flag_perm(n)
    assert pair.excluded == (tuple(range(i, n + 1)), tuple(range(1, n + 1)))
    assert rc.verify_correspondence(pair)


def test_middle_divisor_pair_rejects_small_index():
    with pytest.raises(ValueError):
        rc.middle_divisor_pair(1)


def test_middle_divisor_exclusions_are_the_only_ones():
    for i in (2, 3):
        pair = rc.middle_divisor_pair(i)
        n = 2 * i - 1
        ctx = sb.SchubertContext(pair.x)
        vanishing = [
            I
            for k in range(1, n)
            for I in itertools.combinations(range(1, n + 1), k)
            if ctx.vanishes(I)
        ]
        assert vanishing == [pair.excluded[0]]
        # On the Richardson side the one missing admissible set is [n].
        k = i
        sandwich = {
            K
            for K in itertools.combinations(range(1, 2 * n - 1), 2 * k - 1)
            if sg.grassmann_leq(K, sg.apply_to_set(pair.v, range(1, 2 * k)))
        }
        admissible = set(rc.admissible_sets(pair.u, pair.v, k, n))
        assert sandwich - admissible == {pair.excluded[1]}


def test_perturbed_pair_fails():
    pair = rc.chain_pair(3, 1)
    loose = rc.CorrespondencePair(x=pair.x, u=sg.identity(4), v=pair.v)
    assert not rc.verify_correspondence(loose)


def test_pair_validation_errors():
    pair = rc.chain_pair(3, 1)
    swapped = rc.CorrespondencePair(x=pair.x, u=pair.v, v=pair.u)
    with pytest.raises(ValueError):
        rc.verify_correspondence(swapped)
    not_minimal = rc.CorrespondencePair(x=pair.x, u=sg.simple(4, 2), v=pair.v)
    with pytest.raises(ValueError):
        rc.verify_correspondence(not_minimal)
    wrong_rank = rc.CorrespondencePair(x=pair.x, u=sg.identity(6), v=sg.identity(6))
    with pytest.raises(ValueError):
        rc.verify_correspondence(wrong_rank)


@pytest.mark.parametrize("n", [3, 5])
def test_middle_divisor_scan_is_empty(n):
    i = (n + 1) // 2
    w = sg.compose(sg.longest_element(n), sg.simple(n, i))
    assert sb.scan(sb.SchubertContext(w)) == []


def test_pair_report_shape():
    report = rc.pair_report(rc.chain_pair(3, 2))
    assert report["verified"] is True
    assert report["x"] == "3,1,2"
    assert set(report["tables"]) == {"1", "2"}
    for matches in report["tables"].values():
        for small, big in matches:
            assert isinstance(small, list) and isinstance(big, list)
    report = rc.pair_report(rc.middle_divisor_pair(2))
    assert report["excluded"] == [[2, 3], [1, 2, 3]]
