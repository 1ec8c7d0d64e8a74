from math import comb

import numpy as np
import pytest

from weightspectra.bounds import delsarte_size, projective_upper
from weightspectra.code import LinearCode, rank, weight_spectrum
from weightspectra.errors import Infeasible, PreconditionViolated, ResourceLimit
from weightspectra.field import make_field
from weightspectra.nonlinear import distance_spectrum, n0_upper
from weightspectra.search import (
    TABLE1,
    TABLE2,
    equality_patterns,
    exhaustive_L,
    exhaustive_linear,
    exhaustive_N,
    exhaustive_unrestricted,
    gaussian_binomial,
    monotonicity_audit,
    random_code,
    random_linear_search,
    smallest_N0,
    smallest_n0_linear,
    table_rows,
)

from oracles import brute_L, brute_N


def _subspaces_bruteforce(n, k, q):
    from itertools import product

    F = make_field(q)
    from oracles import span_size

    spaces = set()
    for entries in product(range(q), repeat=n * k):
        rows = [list(entries[i * n:(i + 1) * n]) for i in range(k)]
        if span_size(F, rows) == q**k:
            words = set()
            for u in product(range(q), repeat=k):
                w = [0] * n
                for a, r in zip(u, rows):
                    w = [F.add(x, F.mul(a, y)) for x, y in zip(w, r)]
                words.add(tuple(w))
            spaces.add(frozenset(words))
    return len(spaces)


@pytest.mark.parametrize("n,k,q", [(3, 2, 2), (4, 2, 2), (3, 1, 3), (3, 2, 3)])
def test_gaussian_binomial_counts_subspaces(n, k, q):
    assert gaussian_binomial(n, k, q) == _subspaces_bruteforce(n, k, q)


@pytest.mark.parametrize(
    "n,k,q",
    [(2, 2, 2), (3, 2, 2), (4, 2, 2), (5, 2, 2), (3, 3, 2), (4, 3, 2), (3, 2, 3), (4, 2, 3), (2, 2, 4), (3, 2, 4), (2, 1, 5)],
)
def test_exhaustive_L_matches_bruteforce(n, k, q):
    assert exhaustive_L(n, k, q) == brute_L(make_field(q), n, k)


def test_exhaustive_L_examples_and_witness():
    assert exhaustive_L(3, 2, 2) == 3
    assert exhaustive_L(2, 2, 2) == 2
    assert exhaustive_L(4, 2, 2) == 3
    best, witness = exhaustive_linear(6, 3, 3)
    assert rank(witness) == 3 and witness.length == 6
    assert len(weight_spectrum(witness)) == best


def test_exhaustive_L_budget():
    with pytest.raises(ResourceLimit):
        exhaustive_L(8, 4, 3, budget=1000)
    with pytest.raises(PreconditionViolated):
        exhaustive_L(2, 3, 2)


def test_smallest_n0_linear():
    assert smallest_n0_linear(2, 2, 3) == 3
    assert smallest_n0_linear(1, 5, 1) == 1
    n0 = smallest_n0_linear(2, 3, 4)
    assert 4 <= n0 <= 10
    # for k = 2 the q+1 projective points see disjoint sets of nonzero columns,
    # so q+1 distinct weights need column counts 0, 1, ..., q: n0 = q(q+1)/2
    assert n0 == 3 * 4 // 2
    with pytest.raises(Infeasible):
        smallest_n0_linear(2, 2, 4)


def test_equality_patterns_count():
    # Stirling sums: partitions of M items into at most q blocks
    assert len(equality_patterns(4, 2)) == 8
    assert len(equality_patterns(4, 3)) == 14
    assert len(equality_patterns(4, 4)) == 15
    assert len(equality_patterns(3, 5)) == 5


@pytest.mark.parametrize(
    "n,M,q", [(1, 2, 2), (2, 3, 2), (3, 3, 2), (4, 4, 2), (5, 4, 2), (2, 3, 3), (3, 3, 3), (3, 4, 3), (2, 4, 4)]
)
def test_exhaustive_N_matches_bruteforce(n, M, q):
    assert exhaustive_N(n, M, q) == brute_N(n, M, q)


def test_exhaustive_N_examples_and_witness():
    assert exhaustive_N(3, 3, 2) == 3
    assert exhaustive_N(1, 2, 2) == 1
    assert exhaustive_N(2, 3, 2) == 2
    best, code = exhaustive_unrestricted(6, 4, 2)
    assert best == 6 and code.length == 6
    assert len(distance_spectrum(code)) == 6
    with pytest.raises(Infeasible):
        exhaustive_N(1, 3, 2)


@pytest.mark.parametrize("M,q", [(2, 2), (3, 2), (4, 2), (4, 3), (5, 2)])
def test_smallest_N0_brackets(M, q):
    n0 = smallest_N0(M, q)
    assert comb(M, 2) <= n0 <= n0_upper(M, q)


def test_smallest_N0_examples():
    assert smallest_N0(2, 2) == 1
    assert smallest_N0(3, 2) == 3
    assert smallest_N0(4, 2) == 6


def test_monotonicity_audit():
    report = monotonicity_audit()
    assert report.ok, report.failures()
    t = report.table
    assert [t[(n, 2, 2)] for n in range(2, 7)] == [2, 3, 3, 3, 3]
    assert t[(4, 2, 2)] <= t[(5, 2, 2)]
    assert t[(2, 2, 2)] <= t[(2, 2, 4)]
    for (n, k, q), v in t.items():
        assert q**k <= delsarte_size(n, v, q)


def test_random_search_small_cases():
    rep = random_linear_search(63, 3, 2, trials=1000, seed=3)
    assert rep.best_count == 7
    rep = random_linear_search(3, 3, 2, trials=20, seed=1)
    assert rep.best_count <= 3
    assert sum(rep.counts.values()) == 20


def test_random_search_is_reproducible():
    a = random_linear_search(200, 3, 4, trials=10, seed=11)
    b = random_linear_search(200, 3, 4, trials=10, seed=11)
    assert a.to_json() == b.to_json()


def test_random_search_witness_is_valid():
    rep = random_linear_search(300, 2, 5, trials=15, seed=2)
    code = LinearCode.from_dict(rep.best_witness)
    assert code.length == 300 and rank(code) == 2
    assert len(weight_spectrum(code)) == rep.best_count
    assert rep.best_count <= min(300, projective_upper(2, 5))


def test_random_code_full_rank():
    rng = np.random.default_rng(0)
    for _ in range(30):
        code = random_code(3, 3, 2, rng)
        assert rank(code) == 3


def test_random_search_budget():
    with pytest.raises(ResourceLimit):
        random_linear_search(100, 6, 9, trials=1, budget=1000)


def test_table_presets():
    assert TABLE2[0] == (3, 3, 13) and TABLE1[0] == (3, 3, 11)
    rows = table_rows("table1", n=2000, trials=3, seed=0, budget=1000)
    ran = [r for r in rows if r["status"] == "ran"]
    assert ran and all(r["best_count"] <= r["upper"] for r in ran)
    assert any(r["status"] == "skipped" for r in rows)
