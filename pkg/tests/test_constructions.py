import random

import pytest

from weightspectra.bounds import best_lower, doubling_lower_formula, projective_upper
from weightspectra.code import LinearCode, rank, weight_of_message, weight_spectrum
from weightspectra.constructions import (
    ambient_code,
    binary_full_spectrum,
    doubling_step,
    iterated_doubling,
    iterated_doubling_count,
    repetition_code,
    two_dim_full,
    two_dim_shortest_length,
)
from weightspectra.errors import OutOfRange, PreconditionViolated, RankDeficient
from weightspectra.field import is_prime_power, make_field

from oracles import expanded_weights


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_binary_full_spectrum_small(k):
    code = binary_full_spectrum(k)
    assert (code.length, code.dimension) == (2**k - 1, k)
    assert weight_spectrum(code).weights == tuple(range(1, 2**k))
    assert expanded_weights(code.field, code.generator_matrix()) == set(range(1, 2**k))


def test_binary_full_spectrum_layout():
    # row j (1 = top) has 2^(k-j+1) - 1 leading ones
    G = binary_full_spectrum(4).generator_matrix()
    G = [sorted(r, reverse=True) for r in G]
    for j, row in enumerate(G, start=1):
        assert sum(row) == 2 ** (4 - j + 1) - 1


def test_binary_full_spectrum_is_a_bijection():
    from itertools import product

    k = 6
    code = binary_full_spectrum(k)
    ws = [weight_of_message(code, u) for u in product((0, 1), repeat=k) if any(u)]
    assert sorted(ws) == list(range(1, 2**k))


def test_binary_full_spectrum_rejects():
    with pytest.raises(OutOfRange):
        binary_full_spectrum(0)


def test_binary_full_spectrum_k20_is_small():
    code = binary_full_spectrum(20)
    assert len(code.columns) == 20 and code.length == 2**20 - 1


@pytest.mark.parametrize("q,length,weights", [(2, 6, (3, 4, 5)), (3, 10, (6, 7, 8, 9))])
def test_two_dim_full_examples(q, length, weights):
    code = two_dim_full(q)
    assert code.length == length
    assert weight_spectrum(code).weights == weights


def test_two_dim_full_formula_matches_expansion():
    from math import comb

    for q in (4, 5, 7):
        for a, b in [(q, q + 1), (q + 2, q + 7)]:
            code = two_dim_full(q, a, b)
            c = comb(q, 2)
            expected = {a + c, b + c} | {a + b + c - i for i in range(1, q)}
            assert weight_spectrum(code).as_set() == expected
            assert expanded_weights(code.field, code.generator_matrix()) == expected


def test_two_dim_full_preconditions():
    with pytest.raises(PreconditionViolated):
        two_dim_full(3, a=2)
    with pytest.raises(PreconditionViolated):
        two_dim_full(3, a=4, b=4)


@pytest.mark.parametrize("q", [q for q in range(2, 65) if is_prime_power(q)])
def test_two_dim_saturates(q):
    code = two_dim_full(q)
    assert len(weight_spectrum(code)) == q + 1 == projective_upper(2, q)
    assert code.length == two_dim_shortest_length(q)


def test_doubling_examples():
    assert weight_spectrum(doubling_step(binary_full_spectrum(2), 4)).weights == tuple(range(1, 8))
    d = doubling_step(two_dim_full(3), 10)
    assert weight_spectrum(d).weights == (6, 7, 8, 9, 10, 16, 17, 18, 19)
    assert d.dimension == 3 and d.length == 20
    with pytest.raises(PreconditionViolated):
        doubling_step(repetition_code(5, 2), 5)


def test_doubling_rejects_rank_deficient():
    F = make_field(3)
    code = LinearCode.from_columns(F, 2, [((1, 1), 1), ((2, 2), 1)])
    with pytest.raises(RankDeficient):
        doubling_step(code)


def test_doubling_law_random():
    rng = random.Random(5)
    done = 0
    while done < 40:
        q = rng.choice([2, 3, 4, 5])
        k = rng.randint(1, 3)
        n = rng.randint(k, 25)
        F = make_field(q)
        code = LinearCode.from_generator(F, [[rng.randrange(q) for _ in range(n)] for _ in range(k)])
        if rank(code) < k:
            continue
        old = weight_spectrum(code)
        new = doubling_step(code)
        t = old.max + 1
        assert new.dimension == k + 1
        assert weight_spectrum(new).as_set() == old.as_set() | {t} | {t + w for w in old}
        done += 1


@pytest.mark.parametrize("k,q,count", [(2, 3, 4), (3, 3, 9), (4, 5, 27)])
def test_iterated_doubling_examples(k, q, count):
    code = iterated_doubling(k, q)
    assert code.dimension == k
    assert len(weight_spectrum(code)) == count == iterated_doubling_count(k, q)
    if k >= 3:
        assert count >= doubling_lower_formula(k, q)


def test_iterated_doubling_rejects():
    with pytest.raises(OutOfRange):
        iterated_doubling(1, 3)


@pytest.mark.parametrize("k,q,expected", [(1, 2, (1,)), (4, 3, (1, 2, 3, 4)), (3, 9, (1, 2, 3))])
def test_ambient_code(k, q, expected):
    code = ambient_code(k, q)
    assert code.length == k
    assert weight_spectrum(code).weights == expected


def test_constructed_lower_values_monotone():
    for q in (2, 3, 4, 5):
        counts = [len(weight_spectrum(iterated_doubling(k, q))) for k in range(2, 8)]
        assert counts == sorted(counts)
        assert counts[0] >= best_lower(1, q)
    for q, qm in [(2, 4), (2, 8), (3, 9), (2, 16), (4, 16)]:
        assert len(weight_spectrum(two_dim_full(qm))) >= len(weight_spectrum(two_dim_full(q)))
