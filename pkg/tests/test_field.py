import random

import numpy as np
import pytest

from weightspectra.errors import NotAPrimePower
from weightspectra.field import (
    FieldElement,
    factorize,
    is_prime_power,
    make_field,
    pp,
    pp_table,
    prime_power_mask,
    primitive_element,
)

PRIME_POWERS_4096 = [q for q in range(2, 4097) if is_prime_power(q)]


def test_make_field_prime():
    F = make_field(2)
    assert (F.characteristic, F.degree, F.order) == (2, 1, 2)


def test_make_field_nine_modulus_has_no_root():
    F = make_field(9)
    assert (F.characteristic, F.degree) == (3, 2)
    c0, c1, c2 = F.modulus
    assert c2 == 1
    assert all((x * x + c1 * x + c0) % 3 != 0 for x in range(3))


@pytest.mark.parametrize("q", [1, 6, 12, 100])
def test_make_field_rejects_non_prime_powers(q):
    with pytest.raises(NotAPrimePower):
        make_field(q)


def test_small_examples():
    F3 = make_field(3)
    assert F3.add(2, 2) == 1
    F4 = make_field(4)
    assert F4.modulus == (1, 1, 1)
    X = F4.element((0, 1))
    assert (X * X).coeffs == (1, 1)
    for q in (2, 3, 4, 8, 9, 25):
        assert make_field(q).inv(1) == 1


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        make_field(9).inv(0)


@pytest.mark.parametrize("q,expected", [(3, 2), (5, 2), (7, 3)])
def test_primitive_element_examples(q, expected):
    assert primitive_element(make_field(q)) == expected


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 16, 25, 27, 49, 64, 81, 121, 125, 243, 256, 4096])
def test_primitive_element_has_full_order(q):
    F = make_field(q)
    g = F.primitive_element
    assert F.pow(g, q - 1) == 1
    for r in factorize(q - 1) if q > 2 else []:
        assert F.pow(g, (q - 1) // r) != 1


def test_field_axioms_all_small_prime_powers():
    rng = random.Random(1)
    for q in PRIME_POWERS_4096:
        F = make_field(q)
        for _ in range(1000):
            a, b, c = rng.randrange(q), rng.randrange(q), rng.randrange(q)
            assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
            assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        nz = rng.randrange(1, q)
        assert F.mul(nz, F.inv(nz)) == 1
        assert F.add(nz, F.neg(nz)) == 0


@pytest.mark.parametrize("q", [4, 8, 9, 16, 27, 32, 49, 64, 243])
def test_three_multiplication_routes_agree(q):
    # log tables, polynomial reduction and the GF(p)-linear matrices
    F = make_field(q)
    rng = random.Random(q)
    a = [rng.randrange(q) for _ in range(200)]
    b = [rng.randrange(q) for _ in range(200)]
    mats = F.mul_matrices(np.array(a))
    for i, (x, y) in enumerate(zip(a, b)):
        via_matrix = F.from_coeffs(list(mats[i] @ np.array(F.coeffs(y)) % F.p))
        assert F.mul(x, y) == F._poly_mul_elems(x, y) == via_matrix


def test_large_field_without_tables():
    F = make_field(2**17)
    rng = random.Random(0)
    for _ in range(20):
        a = rng.randrange(1, F.order)
        assert F.mul(a, F.inv(a)) == 1


def test_field_element_wrapper():
    F = make_field(5)
    a, b = F.element(3), F.element(4)
    assert (a + b).value == 2
    assert (a - b).value == 4
    assert (a * b).value == 2
    assert (a / b * b) == a
    assert (a**4).value == 1
    assert isinstance(-a, FieldElement)


@pytest.mark.parametrize("t,expected", [(6, 7), (8, 8), (1, 2), (2, 2), (14, 16), (24, 25), (33, 37)])
def test_pp_examples(t, expected):
    assert pp(t) == expected


def test_pp_table_matches_scalar():
    table = pp_table(3000)
    assert all(int(table[t]) == pp(t) for t in range(1, 3001))


def test_prime_power_mask():
    mask = prime_power_mask(200)
    assert [n for n in range(201) if mask[n]] == [n for n in range(201) if is_prime_power(n)]
