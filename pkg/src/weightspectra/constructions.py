"""Explicit linear codes with many distinct weights."""

from __future__ import annotations

from math import comb

from .code import LinearCode, rank, weight_spectrum
from .errors import OutOfRange, PreconditionViolated, RankDeficient
from .field import make_field

MAX_BINARY_K = 20


def binary_full_spectrum(k: int) -> LinearCode:
    """[2^k - 1, k]_2 code whose nonzero weights are exactly 1, 2, ..., 2^k - 1.

    Block j (j = 1..k) has 2^(j-1) identical columns with ones in the top
    k - j + 1 rows. The weight of uG is sum_j 2^(j-1) * (u_1 + ... + u_{k-j+1} mod 2),
    and u -> (prefix parities) is a bijection on nonzero messages.
    """
    if k < 1:
        raise OutOfRange("k must be >= 1")
    if k > MAX_BINARY_K:
        raise OutOfRange(f"k must be <= {MAX_BINARY_K}")
    F = make_field(2)
    pairs = []
    for j in range(1, k + 1):
        top = k - j + 1
        pairs.append(((1,) * top + (0,) * (k - top), 2 ** (j - 1)))
    return LinearCode.from_columns(F, k, pairs)


def two_dim_full(q: int, a: int | None = None, b: int | None = None) -> LinearCode:
    """[a + b + C(q,2), 2]_q code with q + 1 distinct nonzero weights.

    Generators u, v overlap on C(q,2) coordinates where v is 1 and u takes
    the value w^i on exactly i + 1 coordinates (w primitive, i = 0..q-2);
    u has a further a private ones, v has b.
    """
    F = make_field(q)
    a = q if a is None else a
    b = q + 1 if b is None else b
    if a < q:
        raise PreconditionViolated(f"need a >= q, got a={a}, q={q}")
    if b <= a:
        raise PreconditionViolated(f"need b > a, got a={a}, b={b}")
    w = F.primitive_element
    pairs = [((1, 0), a), ((0, 1), b)]
    for i in range(q - 1):
        pairs.append(((F.pow(w, i), 1), i + 1))
    return LinearCode.from_columns(F, 2, pairs)


def two_dim_shortest_length(q: int) -> int:
    return comb(q, 2) + 2 * q + 1


def doubling_step(code: LinearCode, t: int | None = None, budget: int | None = None) -> LinearCode:
    """Add one dimension and |old| + 1 new weights.

    Old columns get a zero in the new coordinate; t copies of the new unit
    vector are appended. The weights become old | {t} | {t + w}.
    """
    if rank(code) < code.dimension:
        raise RankDeficient("doubling needs a code of full rank")
    kwargs = {} if budget is None else {"budget": budget}
    top = weight_spectrum(code, **kwargs).max
    if t is None:
        t = top + 1
    elif t <= top:
        raise PreconditionViolated(f"t={t} must exceed the largest weight {top}")
    k = code.dimension
    pairs = [(col + (0,), m) for col, m in zip(code.columns, code.multiplicities)]
    pairs.append(((0,) * k + (1,), t))
    return LinearCode.from_columns(code.field, k + 1, pairs)


def iterated_doubling(k: int, q: int) -> LinearCode:
    """Start from two_dim_full(q) and double k - 2 times with the smallest t."""
    if k < 2:
        raise OutOfRange("k must be >= 2")
    code = two_dim_full(q)
    for _ in range(k - 2):
        code = doubling_step(code)
    return code


def iterated_doubling_count(k: int, q: int) -> int:
    """Weight count produced by iterated_doubling: L -> 2L + 1 from q + 1."""
    if k < 2:
        raise OutOfRange("k must be >= 2")
    return 2 ** (k - 2) * (q + 2) - 1


def ambient_code(k: int, q: int) -> LinearCode:
    """The whole space GF(q)^k, length k; weights 1..k."""
    if k < 1:
        raise OutOfRange("k must be >= 1")
    F = make_field(q)
    return LinearCode.from_columns(F, k, ((tuple(int(i == j) for i in range(k)), 1) for j in range(k)))


def repetition_code(n: int, q: int) -> LinearCode:
    return LinearCode.from_columns(make_field(q), 1, [((1,), n)])
