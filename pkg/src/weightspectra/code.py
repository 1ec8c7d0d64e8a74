"""Linear codes stored as column multisets, and their sets of nonzero weights.

A generator matrix ``G`` (k x n) is kept as the multiset of its columns. The
weight of ``uG`` only depends on which columns ``c`` satisfy ``u . c != 0``,
so the cost of a spectrum is independent of n; an [6_000_000, 3]_q code is a
multiset of at most q^3 entries.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionMismatch, PreconditionViolated, ResourceLimit
from .field import FieldSpec, make_field

DEFAULT_BUDGET = 2**24

# rough upper bound on the number of int64 cells touched per vectorised batch
_BATCH_CELLS = 1 << 22


def projective_count(q: int, k: int) -> int:
    return (q**k - 1) // (q - 1)


def projective_points(q: int, k: int, batch: int = 1 << 16) -> Iterator[np.ndarray]:
    """Yield the projective representatives of GF(q)^k in lexicographic order.

    Each representative has its first nonzero entry equal to 1. Output comes
    in arrays of shape (<= batch, k).
    """
    for lead in range(k):
        tail = k - lead - 1
        total = q**tail
        powers = q ** np.arange(tail - 1, -1, -1, dtype=np.int64)
        for start in range(0, total, batch):
            idx = np.arange(start, min(start + batch, total), dtype=np.int64)
            block = np.zeros((len(idx), k), dtype=np.int64)
            block[:, lead] = 1
            if tail:
                block[:, lead + 1 :] = (idx[:, None] // powers) % q
            yield block


@dataclass(frozen=True)
class WeightSpectrum:
    """Strictly increasing tuple of the distinct nonzero weights of a code."""

    weights: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __contains__(self, w) -> bool:
        return w in self.weights

    @property
    def max(self) -> int:
        return self.weights[-1] if self.weights else 0

    def as_set(self) -> set[int]:
        return set(self.weights)


@dataclass(frozen=True)
class LinearCode:
    field: FieldSpec
    dimension: int
    columns: tuple[tuple[int, ...], ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        k = self.dimension
        if k < 1:
            raise PreconditionViolated("dimension must be >= 1")
        if len(self.columns) != len(self.multiplicities):
            raise ValueError("columns and multiplicities differ in length")
        if len(set(self.columns)) != len(self.columns):
            raise ValueError("duplicate column values; use LinearCode.from_columns")
        for col in self.columns:
            if len(col) != k:
                raise DimensionMismatch(f"column {col} does not have {k} entries")
            for x in col:
                self.field.check(x)
        if any(m < 1 for m in self.multiplicities):
            raise ValueError("multiplicities must be positive")
        if self.length < 1:
            raise PreconditionViolated("length must be >= 1")

    @classmethod
    def from_columns(cls, field: FieldSpec, k: int, columns: Iterable[tuple[Sequence[int], int]]) -> LinearCode:
        """Build from ``(column, multiplicity)`` pairs, merging repeated columns."""
        counts: Counter = Counter()
        for col, mult in columns:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                counts[tuple(int(x) for x in col)] += int(mult)
        items = sorted(counts.items())
        return cls(field, k, tuple(c for c, _ in items), tuple(m for _, m in items))

    @classmethod
    def from_generator(cls, field: FieldSpec, rows: Sequence[Sequence[int]]) -> LinearCode:
        """Build from an explicit k x n generator matrix."""
        if not rows:
            raise PreconditionViolated("empty generator matrix")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("ragged generator matrix")
        return cls.from_columns(field, len(rows), ((col, 1) for col in zip(*rows)))

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def k(self) -> int:
        return self.dimension

    @property
    def length(self) -> int:
        return sum(self.multiplicities)

    n = length

    def generator_matrix(self) -> list[list[int]]:
        """Expanded k x n matrix; columns appear in multiset order."""
        cols = [c for c, m in zip(self.columns, self.multiplicities) for _ in range(m)]
        return [list(row) for row in zip(*cols)]

    @cached_property
    def _arrays(self) -> tuple[np.ndarray, np.ndarray]:
        cols = np.array(self.columns, dtype=np.int64).reshape(len(self.columns), self.dimension)
        return cols, np.array(self.multiplicities, dtype=np.int64)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "k": self.dimension,
            "columns": [[list(c), m] for c, m in zip(self.columns, self.multiplicities)],
        }

    @classmethod
    def from_dict(cls, data: dict) -> LinearCode:
        field = make_field(int(data["q"]))
        return cls.from_columns(field, int(data["k"]), ((c, m) for c, m in data["columns"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> LinearCode:
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# weights


def weight_of_message(code: LinearCode, u: Sequence[int]) -> int:
    """Hamming weight of the codeword ``uG``, computed with scalar field arithmetic."""
    if len(u) != code.dimension:
        raise DimensionMismatch(f"message has {len(u)} entries, code dimension is {code.dimension}")
    F = code.field
    u = [F.check(int(x)) for x in u]
    weight = 0
    for col, mult in zip(code.columns, code.multiplicities):
        acc = 0
        for a, c in zip(u, col):
            if a and c:
                acc = F.add(acc, F.mul(a, c))
        if acc:
            weight += mult
    return weight


def nonorthogonal(field: FieldSpec, messages: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Boolean (B, m) table of ``u . c != 0`` for message rows u and column rows c."""
    p, e = field.characteristic, field.degree
    B, k = messages.shape
    m = cols.shape[0]
    if e == 1:
        return (messages @ cols.T) % p != 0
    colvec = field.digits(cols).reshape(m, k * e)
    mats = field.mul_matrices(messages)  # (B, k, e, e)
    a = mats.transpose(0, 2, 1, 3).reshape(B, e, k * e)
    return (np.einsum("bjx,mx->bjm", a, colvec) % p).any(axis=1)


def message_weights(field: FieldSpec, cols: np.ndarray, mults: np.ndarray, messages: np.ndarray) -> np.ndarray:
    """Weights of ``uG`` for a batch of messages (rows of ``messages``)."""
    if cols.shape[0] == 0:
        return np.zeros(len(messages), dtype=np.int64)
    return nonorthogonal(field, messages, cols) @ mults


def _weight_set(field: FieldSpec, cols: np.ndarray, mults: np.ndarray, k: int) -> set[int]:
    """All weights (0 included) of the code spanned by the given columns."""
    q = field.order
    m = max(cols.shape[0], 1)
    batch = max(1, _BATCH_CELLS // (m * field.degree * max(k * field.degree, 1)))
    out = {0}
    for block in projective_points(q, k, batch=batch):
        out.update(np.unique(message_weights(field, cols, mults, block)).tolist())
    return out


def _components(cols: np.ndarray, k: int) -> list[tuple[list[int], list[int]]]:
    """Split rows/columns into blocks that share no support.

    Returns ``(rows, column indices)`` per block; zero columns are dropped.
    """
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for col in cols:
        support = np.flatnonzero(col)
        for r in support[1:]:
            a, b = find(int(support[0])), find(int(r))
            if a != b:
                parent[b] = a
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for r in range(k):
        groups.setdefault(find(r), ([], []))[0].append(r)
    for j, col in enumerate(cols):
        support = np.flatnonzero(col)
        if len(support):
            groups[find(int(support[0]))][1].append(j)
    return list(groups.values())


def _sumset(a: int, weights: Iterable[int]) -> int:
    out = 0
    for w in weights:
        out |= a << w
    return out


def spectrum_cost(code: LinearCode, decompose: bool = True) -> int:
    """Number of projective messages a spectrum computation will visit."""
    q = code.q
    if not decompose:
        return projective_count(q, code.dimension)
    cols, _ = code._arrays
    return sum(projective_count(q, len(rows)) for rows, _ in _components(cols, code.dimension))


def weight_spectrum(code: LinearCode, budget: int | None = DEFAULT_BUDGET, decompose: bool = True) -> WeightSpectrum:
    """Distinct nonzero weights over all codewords.

    Only projective representatives are enumerated since scalar multiples
    share a weight. With ``decompose`` the code is first split into blocks
    with disjoint row and column supports; the weight set is then the
    sumset of the block weight sets.
    """
    cost = spectrum_cost(code, decompose)
    if budget is not None and cost > budget:
        raise ResourceLimit(f"spectrum needs {cost} projective messages, budget is {budget}")
    F = code.field
    cols, mults = code._arrays
    if not decompose:
        ws = _weight_set(F, cols, mults, code.dimension)
    else:
        acc = 1  # bitset holding {0}
        for rows, idx in _components(cols, code.dimension):
            sub = cols[np.ix_(idx, rows)] if idx else np.zeros((0, len(rows)), dtype=np.int64)
            acc = _sumset(acc, _weight_set(F, sub, mults[idx], len(rows)))
        ws = {i for i in range(acc.bit_length()) if acc >> i & 1}
    ws.discard(0)
    return WeightSpectrum(tuple(sorted(ws)))


def num_distinct_weights(code: LinearCode, budget: int | None = DEFAULT_BUDGET) -> int:
    return len(weight_spectrum(code, budget))


def extend_with_zero_columns(code: LinearCode, t: int) -> LinearCode:
    """Append t all-zero coordinates; the weights do not change."""
    if t < 1:
        raise PreconditionViolated("t must be >= 1")
    zero = (0,) * code.dimension
    pairs = list(zip(code.columns, code.multiplicities)) + [(zero, t)]
    return LinearCode.from_columns(code.field, code.dimension, pairs)


# ---------------------------------------------------------------------------
# linear algebra over GF(q)


def row_reduce(field: FieldSpec, rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    F = field
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    if not mat:
        return [], []
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = F.inv(mat[r][c])
        mat[r] = [F.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(code: LinearCode) -> int:
    """Rank of the k x (#distinct columns) matrix over the code's field."""
    if not code.columns:
        return 0
    rows = [list(r) for r in zip(*code.columns)]
    return len(row_reduce(code.field, rows)[1])
