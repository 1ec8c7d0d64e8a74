"""Random long-code experiments and exact small-scale oracles.

``exhaustive_L`` enumerates every k-dimensional subspace of GF(q)^n once,
through its reduced row echelon generator matrix. ``exhaustive_N`` uses the
fact that the distances of an unrestricted code only depend on the multiset
of column equality patterns (set partitions of the word indices), which
removes coordinate and per-coordinate symbol symmetry from the search.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import chain, combinations, combinations_with_replacement, islice, product
from math import comb, prod

import numpy as np

from .bounds import delsarte_size, projective_upper
from .code import DEFAULT_BUDGET, LinearCode, nonorthogonal, projective_count, projective_points, rank, weight_spectrum
from .errors import Infeasible, PreconditionViolated, ResourceLimit
from .field import make_field
from .nonlinear import UnrestrictedCode, n0_upper

ORACLE_BUDGET = 10**7
_CHUNK = 1 << 15


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@dataclass
class SearchReport:
    params: dict
    trials: int
    best_count: int
    best_witness: dict | None
    seed: int | None
    counts: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["counts"] = {str(k): v for k, v in sorted(self.counts.items())}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# ---------------------------------------------------------------------------
# random codes


def random_code(n: int, k: int, q: int, rng: np.random.Generator) -> LinearCode:
    """Generator matrix with i.i.d. uniform entries, redrawn until it has rank k."""
    F = make_field(q)
    while True:
        entries = rng.integers(0, q, size=(n, k))
        cols, counts = np.unique(entries, axis=0, return_counts=True)
        code = LinearCode.from_columns(F, k, zip(map(tuple, cols.tolist()), counts.tolist()))
        if rank(code) == k:
            return code


def random_linear_search(n: int, k: int, q: int, trials: int, seed: int = 0, budget: int = DEFAULT_BUDGET) -> SearchReport:
    """Best weight count over ``trials`` random [n, k]_q codes.

    Trial i draws from ``default_rng([seed, i])``, so results do not depend
    on execution order. Ties keep the earliest trial.
    """
    if k < 1 or k > n:
        raise PreconditionViolated("need 1 <= k <= n")
    if trials < 1:
        raise PreconditionViolated("need at least one trial")
    cost = projective_count(q, k)
    if cost > budget:
        raise ResourceLimit(f"{cost} projective messages per trial exceeds budget {budget}")
    best, witness = -1, None
    counts: dict[int, int] = {}
    for i in range(trials):
        code = random_code(n, k, q, np.random.default_rng([seed, i]))
        c = len(weight_spectrum(code, budget=budget, decompose=False))
        counts[c] = counts.get(c, 0) + 1
        if c > best:
            best, witness = c, code
    return SearchReport({"n": n, "k": k, "q": q}, trials, best, witness.to_dict(), seed, counts)


# (k, q, value) rows of the published random-search tables
TABLE1 = [(3, 3, 11), (4, 5, 29), (4, 8, 41), (6, 9, 177), (6, 13, 241), (10, 16, 4609),
          (10, 25, 6913), (12, 29, 31745), (12, 49, 52225), (12, 121, 125953)]
TABLE2 = [(3, 3, 13), (3, 4, 21), (3, 5, 31), (3, 7, 57), (3, 8, 73), (3, 9, 91), (3, 11, 133),
          (4, 3, 40), (4, 4, 85), (4, 5, 156), (5, 3, 121), (5, 4, 341)]
TABLE2_LENGTH = 6_000_000


def table_rows(preset: str, n: int, trials: int, seed: int, budget: int = DEFAULT_BUDGET):
    """Rerun a published table at length n, skipping rows beyond the budget."""
    rows = {"table1": TABLE1, "table2": TABLE2}[preset]
    out = []
    for k, q, published in rows:
        row = {"k": k, "q": q, "published": published, "upper": projective_upper(k, q), "n": n}
        if projective_count(q, k) > budget:
            row.update(status="skipped", reason="budget")
        else:
            rep = random_linear_search(n, k, q, trials, seed, budget)
            row.update(status="ran", best_count=rep.best_count, trials=trials,
                       meets_upper=rep.best_count == row["upper"])
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# exhaustive linear oracle


def _vector_index(k: int, q: int) -> np.ndarray:
    """All vectors of GF(q)^k, row i being the base-q digits of i (most significant first)."""
    idx = np.arange(q**k, dtype=np.int64)
    powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers) % q


def _support_indices(k: int, q: int, rows: list[int]) -> np.ndarray:
    """Indices (into _vector_index) of vectors supported on the given rows."""
    idx = np.zeros(1, dtype=np.int64)
    for r in rows:
        idx = (idx[:, None] + np.arange(q, dtype=np.int64) * q ** (k - 1 - r)).ravel()
    return np.sort(idx)


def _distinct_per_row(w: np.ndarray) -> np.ndarray:
    s = np.sort(w, axis=1)
    return 1 + (np.diff(s, axis=1) != 0).sum(axis=1)


def exhaustive_linear(n: int, k: int, q: int, budget: int = ORACLE_BUDGET) -> tuple[int, LinearCode]:
    """Exact L(n, k, q) with a witness code, over all RREF generator matrices."""
    if not 1 <= k <= n:
        raise PreconditionViolated("need 1 <= k <= n")
    total = gaussian_binomial(n, k, q)
    if total > budget:
        raise ResourceLimit(f"{total} subspaces exceed budget {budget}")
    F = make_field(q)
    vectors = _vector_index(k, q)
    msgs = np.concatenate(list(projective_points(q, k)))
    table = nonorthogonal(F, msgs, vectors).T.astype(np.int64)  # (q^k, P)
    base = (msgs != 0).sum(axis=1)  # pivot columns contribute wt(u)
    best, best_cols = 0, None
    for pivots in combinations(range(n), k):
        free = [j for j in range(n) if j not in pivots]
        allowed = [_support_indices(k, q, [r for r in range(k) if pivots[r] < j]) for j in free]
        sizes = [len(a) for a in allowed]
        count = prod(sizes)
        for start in range(0, count, _CHUNK):
            ids = np.arange(start, min(start + _CHUNK, count), dtype=np.int64)
            choice = np.empty((len(ids), len(free)), dtype=np.int64)
            rem = ids
            for j in range(len(free) - 1, -1, -1):
                choice[:, j] = allowed[j][rem % sizes[j]]
                rem = rem // sizes[j]
            w = base[None, :] + table[choice].sum(axis=1) if free else np.broadcast_to(base, (1, len(base)))
            distinct = _distinct_per_row(w)
            i = int(np.argmax(distinct))
            if distinct[i] > best:
                best = int(distinct[i])
                best_cols = (pivots, free, choice[i].copy() if free else None)
    pivots, free, choice = best_cols
    cols = [None] * n
    for r, p in enumerate(pivots):
        cols[p] = tuple(int(r == i) for i in range(k))
    for j, c in zip(free, choice if free else []):
        cols[j] = tuple(int(x) for x in vectors[c])
    witness = LinearCode.from_columns(F, k, ((c, 1) for c in cols))
    return best, witness


def exhaustive_L(n: int, k: int, q: int, budget: int = ORACLE_BUDGET) -> int:
    return exhaustive_linear(n, k, q, budget)[0]


def smallest_n0_linear(k: int, q: int, target: int, budget: int = ORACLE_BUDGET) -> int:
    """Smallest n with exhaustive_L(n, k, q) >= target."""
    if target < 1:
        raise PreconditionViolated("target must be >= 1")
    if target > projective_upper(k, q):
        raise Infeasible(f"target {target} exceeds the projective bound")
    n = max(target, k)
    while True:
        if exhaustive_L(n, k, q, budget) >= target:
            return n
        n += 1


# ---------------------------------------------------------------------------
# exhaustive unrestricted oracle


def equality_patterns(M: int, q: int) -> np.ndarray:
    """Restricted growth strings of length M with at most q blocks; row 0 is all zeros."""
    out = []

    def grow(prefix, top):
        if len(prefix) == M:
            out.append(prefix)
            return
        for s in range(min(top + 2, q)):
            grow(prefix + [s], max(top, s))

    grow([0], 0)
    return np.array(out, dtype=np.int64)


def exhaustive_unrestricted(n: int, M: int, q: int, budget: int = ORACLE_BUDGET) -> tuple[int, UnrestrictedCode]:
    """Exact N(n, M, q) with a witness code."""
    if M < 2 or n < 1 or q < 2:
        raise PreconditionViolated("need M >= 2, n >= 1, q >= 2")
    if M > q**n:
        raise Infeasible(f"{M} distinct words do not fit in length {n} over {q} symbols")
    patterns = equality_patterns(M, q)
    T = len(patterns)
    total = comb(n + T - 1, n)
    if total > budget:
        raise ResourceLimit(f"{total} column multisets exceed budget {budget}")
    pairs = list(combinations(range(M), 2))
    sep = np.array([[p[i] != p[j] for i, j in pairs] for p in patterns], dtype=np.int64)
    best, best_choice = 0, None
    it = combinations_with_replacement(range(T), n)
    while True:
        chunk = list(islice(it, _CHUNK))
        if not chunk:
            break
        choice = np.fromiter(chain.from_iterable(chunk), dtype=np.int64, count=len(chunk) * n).reshape(-1, n)
        d = sep[choice].sum(axis=1)
        distinct = np.where(d.min(axis=1) > 0, _distinct_per_row(d), 0)
        i = int(np.argmax(distinct))
        if distinct[i] > best:
            best, best_choice = int(distinct[i]), choice[i]
            if best == len(pairs):
                break
    if best_choice is None:
        raise Infeasible("no code with distinct words found")
    words = tuple(tuple(int(patterns[c][w]) for c in best_choice) for w in range(M))
    return best, UnrestrictedCode(q, words)


def exhaustive_N(n: int, M: int, q: int, budget: int = ORACLE_BUDGET) -> int:
    return exhaustive_unrestricted(n, M, q, budget)[0]


def smallest_N0(M: int, q: int, budget: int = ORACLE_BUDGET) -> int:
    """Smallest length at which M words can realise C(M, 2) distinct distances."""
    target = comb(M, 2)
    n = target
    cap = n0_upper(M, q)
    while n <= cap:
        if M <= q**n and exhaustive_N(n, M, q, budget) == target:
            return n
        n += 1
    raise AssertionError(f"no length up to the constructive bound {cap} worked")


# ---------------------------------------------------------------------------


@dataclass
class AuditReport:
    table: dict[tuple[int, int, int], int]
    checks: list[tuple[str, int, int, bool]]

    @property
    def ok(self) -> bool:
        return all(c[3] for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c[3]]

    def to_dict(self) -> dict:
        return {
            "table": [{"n": n, "k": k, "q": q, "L": v} for (n, k, q), v in sorted(self.table.items())],
            "checks": [{"claim": c, "lhs": a, "rhs": b, "holds": h} for c, a, b, h in self.checks],
            "ok": self.ok,
        }


def monotonicity_audit(budget: int = ORACLE_BUDGET, qs=(2, 3, 4), max_k: int = 3, max_n: int = 6) -> AuditReport:
    """Exhaustive L(n, k, q) on a small grid, checked against the stated inequalities."""
    table = {}
    for q in qs:
        for k in range(1, max_k + 1):
            for n in range(k, max_n + 1):
                table[(n, k, q)] = exhaustive_L(n, k, q, budget)
    checks = []
    for (n, k, q), v in sorted(table.items()):
        checks.append((f"L({n},{k},{q}) <= n", v, n, v <= n))
        checks.append((f"L({n},{k},{q}) <= (q^k-1)/(q-1)", v, projective_upper(k, q), v <= projective_upper(k, q)))
        size = delsarte_size(n, v, q)
        checks.append((f"q^k <= delsarte_size({n},L,{q})", q**k, size, q**k <= size))
        if (n + 1, k, q) in table:
            w = table[(n + 1, k, q)]
            checks.append((f"L({n},{k},{q}) <= L({n + 1},{k},{q})", v, w, v <= w))
        if (n, k + 1, q) in table:
            w = table[(n, k + 1, q)]
            checks.append((f"L({n},{k},{q}) <= L({n},{k + 1},{q})", v, w, v <= w))
        if (n, k, q * q) in table:
            w = table[(n, k, q * q)]
            checks.append((f"L({n},{k},{q}) <= L({n},{k},{q * q})", v, w, v <= w))
    return AuditReport(table, checks)
