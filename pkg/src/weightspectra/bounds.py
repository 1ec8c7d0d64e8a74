"""Closed-form bounds on weight counts and the q-ary entropy machinery.

Combinatorial quantities are exact Python integers; only the entropy
functions use floating point.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from math import comb

from .errors import DomainError, Infeasible, NoRoot, OutOfRange
from .field import prime_power_decomposition

ROOT_TOL = 1e-12


def projective_upper(k: int, q: int) -> int:
    """(q^k - 1)/(q - 1): nonzero multiples of a codeword share a weight."""
    if k < 1 or q < 2:
        raise OutOfRange("need k >= 1 and q >= 2")
    return (q**k - 1) // (q - 1)


def doubling_lower_formula(k: int, q: int) -> int:
    """2^(k-2) q + 2^(k-2) + 1."""
    if k < 2:
        raise OutOfRange("the doubling formula needs k >= 2")
    return 2 ** (k - 2) * q + 2 ** (k - 2) + 1


def best_lower(k: int, q: int) -> int:
    """Largest of the ambient (k), two-dimensional (q + 1) and doubling lower bounds.

    The doubling formula at k = 2 gives q + 2, which overshoots L(2, q) = q + 1,
    so it is only applied for k >= 3.
    """
    if k < 1:
        raise OutOfRange("k must be >= 1")
    candidates = [k]
    if k == 2:
        candidates.append(q + 1)
    if k >= 3:
        candidates.append(doubling_lower_formula(k, q))
    return max(candidates)


def delsarte_size(n: int, s: int, q: int) -> int:
    """sum_{j=0}^{s} C(n, j) (q-1)^j, the size cap for codes with s distances."""
    if not 0 <= s <= n:
        raise OutOfRange("need 0 <= s <= n")
    return sum(comb(n, j) * (q - 1) ** j for j in range(s + 1))


def delsarte_min_s(n: int, k: int, q: int) -> int:
    """Smallest s with q^k <= delsarte_size(n, s, q): a floor on distances of an [n, k]_q code."""
    if k < 1 or k > n:
        raise OutOfRange("need 1 <= k <= n")
    target = q**k
    total = 0
    for s in range(n + 1):
        total += comb(n, s) * (q - 1) ** s
        if total >= target:
            return s
    raise Infeasible(f"no s <= {n} reaches {target}")


def delsarte_weight_upper(n: int, k: int, q: int, s_observed: int) -> int:
    """Cap on L(k, q) implied by a length-n code of dimension k showing s distances."""
    return (delsarte_size(n, s_observed, q) - 1) // (q - 1)


# ---------------------------------------------------------------------------
# entropy


def entropy(q: int, y: float) -> float:
    """q-ary entropy, extended continuously to y = 0 and y = 1."""
    if q < 2:
        raise DomainError("q must be >= 2")
    if not 0.0 <= y <= 1.0:
        raise DomainError(f"entropy is defined on [0, 1], got {y}")
    lq = math.log(q)
    out = y * math.log(q - 1) / lq if q > 2 else 0.0
    if 0.0 < y:
        out -= y * math.log(y) / lq
    if y < 1.0:
        out -= (1 - y) * math.log1p(-y) / lq
    return out


def _bisect(f, lo: float, hi: float, tol: float = ROOT_TOL) -> float:
    flo = f(lo)
    if flo == 0:
        return lo
    if (flo > 0) == (f(hi) > 0):
        raise NoRoot(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def t_fixed_point(q: int, grid: int = 10_000) -> float:
    """Nontrivial solution of H_q(x) = x in (0, 1).

    The root always lies above (q - 1)/q since H_q((q-1)/q) = 1.
    Uniqueness is checked by counting sign changes on a grid.
    """
    if q < 2:
        raise DomainError("q must be >= 2")
    eps = 1e-15

    def f(x):
        return entropy(q, x) - x

    xs = [eps + (1 - 2 * eps) * i / grid for i in range(grid + 1)]
    signs = [f(x) > 0 for x in xs]
    changes = sum(a != b for a, b in zip(signs, signs[1:]))
    if changes != 1:
        raise NoRoot(f"expected one sign change of H_{q}(x) - x, found {changes}")
    return _bisect(f, eps, 1 - eps)


def entropy_inverse(q: int, z: float) -> float:
    """The y in [0, (q-1)/q] with H_q(y) = z."""
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"entropy_inverse needs 0 <= z <= 1, got {z}")
    top = (q - 1) / q
    if z == 0.0:
        return 0.0
    if z == 1.0:
        return top
    return _bisect(lambda y: entropy(q, y) - z, 0.0, top)


def lambda_interval(q: int) -> tuple[float, float]:
    """Bracket (log_q 2, 1) on the exponential growth rate of L(k, q) in k."""
    if q < 2:
        raise DomainError("q must be >= 2")
    return (math.log(2) / math.log(q), 1.0)


# ---------------------------------------------------------------------------


SEGMENT_LABELS = ("diagonal", "horizontal", "vertical", "entropy_inverse")


@dataclass
class CurvePolyline:
    """Outer boundary of the achievable (rate, weight exponent) region."""

    q: int
    t: float
    segments: dict[str, list[tuple[float, float]]] = field(default_factory=dict)

    def corners(self) -> list[tuple[float, float]]:
        pts = [seg[0] for seg in self.segments.values()]
        return pts + [self.segments[SEGMENT_LABELS[-1]][-1]]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["segment_label", "R", "L"])
        for label, pts in self.segments.items():
            for r, l in pts:
                w.writerow([label, repr(r), repr(l)])
        return buf.getvalue()


def domain_boundary(q: int, points_per_segment: int = 100) -> CurvePolyline:
    """Counterclockwise boundary (0,0) -> (t,t) -> (1,t) -> (1,(q-1)/q) -> (0,0)."""
    if points_per_segment < 2:
        raise OutOfRange("need at least two points per segment")
    t = t_fixed_point(q)
    top = (q - 1) / q
    m = points_per_segment

    def lin(a, b, i):
        return a + (b - a) * i / (m - 1)

    segs = {
        "diagonal": [(lin(0.0, t, i), lin(0.0, t, i)) for i in range(m)],
        "horizontal": [(lin(t, 1.0, i), t) for i in range(m)],
        "vertical": [(1.0, lin(t, top, i)) for i in range(m)],
    }
    curve = []
    for i in range(m):
        r = lin(1.0, 0.0, i)
        curve.append((r, entropy_inverse(q, r)))
    segs["entropy_inverse"] = curve
    return CurvePolyline(q, t, segs)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    kind: str
    value: int
    inputs: dict


def bound_reports(k: int, q: int, n: int | None = None) -> list[BoundReport]:
    """Every applicable bound for (k, q), plus length-dependent ones when n is given."""
    prime_power_decomposition(q)
    inputs = {"k": k, "q": q} if n is None else {"n": n, "k": k, "q": q}
    out = [
        BoundReport("upper_projective", projective_upper(k, q), inputs),
        BoundReport("lower_ambient", k, inputs),
        BoundReport("lower_best", best_lower(k, q), inputs),
    ]
    if k >= 3:
        out.append(BoundReport("lower_doubling_formula", doubling_lower_formula(k, q), inputs))
    if n is not None:
        s = delsarte_min_s(n, k, q)
        out.append(BoundReport("delsarte_min_distances", s, inputs))
        out.append(BoundReport("length_upper", n, inputs))
        out.append(BoundReport("upper_at_length", min(n, projective_upper(k, q)), inputs))
    return out
