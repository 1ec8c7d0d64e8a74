"""Unrestricted codes with as many distinct pairwise distances as possible.

Words are tuples over the integer alphabet ``range(q)``; only symbol
equality matters for the Hamming distance, so q need not be a prime power.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import NotAPrimePower, PreconditionViolated, ResourceLimit
from .field import FieldSpec, factorize, is_prime_power, make_field, pp

SINGER_MAX_FIELD = 2**20


def hamming_distance(x, y) -> int:
    return sum(a != b for a, b in zip(x, y))


@dataclass(frozen=True)
class UnrestrictedCode:
    alphabet_size: int
    words: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise PreconditionViolated("alphabet size must be >= 2")
        if len(self.words) < 2:
            raise PreconditionViolated("a code needs at least two words")
        n = len(self.words[0])
        for w in self.words:
            if len(w) != n:
                raise PreconditionViolated("words differ in length")
            if any(not 0 <= s < self.alphabet_size for s in w):
                raise PreconditionViolated(f"word {w} leaves the alphabet")
        if len(set(self.words)) != len(self.words):
            raise PreconditionViolated("words must be distinct")

    @property
    def q(self) -> int:
        return self.alphabet_size

    @property
    def length(self) -> int:
        return len(self.words[0])

    n = length

    @property
    def size(self) -> int:
        return len(self.words)

    def to_dict(self) -> dict:
        if self.q > 10:
            words = [list(w) for w in self.words]
        else:
            words = ["".join(map(str, w)) for w in self.words]
        return {"q": self.q, "n": self.length, "words": words}

    @classmethod
    def from_dict(cls, data: dict) -> UnrestrictedCode:
        words = tuple(tuple(int(c) for c in w) for w in data["words"])
        code = cls(int(data["q"]), words)
        if code.length != int(data["n"]):
            raise PreconditionViolated("declared length does not match the words")
        return code


def distance_spectrum(code: UnrestrictedCode) -> set[int]:
    return {hamming_distance(x, y) for x, y in combinations(code.words, 2)}


def n_upper(M: int) -> int:
    """Most distances M words can have: one per pair."""
    if M < 2:
        raise PreconditionViolated("M must be >= 2")
    return comb(M, 2)


# ---------------------------------------------------------------------------
# nested runs of ones


@dataclass(frozen=True)
class StepCode:
    """Words ``1^w 0^(n-w)`` for an increasing weight sequence starting at 0."""

    weights: tuple[int, ...]

    def __post_init__(self):
        w = self.weights
        if len(w) < 2 or w[0] != 0 or any(b <= a for a, b in zip(w, w[1:])):
            raise PreconditionViolated("weights must be strictly increasing from 0")

    def differences(self) -> list[int]:
        return [b - a for a, b in combinations(self.weights, 2)]


def is_sidon(values) -> bool:
    diffs = [b - a for a, b in combinations(sorted(values), 2)]
    return len(diffs) == len(set(diffs))


def sidon_chain(M: int, strategy: str = "greedy") -> StepCode:
    """Increasing sequence 0 = w_0 < ... < w_{M-1} with all differences distinct.

    ``greedy`` takes the smallest admissible next value each time;
    ``doubling`` uses w_i = 2^i - 1.
    """
    if M < 2:
        raise PreconditionViolated("M must be >= 2")
    if strategy == "doubling":
        return StepCode((0,) + tuple(2**i - 1 for i in range(1, M)))
    if strategy != "greedy":
        raise ValueError(f"unknown strategy {strategy!r}")
    seq = [0]
    diffs: set[int] = set()
    candidate = 1
    while len(seq) < M:
        new = [candidate - s for s in seq]
        if not diffs.intersection(new):
            seq.append(candidate)
            diffs.update(new)
        candidate += 1
    return StepCode(tuple(seq))


def step_to_code(sc: StepCode, q: int = 2) -> UnrestrictedCode:
    n = sc.weights[-1]
    words = tuple((1,) * w + (0,) * (n - w) for w in sc.weights)
    return UnrestrictedCode(q, words)


# ---------------------------------------------------------------------------
# perfect difference sets


@dataclass(frozen=True)
class DifferenceSet:
    modulus: int
    residues: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"v": self.modulus, "residues": list(self.residues)}

    @classmethod
    def from_dict(cls, data: dict) -> DifferenceSet:
        return cls(int(data["v"]), tuple(sorted(int(r) for r in data["residues"])))


def is_perfect_difference_set(ds: DifferenceSet) -> bool:
    """Every nonzero residue is exactly one ordered difference."""
    v = ds.modulus
    if v < 1 or len(set(ds.residues)) != len(ds.residues):
        return False
    if any(not 0 <= r < v for r in ds.residues):
        return False
    seen = [0] * v
    for a in ds.residues:
        for b in ds.residues:
            if a != b:
                seen[(a - b) % v] += 1
    return all(c == 1 for c in seen[1:])


def _normalize_shift(residues, v: int) -> tuple[int, ...]:
    # translate that fits in the shortest window, ties broken lexicographically
    best = None
    for r in residues:
        shifted = tuple(sorted((x - r) % v for x in residues))
        key = (shifted[-1], shifted)
        if best is None or key < best:
            best = key
    return best[1]


def _ext3_mul(F: FieldSpec, a, b, cubic) -> tuple[int, int, int]:
    # (a0 + a1 B + a2 B^2)(b0 + b1 B + b2 B^2) mod B^3 + c2 B^2 + c1 B + c0
    prod = [0] * 5
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] = F.add(prod[i + j], F.mul(x, y))
    for d in (4, 3):
        top = prod[d]
        if top:
            for i in range(3):
                prod[d - 3 + i] = F.sub(prod[d - 3 + i], F.mul(top, cubic[i]))
    return tuple(prod[:3])


def _ext3_pow(F, a, n, cubic):
    out = (1, 0, 0)
    while n:
        if n & 1:
            out = _ext3_mul(F, out, a, cubic)
        a = _ext3_mul(F, a, a, cubic)
        n >>= 1
    return out


def singer_difference_set(s: int) -> DifferenceSet:
    """Perfect difference set of s + 1 residues modulo s^2 + s + 1.

    GF(s^3) is built as GF(s)[B]/(irreducible cubic). For a primitive
    element a, the residues are the i with a^i in span{1, B}; that plane
    is closed under GF(s)-scaling so membership only depends on i mod v.
    The result is translated to the shortest window.
    """
    if not is_prime_power(s):
        raise NotAPrimePower(f"{s} is not a prime power")
    if s**3 > SINGER_MAX_FIELD:
        raise ResourceLimit(f"GF({s}^3) exceeds the supported size")
    F = make_field(s)
    cubic = _irreducible_cubic(F)
    order = s**3 - 1
    primes = list(factorize(order))
    alpha = None
    for code in range(2, s**3):
        cand = (code % s, (code // s) % s, code // (s * s))
        if all(_ext3_pow(F, cand, order // r, cubic) != (1, 0, 0) for r in primes):
            alpha = cand
            break
    v = s * s + s + 1
    residues = []
    x = (1, 0, 0)
    for i in range(v):
        if x[2] == 0:
            residues.append(i)
        x = _ext3_mul(F, x, alpha, cubic)
    ds = DifferenceSet(v, _normalize_shift(residues, v))
    if len(ds.residues) != s + 1 or not is_perfect_difference_set(ds):
        raise AssertionError(f"Singer construction failed for s={s}")
    return ds


def _irreducible_cubic(F: FieldSpec) -> tuple[int, int, int]:
    s = F.order
    for c0 in range(1, s):
        for c1 in range(s):
            for c2 in range(s):
                # a cubic is irreducible iff it has no root
                if all(_cubic_value(F, (c0, c1, c2), x) != 0 for x in range(s)):
                    return (c0, c1, c2)
    raise AssertionError(f"no irreducible cubic over GF({s})")


def _cubic_value(F: FieldSpec, cubic, x: int) -> int:
    c0, c1, c2 = cubic
    val = F.mul(F.mul(x, x), x)
    val = F.add(val, F.mul(c2, F.mul(x, x)))
    val = F.add(val, F.mul(c1, x))
    return F.add(val, c0)


def search_perfect_difference_set(v: int, size: int) -> DifferenceSet | None:
    """Smallest (lexicographic) perfect difference set of the given size containing 0."""
    if v > 200:
        raise ResourceLimit("brute-force difference set search is limited to v <= 200")
    for rest in combinations(range(1, v), size - 1):
        ds = DifferenceSet(v, (0,) + rest)
        if is_perfect_difference_set(ds):
            return ds
    return None


def singer_code(s: int, q: int = 2) -> UnrestrictedCode:
    """s + 1 words of length s^2 + s + 1; word i is a run of v_i ones."""
    if q < 2:
        raise PreconditionViolated("alphabet size must be >= 2")
    ds = singer_difference_set(s)
    n = ds.modulus
    return UnrestrictedCode(q, tuple((1,) * r + (0,) * (n - r) for r in ds.residues))


def n0_upper(M: int, q: int = 2) -> int:
    """Length at which M words are known to reach C(M, 2) distances.

    Uses the Singer code on pp(M - 1) + 1 >= M words and drops extras.
    """
    if M < 2:
        raise PreconditionViolated("M must be >= 2")
    if is_prime_power(M - 1):
        return 2 * comb(M, 2) + 1
    return 2 * comb(pp(M - 1) + 1, 2) + 1


__all__ = [
    "DifferenceSet",
    "StepCode",
    "UnrestrictedCode",
    "distance_spectrum",
    "hamming_distance",
    "is_perfect_difference_set",
    "is_sidon",
    "n0_upper",
    "n_upper",
    "search_perfect_difference_set",
    "sidon_chain",
    "singer_code",
    "singer_difference_set",
    "step_to_code",
]
