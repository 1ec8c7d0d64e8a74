"""Exact arithmetic in GF(q), q = p^e, and prime-power utilities.

Elements are encoded as integers in ``[0, q)``: the element
``c_0 + c_1 X + ... + c_{e-1} X^{e-1}`` is stored as ``sum(c_i * p**i)``.
This is the same encoding used by the code serialization format.

Scalar multiplication goes through log/antilog tables for ``q <= 2**16`` and
through polynomial arithmetic above that. Vectorised work (weight
enumeration) uses the GF(p)-linear matrices of multiplication by an element,
see :meth:`FieldSpec.mul_matrices`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

import numpy as np

from .errors import NotAPrimePower

TABLE_LIMIT = 2**16
MAX_ORDER = 2**20


# ---------------------------------------------------------------------------
# integer utilities


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_decomposition(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise NotAPrimePower."""
    if q < 2:
        raise NotAPrimePower(f"{q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise NotAPrimePower(f"{q} has prime factors {sorted(f)}")
    ((p, e),) = f.items()
    return p, e


def is_prime_power(n: int) -> bool:
    try:
        prime_power_decomposition(n)
    except NotAPrimePower:
        return False
    return True


def pp(t: int) -> int:
    """Smallest prime power ``>= max(t, 2)``."""
    if t < 1:
        raise ValueError("pp requires t >= 1")
    n = max(t, 2)
    while not is_prime_power(n):
        n += 1
    return n


def prime_power_mask(limit: int) -> np.ndarray:
    """Boolean array ``m`` of length ``limit + 1`` with ``m[n]`` true iff n is a prime power."""
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    mask = sieve.copy()
    for p in np.flatnonzero(sieve):
        p = int(p)
        if p * p > limit:
            break
        pk = p * p
        while pk <= limit:
            mask[pk] = True
            pk *= p
    return mask


def pp_table(limit: int) -> np.ndarray:
    """Vectorised ``pp``: entry t holds pp(t) for 1 <= t <= limit (entry 0 holds 2)."""
    # pp(t) <= 2t, so a sieve up to 2*limit always contains the answer
    powers = np.flatnonzero(prime_power_mask(2 * limit + 2))
    t = np.maximum(np.arange(limit + 1), 2)
    return powers[np.searchsorted(powers, t)]


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient lists low -> high


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(base: list[int], exp: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, m, p)
    while exp:
        if exp & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        exp >>= 1
    return result


def is_irreducible(poly: list[int], p: int) -> bool:
    """Rabin-style test: f of degree e is irreducible iff gcd(X^(p^i) - X, f) = 1 for i <= e/2."""
    poly = _trim([c % p for c in poly])
    e = len(poly) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(e // 2):
        xp = _poly_powmod(xp, p, poly, p)
        g = _poly_gcd(poly, _poly_sub(xp, x, p), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e over GF(p) with the smallest lower coefficients.

    Candidates are ordered by the integer ``sum(c_i * p**i)`` of their lower
    coefficients, i.e. the same order as the element encoding.
    """
    if e == 1:
        return (0, 1)
    for code in range(1, p**e):
        low = [(code // p**i) % p for i in range(e)]
        if low[0] == 0:
            continue
        if is_irreducible(low + [1], p):
            return tuple(low + [1])
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int
    degree: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.characteristic**self.degree

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def q(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GF({self.order})"

    # -- encoding ----------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        p = self.characteristic
        return tuple((a // p**i) % p for i in range(self.degree))

    def from_coeffs(self, coeffs) -> int:
        p = self.characteristic
        if len(coeffs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(coeffs)}")
        return sum((int(c) % p) * p**i for i, c in enumerate(coeffs))

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of {self!r}")
        return a

    def element(self, value) -> FieldElement:
        if isinstance(value, (tuple, list)):
            value = self.from_coeffs(value)
        return FieldElement(self, self.check(int(value)))

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p, e = self.characteristic, self.degree
        if e == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out, scale = 0, 1
        for _ in range(e):
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p, e = self.characteristic, self.degree
        if e == 1:
            return -a % p
        if p == 2:
            return a
        return self.from_coeffs([-c for c in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _poly_mul_elems(self, a: int, b: int) -> int:
        p = self.characteristic
        prod = _poly_mod(_poly_mul(list(self.coeffs(a)), list(self.coeffs(b)), p), list(self.modulus), p)
        return self.from_coeffs(prod + [0] * (self.degree - len(prod)))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.degree == 1:
            return a * b % self.characteristic
        if self.order <= TABLE_LIMIT:
            log, exp = self._tables
            return int(exp[(log[a] + log[b]) % (self.order - 1)])
        return self._poly_mul_elems(a, b)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        if self.degree == 1:
            return pow(a, -1, self.characteristic)
        if self.order <= TABLE_LIMIT:
            log, exp = self._tables
            return int(exp[(-log[a]) % (self.order - 1)])
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # -- multiplicative structure ---------------------------------------------

    def _slow_pow(self, a: int, n: int) -> int:
        result = 1
        while n:
            if n & 1:
                result = self._poly_mul_elems(result, a)
            a = self._poly_mul_elems(a, a)
            n >>= 1
        return result

    @cached_property
    def primitive_element(self) -> int:
        """Smallest element (in encoding order) of multiplicative order q - 1."""
        q = self.order
        primes = list(factorize(q - 1)) if q > 2 else []
        for g in range(1, q):
            if all(self._slow_pow(g, (q - 1) // r) != 1 for r in primes):
                return g
        raise AssertionError("multiplicative group is not cyclic?")

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        q = self.order
        g = self.primitive_element
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        if self.degree == 1:
            x = 1
            for i in range(q - 1):
                exp[i] = x
                log[x] = i
                x = x * g % q
            return log, exp
        # step by the GF(p)-linear map "multiply by g"
        p = self.characteristic
        m = self.mul_matrices(np.array([g]))[0]
        weights = p ** np.arange(self.degree)
        v = np.zeros(self.degree, dtype=np.int64)
        v[0] = 1
        for i in range(q - 1):
            x = int(v @ weights)
            exp[i] = x
            log[x] = i
            v = m @ v % p
        return log, exp

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        n = self.order - 1
        for r, k in factorize(n).items() if n > 1 else []:
            for _ in range(k):
                if self.pow(a, n // r) == 1:
                    n //= r
                else:
                    break
        return n

    # -- vectorised helpers ---------------------------------------------------

    def digits(self, values: np.ndarray) -> np.ndarray:
        """Coefficient vectors, shape ``values.shape + (e,)``."""
        p = self.characteristic
        values = np.asarray(values, dtype=np.int64)
        return (values[..., None] // p ** np.arange(self.degree)) % p

    @cached_property
    def _companion_powers(self) -> np.ndarray:
        # stack[i] = matrix of multiplication by X^i, acting on coefficient columns
        e, p = self.degree, self.characteristic
        comp = np.zeros((e, e), dtype=np.int64)
        for j in range(e - 1):
            comp[j + 1, j] = 1
        comp[:, e - 1] = [(-c) % p for c in self.modulus[:e]]
        stack = np.zeros((e, e, e), dtype=np.int64)
        stack[0] = np.eye(e, dtype=np.int64)
        for i in range(1, e):
            stack[i] = comp @ stack[i - 1] % p
        return stack

    def mul_matrices(self, values: np.ndarray) -> np.ndarray:
        """GF(p) matrices of ``x -> a*x`` for each ``a``; shape ``values.shape + (e, e)``."""
        d = self.digits(values)
        return np.einsum("...i,ijk->...jk", d, self._companion_powers) % self.characteristic


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """Build GF(q) with the smallest monic irreducible modulus of the right degree."""
    p, e = prime_power_decomposition(q)
    if q > MAX_ORDER:
        raise ValueError(f"GF({q}) is beyond the supported range (q <= {MAX_ORDER})")
    return FieldSpec(p, e, smallest_irreducible(p, e))


def primitive_element(field: FieldSpec) -> int:
    return field.primitive_element


def field_elements(field: FieldSpec):
    return range(field.order)


def all_vectors(field: FieldSpec, k: int):
    """Every length-k vector over the field, lexicographic."""
    return product(range(field.order), repeat=k)


@dataclass(frozen=True)
class FieldElement:
    """Operator-friendly wrapper around an encoded element."""

    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.value
        return self.field.check(int(other))

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} in {self.field!r}"
