"""Arithmetic in GF(2^k), 1 <= k <= 12.

Elements are bit masks in the polynomial basis.  Multiplication goes through
log/antilog tables built once per field; :func:`make_field` caches contexts so
the same ``k`` always returns the same object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .errors import FieldDomainError, FieldMismatchError, FieldRangeError

MAX_DEGREE = 12

# Low-weight irreducibles, bit i = coefficient of x^i.
MODULI = {
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
    9: 0b1000000011,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000000001001,
}


def poly_mulmod(a: int, b: int, modulus: int) -> int:
    """Carry-less product of ``a`` and ``b`` reduced modulo ``modulus``."""
    deg = modulus.bit_length() - 1
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> deg) & 1:
            a ^= modulus
    return _poly_mod(r, modulus)


def _poly_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def _prime_divisors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(modulus: int) -> bool:
    """Rabin's test over F_2 for the polynomial encoded by ``modulus``."""
    k = modulus.bit_length() - 1
    if k < 1:
        return False
    if k == 1:
        return True

    def frob_power(j: int) -> int:
        # x^(2^j) mod modulus
        t = 0b10
        for _ in range(j):
            t = poly_mulmod(t, t, modulus)
        return t

    if frob_power(k) != 0b10:
        return False
    for p in _prime_divisors(k):
        if _poly_gcd(modulus, frob_power(k // p) ^ 0b10) != 1:
            return False
    return True


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """GF(2^k) with a fixed modulus and its log/antilog tables."""

    k: int
    modulus: int
    exp: tuple[int, ...] = field(repr=False)
    log: tuple[int, ...] = field(repr=False)
    generator: int = field(repr=False)

    @property
    def order(self) -> int:
        return 1 << self.k

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return self.k == other.k and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.k, self.modulus))

    def __reduce__(self):
        return (make_field, (self.k,))

    def __str__(self) -> str:
        return f"GF(2^{self.k})/{self.modulus:#x}"

    def __call__(self, bits: int) -> GFElem:
        return GFElem(bits, self)

    @property
    def zero(self) -> GFElem:
        return GFElem(0, self)

    @property
    def one(self) -> GFElem:
        return GFElem(1, self)

    def elements(self):
        for b in range(self.order):
            yield GFElem(b, self)

    @cached_property
    def log_sentinel(self) -> int:
        # Exceeds any sum of three genuine logs, so products with a zero
        # factor index the zero tail of ``np_exp``.
        return 3 * (self.order - 1)

    @cached_property
    def np_log(self) -> np.ndarray:
        arr = np.array(self.log, dtype=np.int64)
        arr[0] = self.log_sentinel
        return arr

    @cached_property
    def np_exp(self) -> np.ndarray:
        m = self.order - 1
        size = 3 * self.log_sentinel + 1
        out = np.zeros(size, dtype=np.uint16)
        base = np.array(self.exp[:m], dtype=np.uint16)
        idx = np.arange(self.log_sentinel)
        out[: self.log_sentinel] = base[idx % m]
        return out


@dataclass(frozen=True, slots=True)
class GFElem:
    bits: int
    ctx: FieldCtx

    def __post_init__(self):
        if not 0 <= self.bits < self.ctx.order:
            raise ValueError(f"{self.bits:#x} is not an element of {self.ctx}")

    def _check(self, other: GFElem) -> None:
        if self.ctx != other.ctx:
            raise FieldMismatchError(f"{self.ctx} vs {other.ctx}")

    def __add__(self, other: GFElem) -> GFElem:
        self._check(other)
        return GFElem(self.bits ^ other.bits, self.ctx)

    __sub__ = __add__

    def __mul__(self, other: GFElem) -> GFElem:
        self._check(other)
        if self.bits == 0 or other.bits == 0:
            return GFElem(0, self.ctx)
        c = self.ctx
        return GFElem(c.exp[(c.log[self.bits] + c.log[other.bits]) % (c.order - 1)], c)

    def __pow__(self, n: int) -> GFElem:
        if n < 0:
            return self.inverse() ** (-n)
        c = self.ctx
        if n == 0:
            return GFElem(1, c)
        if self.bits == 0:
            return self
        return GFElem(c.exp[(c.log[self.bits] * n) % (c.order - 1)], c)

    def inverse(self) -> GFElem:
        if self.bits == 0:
            raise FieldDomainError("inverse of zero")
        c = self.ctx
        return GFElem(c.exp[(-c.log[self.bits]) % (c.order - 1)], c)

    def __truediv__(self, other: GFElem) -> GFElem:
        return self * other.inverse()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __int__(self) -> int:
        return self.bits

    def __repr__(self) -> str:
        return f"{self.bits:#x}"

    __str__ = __repr__


def _build_tables(k: int, modulus: int) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    n = 1 << k
    m = n - 1
    for g in range(1, n):
        exp = [1]
        for _ in range(m - 1):
            exp.append(poly_mulmod(exp[-1], g, modulus))
        if len(set(exp)) == m:
            break
    else:  # pragma: no cover - irreducible moduli always have a generator
        raise AssertionError("no primitive element")
    log = [0] * n
    for i, v in enumerate(exp):
        log[v] = i
    return tuple(exp + exp), tuple(log), g


@lru_cache(maxsize=None)
def make_field(k: int) -> FieldCtx:
    if not isinstance(k, int) or not 1 <= k <= MAX_DEGREE:
        raise FieldRangeError(f"field degree must be in 1..{MAX_DEGREE}, got {k!r}")
    modulus = MODULI[k]
    if not is_irreducible(modulus):  # pragma: no cover - table is fixed
        raise AssertionError(f"modulus {modulus:#x} is reducible")
    exp, log, g = _build_tables(k, modulus)
    return FieldCtx(k, modulus, exp, log, g)


def add(a: GFElem, b: GFElem) -> GFElem:
    return a + b


def mul(a: GFElem, b: GFElem) -> GFElem:
    return a * b


def inv(a: GFElem) -> GFElem:
    return a.inverse()


def power(a: GFElem, n: int) -> GFElem:
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    return a**n


@lru_cache(maxsize=None)
def embedding_image(e: int, d: int) -> int:
    """Image in GF(2^d) of the class of x in GF(2^e).

    The smallest-bit root of the GF(2^e) modulus inside GF(2^d).
    """
    if d % e:
        raise FieldDomainError(f"GF(2^{e}) does not embed in GF(2^{d})")
    big = make_field(d)
    small_mod = MODULI[e]
    for r in range(big.order):
        acc, pw = 0, 1
        for i in range(e + 1):
            if (small_mod >> i) & 1:
                acc ^= pw
            pw = poly_mulmod(pw, r, big.modulus)
        if acc == 0:
            return r
    raise AssertionError("no root found")  # pragma: no cover


def embed(a: GFElem, target: FieldCtx) -> GFElem:
    """Image of ``a`` under the fixed embedding GF(2^e) -> ``target``."""
    e, d = a.ctx.k, target.k
    if d % e:
        raise FieldDomainError(f"GF(2^{e}) does not embed in GF(2^{d})")
    r = GFElem(embedding_image(e, d), target)
    acc = target.zero
    pw = target.one
    for i in range(e):
        if (a.bits >> i) & 1:
            acc = acc + pw
        pw = pw * r
    return acc
