"""Quadrics and cubics in x1..x4 with F_2 coefficients.

A form is a bit mask over a fixed monomial order; bit ``i`` set means the
``i``-th monomial of :data:`MONOMIALS` for that degree occurs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import DegreeMismatchError, FieldMismatchError, FormParseError, SingularMatrixError
from .gfield import GFElem


def _monomials(degree: int) -> tuple[tuple[int, int, int, int], ...]:
    out = []
    for combo in combinations_with_replacement(range(4), degree):
        e = [0, 0, 0, 0]
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return tuple(out)


MONOMIALS = {2: _monomials(2), 3: _monomials(3)}
MONOMIAL_INDEX = {d: {m: i for i, m in enumerate(ms)} for d, ms in MONOMIALS.items()}


@dataclass(frozen=True, order=True)
class Form:
    degree: int
    coeffs: int

    def __post_init__(self):
        if self.degree not in MONOMIALS:
            raise DegreeMismatchError(f"forms have degree 2 or 3, not {self.degree}")
        if not 0 <= self.coeffs < 1 << len(MONOMIALS[self.degree]):
            raise ValueError("coefficient mask too wide")

    @classmethod
    def from_monomials(cls, degree: int, exps: Iterable[Sequence[int]]) -> Form:
        bits = 0
        index = MONOMIAL_INDEX[degree]
        for e in exps:
            try:
                bits ^= 1 << index[tuple(e)]
            except KeyError:
                raise DegreeMismatchError(f"monomial {tuple(e)} is not of degree {degree}") from None
        return cls(degree, bits)

    @classmethod
    def zero(cls, degree: int) -> Form:
        return cls(degree, 0)

    @property
    def terms(self) -> list[tuple[int, int, int, int]]:
        ms = MONOMIALS[self.degree]
        return [ms[i] for i in range(len(ms)) if (self.coeffs >> i) & 1]

    def support(self) -> set[int]:
        return {i for i in range(len(MONOMIALS[self.degree])) if (self.coeffs >> i) & 1}

    def __add__(self, other: Form) -> Form:
        return add_forms(self, other)

    def __bool__(self) -> bool:
        return self.coeffs != 0

    def __str__(self) -> str:
        return render(self)

    def __call__(self, point: Sequence[GFElem]) -> GFElem:
        return evaluate(self, point)


@dataclass(frozen=True)
class LinearMask:
    k1: int
    k2: int
    k3: int
    k4: int

    def __post_init__(self):
        if any(b not in (0, 1) for b in self):
            raise ValueError("mask components must be 0 or 1")

    def __iter__(self):
        return iter((self.k1, self.k2, self.k3, self.k4))

    def __str__(self) -> str:
        return "".join(map(str, self))

    @classmethod
    def from_string(cls, text: str) -> LinearMask:
        return cls(*(int(c) for c in text.strip("()").replace(",", "")))

    @classmethod
    def all(cls) -> list[LinearMask]:
        """The 16 masks in lexicographic order."""
        return [cls(*((n >> s) & 1 for s in (3, 2, 1, 0))) for n in range(16)]


# --- parsing and rendering ---------------------------------------------------

_FACTOR = re.compile(r"x([1-4])(?:\^([0-9]))?\Z")


def parse_form(text: str, expected_degree: int) -> Form:
    """Parse ``text`` with the grammar ``mono ('+' mono)*``; see README.

    ``"0"`` is accepted as the zero form so that rendering round-trips.
    """
    if expected_degree not in MONOMIALS:
        raise DegreeMismatchError(f"expected degree must be 2 or 3, got {expected_degree}")
    s = re.sub(r"\s+", "", text)
    if s == "0":
        return Form.zero(expected_degree)
    if not s:
        raise FormParseError("empty form")
    bits = 0
    for mono in s.split("+"):
        if not mono:
            raise FormParseError(f"empty monomial in {text!r}")
        e = [0, 0, 0, 0]
        for factor in mono.split("*"):
            m = _FACTOR.match(factor)
            if not m:
                if re.match(r"x[0-9]+", factor):
                    raise FormParseError(f"unknown variable in factor {factor!r}")
                raise FormParseError(f"bad factor {factor!r} in {text!r}")
            e[int(m.group(1)) - 1] += int(m.group(2) or 1)
        if sum(e) != expected_degree:
            raise DegreeMismatchError(
                f"monomial {mono!r} has degree {sum(e)}, expected {expected_degree}"
            )
        bits ^= 1 << MONOMIAL_INDEX[expected_degree][tuple(e)]
    return Form(expected_degree, bits)


def parse_form_any(text: str) -> Form:
    """Parse a form whose degree is read off its first monomial."""
    s = re.sub(r"\s+", "", text)
    first = s.split("+")[0]
    deg = 0
    for factor in first.split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise FormParseError(f"bad factor {factor!r} in {text!r}")
        deg += int(m.group(2) or 1)
    return parse_form(text, deg)


def render_monomial(e: Sequence[int]) -> str:
    parts = []
    for v, n in enumerate(e, start=1):
        if n == 1:
            parts.append(f"x{v}")
        elif n > 1:
            parts.append(f"x{v}^{n}")
    return "*".join(parts)


def render(f: Form) -> str:
    if not f.coeffs:
        return "0"
    return "+".join(render_monomial(e) for e in f.terms)


# --- algebra -------------------------------------------------------------------

def square_linear(mask: LinearMask) -> Form:
    """(k1 x1 + ... + k4 x4)^2, which in characteristic 2 is sum k_i x_i^2."""
    exps = []
    for v, b in enumerate(mask):
        if b:
            e = [0, 0, 0, 0]
            e[v] = 2
            exps.append(e)
    return Form.from_monomials(2, exps)


def add_forms(f: Form, g: Form) -> Form:
    if f.degree != g.degree:
        raise DegreeMismatchError(f"cannot add degree {f.degree} and degree {g.degree}")
    return Form(f.degree, f.coeffs ^ g.coeffs)


def evaluate(f: Form, p: Sequence[GFElem]) -> GFElem:
    if len(p) != 4:
        raise ValueError("points have four coordinates")
    ctx = p[0].ctx
    for c in p[1:]:
        if c.ctx != ctx:
            raise FieldMismatchError("coordinates from different fields")
    acc = ctx.zero
    for e in f.terms:
        term = ctx.one
        for c, n in zip(p, e):
            if n:
                term = term * c**n
        acc = acc + term
    return acc


def gradient(f: Form, p: Sequence[GFElem]) -> list[GFElem]:
    """Formal partial derivatives of ``f`` at ``p`` (d x_i^2 / d x_i = 0)."""
    ctx = p[0].ctx
    out = []
    for v in range(4):
        acc = ctx.zero
        for e in f.terms:
            if e[v] % 2 == 0:
                continue
            term = ctx.one
            for j, (c, n) in enumerate(zip(p, e)):
                n = n - 1 if j == v else n
                if n:
                    term = term * c**n
            acc = acc + term
        out.append(acc)
    return out


# --- linear substitution -----------------------------------------------------

@dataclass(frozen=True, order=True)
class GLMatrix:
    """4x4 matrix over F_2 as a 16-bit row-major mask.

    Bit ``15 - (4*r + c)`` holds entry (r, c), so the binary string of the
    mask reads the rows left to right and integer order is lexicographic.
    """

    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < 1 << 16:
            raise ValueError("matrix mask must fit in 16 bits")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> GLMatrix:
        bits = 0
        for r in range(4):
            for c in range(4):
                if rows[r][c] & 1:
                    bits |= 1 << (15 - 4 * r - c)
        return cls(bits)

    @classmethod
    def identity(cls) -> GLMatrix:
        return cls(0x8421)

    def entry(self, r: int, c: int) -> int:
        return (self.bits >> (15 - 4 * r - c)) & 1

    def row(self, r: int) -> int:
        """Row ``r`` as a nibble, column 0 in the high bit."""
        return (self.bits >> (12 - 4 * r)) & 0xF

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.entry(r, c) for c in range(4)) for r in range(4))

    def __matmul__(self, other: GLMatrix) -> GLMatrix:
        rows = [
            [sum(self.entry(r, j) & other.entry(j, c) for j in range(4)) & 1 for c in range(4)]
            for r in range(4)
        ]
        return GLMatrix.from_rows(rows)

    def is_invertible(self) -> bool:
        return _rank_nibbles([self.row(r) for r in range(4)]) == 4

    def inverse(self) -> GLMatrix:
        a = [self.row(r) << 4 | (0x8 >> r) for r in range(4)]
        for col in range(4):
            bit = 0x80 >> col
            piv = next((r for r in range(col, 4) if a[r] & bit), None)
            if piv is None:
                raise SingularMatrixError(f"matrix {self.bits:#06x} is singular")
            a[col], a[piv] = a[piv], a[col]
            for r in range(4):
                if r != col and a[r] & bit:
                    a[r] ^= a[col]
        bits = 0
        for r in range(4):
            bits |= (a[r] & 0xF) << (12 - 4 * r)
        return GLMatrix(bits)

    def apply(self, p: Sequence[GFElem]) -> tuple[GFElem, ...]:
        """M·p for a column vector ``p`` over any GF(2^k)."""
        ctx = p[0].ctx
        out = []
        for r in range(4):
            acc = ctx.zero
            for c in range(4):
                if self.entry(r, c):
                    acc = acc + p[c]
            out.append(acc)
        return tuple(out)

    def __str__(self) -> str:
        return f"{self.bits:016b}"


def _rank_nibbles(rows: list[int]) -> int:
    rows = list(rows)
    rank = 0
    for bit in (8, 4, 2, 1):
        piv = next((i for i in range(rank, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def _poly_mul(a: set, b: set) -> set:
    out: set = set()
    for x in a:
        for y in b:
            out ^= {tuple(i + j for i, j in zip(x, y))}
    return out


def substitute(f: Form, M: GLMatrix) -> Form:
    """f∘M: each x_j replaced by sum_c M[j][c] x_c, expanded mod 2."""
    if not M.is_invertible():
        raise SingularMatrixError(f"matrix {M.bits:#06x} is singular")
    unit = [tuple(int(i == c) for i in range(4)) for c in range(4)]
    linear = [{unit[c] for c in range(4) if M.entry(j, c)} for j in range(4)]
    zero_exp = (0, 0, 0, 0)
    acc: set = set()
    for e in f.terms:
        term = {zero_exp}
        for j, n in enumerate(e):
            for _ in range(n):
                term = _poly_mul(term, linear[j])
        acc ^= term
    return Form.from_monomials(f.degree, acc)


# --- built-in candidate data -------------------------------------------------

CANDIDATE_TEXT = {
    1: (
        "x2^3+x1*x3^2+x4^3+x1^2*x3+x3*x4^2",
        "x1*x2+x3*x4",
    ),
    2: (
        "x2^3+x1*x3^2+x2^2*x3+x2^2*x4+x1^3+x3^2*x4+x1^2*x2+x2*x4^2",
        "x1*x2+x1*x3+x1*x4+x2*x4",
    ),
    3: (
        "x2^2*x3+x1*x4^2+x3^3+x3^2*x4+x1^2*x2+x4^3+x1^2*x3+x3*x4^2",
        "x1*x3+x2*x3+x2*x4+x3*x4",
    ),
    4: (
        "x1^3+x1^2*x3+x1*x4^2+x2^2*x4+x2*x4^2+x3^3+x3*x4^2+x4^3",
        "x1*x4+x2*x3+x3*x4",
    ),
}

# X1X2 + X3X4 + X3^2 + X4^2, the elliptic quadric every reduced case matches.
ELLIPTIC_TEXT = "x1*x2+x3*x4+x3^2+x4^2"


def builtin_candidates() -> dict[int, tuple[Form, Form]]:
    """Map family index i -> (C_i, Q_i)."""
    return {i: (parse_form(c, 3), parse_form(q, 2)) for i, (c, q) in CANDIDATE_TEXT.items()}


def elliptic_quadric() -> Form:
    return parse_form(ELLIPTIC_TEXT, 2)
