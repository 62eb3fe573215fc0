"""GL_4(F_2)-equivalence of quaternary quadratic forms over F_2.

The search runs on truth tables.  Over F_2, x^2 = x as functions, so a
quadric sum a_ii x_i^2 + sum a_ij x_i x_j becomes the reduced polynomial
sum a_ii x_i + sum a_ij x_i x_j, and reduced polynomials are determined by
their values on F_2^4.  So two quadrics are equal iff their 16-entry truth
tables are, and f∘M is read off as ``table_f[M v]``.  Every witness found
this way is re-checked with :func:`forms.substitute`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import DegreeMismatchError
from .forms import Form, GLMatrix, LinearMask, add_forms, elliptic_quadric, square_linear, substitute

GL4_ORDER = 20160


def _vec(n: int) -> tuple[int, int, int, int]:
    # v index n: x1 is the high bit
    return ((n >> 3) & 1, (n >> 2) & 1, (n >> 1) & 1, n & 1)


def gl4_elements() -> Iterator[GLMatrix]:
    """Invertible 4x4 matrices over F_2 in increasing mask order."""
    for bits in range(1 << 16):
        M = GLMatrix(bits)
        if M.is_invertible():
            yield M


@lru_cache(maxsize=None)
def _gl4_table() -> tuple[np.ndarray, np.ndarray]:
    """Masks of GL_4(F_2) and, per matrix, the index of M·v for each v."""
    mats = list(gl4_elements())
    masks = np.array([M.bits for M in mats], dtype=np.uint16)
    images = np.zeros((len(mats), 16), dtype=np.uint8)
    for i, M in enumerate(mats):
        rows = [M.row(r) for r in range(4)]
        for v in range(16):
            w = 0
            for r in range(4):
                w = (w << 1) | (bin(rows[r] & v).count("1") & 1)
            images[i, v] = w
    return masks, images


def truth_table(f: Form) -> np.ndarray:
    if f.degree != 2:
        raise DegreeMismatchError("truth tables identify quadrics only")
    out = np.zeros(16, dtype=np.uint8)
    terms = f.terms
    for n in range(16):
        x = _vec(n)
        val = 0
        for e in terms:
            t = 1
            for xi, ei in zip(x, e):
                if ei:
                    t &= xi
            val ^= t
        out[n] = val
    return out


@dataclass(frozen=True)
class EquivalenceWitness:
    """``substitute(lhs, matrix) == rhs`` when ``matrix`` is not None."""

    lhs: Form
    rhs: Form
    matrix: GLMatrix | None

    @property
    def equivalent(self) -> bool:
        return self.matrix is not None

    def verify(self) -> bool:
        return self.matrix is not None and substitute(self.lhs, self.matrix) == self.rhs

    def __bool__(self) -> bool:
        return self.equivalent

    def to_dict(self) -> dict:
        return {
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "equivalent": self.equivalent,
            "matrix": None if self.matrix is None else f"{self.matrix.bits:016b}",
        }


def are_equivalent(f: Form, g: Form) -> EquivalenceWitness:
    """First M in :func:`gl4_elements` order with f∘M = g, if any.

    Identical forms always get the identity as witness.
    """
    if f.degree != 2 or g.degree != 2:
        raise DegreeMismatchError("equivalence is decided for quadrics only")
    if f == g:
        return EquivalenceWitness(f, g, GLMatrix.identity())
    masks, images = _gl4_table()
    tf, tg = truth_table(f), truth_table(g)
    hits = np.flatnonzero((tf[images] == tg).all(axis=1))
    if not len(hits):
        return EquivalenceWitness(f, g, None)
    w = EquivalenceWitness(f, g, GLMatrix(int(masks[hits[0]])))
    if not w.verify():  # pragma: no cover - would mean the table route is wrong
        raise AssertionError(f"witness {w.matrix} fails substitution")
    return w


def are_equivalent_slow(f: Form, g: Form, limit: int | None = None) -> EquivalenceWitness:
    """Same search by explicit substitution; optionally stop after ``limit`` matrices."""
    for i, M in enumerate(gl4_elements()):
        if limit is not None and i >= limit:
            break
        if substitute(f, M) == g:
            return EquivalenceWitness(f, g, M)
    return EquivalenceWitness(f, g, None)


def reduced_mask_list(Q: Form, target: Form | None = None) -> list[LinearMask]:
    """Masks L with Q + L^2 equivalent to the elliptic quadric, in lexicographic order."""
    target = elliptic_quadric() if target is None else target
    return [L for L in LinearMask.all() if are_equivalent(add_forms(Q, square_linear(L)), target)]
