"""Rational points of form systems in P^3 over GF(2^k).

Two routes compute the same counts:

* :func:`enumerate_proj_points` + :func:`count_points_naive` walk ``GFElem``
  points one by one.  Slow, used as the reference in tests.
* :func:`count_points` / :func:`find_points` sweep the same chart order with
  numpy, evaluating every monomial as ``exp[sum of logs]`` over a whole
  (x3, x4) grid at once.  Work is split into independent *units* (one chart
  slice each) so it can be spread over processes and summed.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import DataCorruptionError, FieldRangeError, NotOnVarietyError
from .forms import Form, gradient
from .gfield import MAX_DEGREE, FieldCtx, GFElem, make_field

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[GFElem, GFElem, GFElem, GFElem]

    def __post_init__(self):
        lead = next((c for c in self.coords if c), None)
        if lead is None:
            raise ValueError("(0,0,0,0) is not a projective point")
        if lead.bits != 1:
            raise ValueError("leading nonzero coordinate must be 1; use ProjPoint.normalize")

    @classmethod
    def normalize(cls, coords: Sequence[GFElem]) -> ProjPoint:
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("(0,0,0,0) is not a projective point")
        s = lead.inverse()
        return cls(tuple(c * s for c in coords))

    @classmethod
    def from_bits(cls, bits: Sequence[int], k: int) -> ProjPoint:
        ctx = make_field(k)
        return cls(tuple(GFElem(b, ctx) for b in bits))

    @property
    def ctx(self) -> FieldCtx:
        return self.coords[0].ctx

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(c.bits for c in self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return 4


@dataclass(frozen=True)
class PointCounts:
    q: int
    counts: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        """N_k, 1-based."""
        if k < 1:
            raise IndexError(k)
        return self.counts[k - 1]

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class ClosedPointCounts:
    places: tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        if d < 1:
            raise IndexError(d)
        return self.places[d - 1]

    def __len__(self) -> int:
        return len(self.places)


def _check_degree(k: int) -> None:
    if not isinstance(k, int) or not 1 <= k <= MAX_DEGREE:
        raise FieldRangeError(f"field degree must be in 1..{MAX_DEGREE}, got {k!r}")


def proj_space_size(k: int) -> int:
    n = 1 << k
    return n**3 + n**2 + n + 1


# --- scalar route --------------------------------------------------------------

def enumerate_proj_points(k: int) -> Iterator[ProjPoint]:
    """Every point of P^3(GF(2^k)) once, chart by chart (x1=1 first)."""
    _check_degree(k)
    ctx = make_field(k)
    n = ctx.order
    els = [GFElem(b, ctx) for b in range(n)]
    z, o = els[0], els[1]
    for a in els:
        for b in els:
            for c in els:
                yield ProjPoint((o, a, b, c))
    for b in els:
        for c in els:
            yield ProjPoint((z, o, b, c))
    for c in els:
        yield ProjPoint((z, z, o, c))
    yield ProjPoint((z, z, z, o))


def count_points_naive(system: Sequence[Form], k: int) -> int:
    return sum(1 for p in enumerate_proj_points(k) if all(not f(p.coords) for f in system))


# --- vectorized route ----------------------------------------------------------

# A unit is (x1, x2, chart) with x3/x4 ranging over the grid listed by chart:
#   chart 0: x1=1, x2 fixed, x3 and x4 free
#   chart 1: x1=0, x2=1, x3 and x4 free
#   chart 2: x1=x2=0, x3=1, x4 free
#   chart 3: (0,0,0,1)
Unit = tuple[int, int]  # (chart, x2) ; x2 only meaningful for chart 0


def work_units(k: int) -> list[Unit]:
    _check_degree(k)
    n = 1 << k
    return [(0, v) for v in range(n)] + [(1, 0), (2, 0), (3, 0)]


def _unit_coords(unit: Unit, n: int):
    chart, v = unit
    grid = np.arange(n)
    if chart == 0:
        return 1, v, grid, grid
    if chart == 1:
        return 0, 1, grid, grid
    if chart == 2:
        return 0, 0, np.array([1]), grid
    if chart == 3:
        return 0, 0, np.array([0]), np.array([1])
    raise ValueError(f"bad chart {chart}")


def _unit_zero_mask(terms_list, ctx: FieldCtx, unit: Unit):
    x1, x2, x3, x4 = _unit_coords(unit, ctx.order)
    L = ctx.np_log
    E = ctx.np_exp
    l1, l2 = int(L[x1]), int(L[x2])
    L3 = L[x3][:, None]
    L4 = L[x4][None, :]
    # powers of the grid logs, shared by all monomials
    p3 = [np.zeros_like(L3), L3, 2 * L3, 3 * L3]
    p4 = [np.zeros_like(L4), L4, 2 * L4, 3 * L4]
    shape = (len(x3), len(x4))
    mask = np.ones(shape, dtype=bool)
    for terms in terms_list:
        acc = np.zeros(shape, dtype=np.uint16)
        for e1, e2, e3, e4 in terms:
            acc ^= E[(e1 * l1 + e2 * l2) + p3[e3] + p4[e4]]
        mask &= acc == 0
    return x1, x2, x3, x4, mask


def _count_units(k: int, terms_list, units: Sequence[Unit]) -> int:
    ctx = make_field(k)
    total = 0
    for u in units:
        total += int(_unit_zero_mask(terms_list, ctx, u)[-1].sum())
    return total


def _points_units(k: int, terms_list, units: Sequence[Unit]) -> list[tuple[int, int, int, int]]:
    ctx = make_field(k)
    out = []
    for u in units:
        x1, x2, x3, x4, mask = _unit_zero_mask(terms_list, ctx, u)
        for i, j in zip(*np.nonzero(mask)):
            out.append((x1, x2, int(x3[i]), int(x4[j])))
    return out


def count_units(system: Sequence[Form], k: int, units: Sequence[Unit]) -> int:
    """Zeros of ``system`` inside the given chart slices."""
    return _count_units(k, [f.terms for f in system], units)


def _partition(units: list[Unit], width: int) -> list[list[Unit]]:
    return [units[i::width] for i in range(width) if units[i::width]]


def count_points(system: Sequence[Form], k: int, workers: int = 1) -> int:
    """N_k: common zeros of ``system`` in P^3(GF(2^k))."""
    _check_degree(k)
    terms = [f.terms for f in system]
    units = work_units(k)
    if workers <= 1 or k < 5:
        return _count_units(k, terms, units)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_count_units, *zip(*[(k, terms, p) for p in _partition(units, workers)]))
        return sum(parts)


def find_points(system: Sequence[Form], k: int, workers: int = 1) -> list[ProjPoint]:
    """Zeros of ``system`` in chart order, as normalized points."""
    _check_degree(k)
    terms = [f.terms for f in system]
    units = work_units(k)
    if workers <= 1 or k < 5:
        raw = _points_units(k, terms, units)
    else:
        # contiguous chunks keep chart order after concatenation
        size = -(-len(units) // workers)
        chunks = [units[i : i + size] for i in range(0, len(units), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            raw = [p for part in pool.map(_points_units, *zip(*[(k, terms, c) for c in chunks])) for p in part]
    return [ProjPoint.from_bits(b, k) for b in raw]


def count_sequence(system: Sequence[Form], k_max: int, workers: int = 1, q: int = 2) -> PointCounts:
    counts = []
    for k in range(1, k_max + 1):
        log.info("counting over GF(2^%d)", k)
        counts.append(count_points(system, k, workers=workers))
    return PointCounts(q, tuple(counts))


# --- closed points ---------------------------------------------------------------

def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(n)
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def closed_point_counts(pc: PointCounts) -> ClosedPointCounts:
    """B_d = (1/d) sum_{e|d} mu(d/e) N_e for every d with counts available."""
    places = []
    for d in range(1, len(pc) + 1):
        s = sum(mobius(d // e) * pc[e] for e in _divisors(d))
        if s % d or s < 0:
            raise DataCorruptionError(f"B_{d} = {s}/{d} from counts {pc.counts}")
        places.append(s // d)
    return ClosedPointCounts(tuple(places))


def has_point_of_degree_at_most(system: Sequence[Form], d: int, workers: int = 1) -> bool:
    if d < 1:
        raise ValueError("degree bound must be >= 1")
    places = closed_point_counts(count_sequence(system, d, workers=workers))
    return sum(places.places) > 0


def has_point_small_fields(pc: PointCounts) -> bool:
    """The N_2 > 0 or N_3 > 0 criterion for degree <= 3 places."""
    return pc[2] > 0 or pc[3] > 0


# --- smoothness evidence ---------------------------------------------------------

def jacobian_rank_ok(Q: Form, C: Form, p: Sequence[GFElem]) -> bool:
    """True iff the 2x4 Jacobian of (Q, C) at ``p`` has rank 2."""
    coords = tuple(p)
    if Q(coords) or C(coords):
        raise NotOnVarietyError(f"{[c.bits for c in coords]} is not on the variety")
    gq = gradient(Q, coords)
    gc = gradient(C, coords)
    for i in range(4):
        for j in range(i + 1, 4):
            if gq[i] * gc[j] + gq[j] * gc[i]:
                return True
    return False
