"""Zeta numerators from point counts, in exact integer arithmetic.

``P(t) = sum a_n t^n = prod (1 - alpha_i t)`` with ``a_0 = 1`` and
``a_2g = q^g``; the power sums ``p_m = sum alpha_i^m`` equal ``q^m + 1 - N_m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InconsistentCountsError
from .points import PointCounts

PREDICT_CAP = 12


@dataclass(frozen=True)
class ZetaNumerator:
    g: int
    q: int
    a: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != 2 * self.g + 1:
            raise ValueError(f"genus {self.g} needs {2 * self.g + 1} coefficients, got {len(self.a)}")

    def satisfies_functional_equation(self) -> bool:
        g, q, a = self.g, self.q, self.a
        return a[0] == 1 and all(a[2 * g - n] == q ** (g - n) * a[n] for n in range(g + 1))

    def __call__(self, t: int) -> int:
        return sum(c * t**n for n, c in enumerate(self.a))

    def to_dict(self) -> dict:
        return {"g": self.g, "q": self.q, "a": list(self.a)}

    @classmethod
    def from_dict(cls, d: dict) -> ZetaNumerator:
        return cls(int(d["g"]), int(d["q"]), tuple(int(x) for x in d["a"]))


@dataclass(frozen=True)
class PowerSums:
    p: tuple[int, ...]

    def __getitem__(self, m: int) -> int:
        if m < 1:
            raise IndexError(m)
        return self.p[m - 1]

    def __len__(self) -> int:
        return len(self.p)


def power_sums(pc: PointCounts | Sequence[int], q: int | None = None) -> PowerSums:
    if isinstance(pc, PointCounts):
        q = pc.q if q is None else q
        counts = pc.counts
    else:
        counts = tuple(pc)
    if q is None:
        raise ValueError("q is required for a bare count list")
    return PowerSums(tuple(q**m + 1 - n for m, n in enumerate(counts, start=1)))


def _newton(p: PowerSums, upto: int) -> list[int]:
    a = [1]
    for n in range(1, upto + 1):
        s = -sum(p[m] * a[n - m] for m in range(1, n + 1))
        if s % n:
            raise InconsistentCountsError(
                f"Newton step {n}: {s}/{n} is not an integer (power sums {p.p[:n]})"
            )
        a.append(s // n)
    return a


def _as_counts(pc: PointCounts | Sequence[int], q: int) -> PointCounts:
    return pc if isinstance(pc, PointCounts) else PointCounts(q, tuple(pc))


def numerator_from_counts(pc: PointCounts | Sequence[int], g: int, q: int = 2) -> ZetaNumerator:
    """a_0..a_g by Newton's identities from N_1..N_g; the rest by symmetry."""
    pc = _as_counts(pc, q)
    if len(pc) < g:
        raise ValueError(f"need N_1..N_{g}, have {len(pc)} counts")
    a = _newton(power_sums(PointCounts(q, pc.counts[:g]), q), g)
    a += [q**j * a[g - j] for j in range(1, g + 1)]
    return ZetaNumerator(g, q, tuple(a))


def numerator_full(pc: PointCounts | Sequence[int], g: int, q: int = 2) -> ZetaNumerator:
    """All of a_1..a_2g by Newton; then the functional equation is checked."""
    pc = _as_counts(pc, q)
    if len(pc) < 2 * g:
        raise ValueError(f"need N_1..N_{2 * g}, have {len(pc)} counts")
    a = _newton(power_sums(PointCounts(q, pc.counts[: 2 * g]), q), 2 * g)
    Z = ZetaNumerator(g, q, tuple(a))
    if not Z.satisfies_functional_equation():
        bad = [n for n in range(g + 1) if a[2 * g - n] != q ** (g - n) * a[n]]
        raise InconsistentCountsError(
            f"functional equation fails at n={bad} for a={a}"
        )
    return Z


def class_number(Z: ZetaNumerator) -> int:
    from .bounds import weil_lower_bound_exceeds

    h = Z(1)
    if h < 1:
        raise InconsistentCountsError(f"P(1) = {h} < 1")
    if Z.g >= 1 and weil_lower_bound_exceeds(Z.q, Z.g, h):
        raise InconsistentCountsError(f"h = {h} is below (sqrt({Z.q})-1)^{2 * Z.g}")
    return h


def predict_power_sums(Z: ZetaNumerator, k_max: int) -> PowerSums:
    a = list(Z.a)
    p: list[int] = []
    for m in range(1, k_max + 1):
        am = a[m] if m < len(a) else 0
        p.append(-(m * am + sum(p[i - 1] * (a[m - i] if m - i < len(a) else 0) for i in range(1, m))))
    return PowerSums(tuple(p))


def predict_counts(Z: ZetaNumerator, k_max: int) -> PointCounts:
    if not 0 <= k_max <= PREDICT_CAP:
        raise ValueError(f"k_max must be in 0..{PREDICT_CAP}")
    p = predict_power_sums(Z, k_max)
    return PointCounts(Z.q, tuple(Z.q**m + 1 - p[m] for m in range(1, k_max + 1)))


def weil_check(Z: ZetaNumerator) -> bool:
    """(N_k - q^k - 1)^2 <= 4 g^2 q^k for k = 1..2g, on predicted counts."""
    if Z.g == 0:
        return True
    p = predict_power_sums(Z, 2 * Z.g)
    return all(p[k] ** 2 <= 4 * Z.g**2 * Z.q**k for k in range(1, 2 * Z.g + 1))
