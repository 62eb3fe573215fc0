"""Which (q, g) can carry a function field of class number h.

Two exact tests, both on integers only:

* the Weil lower bound ``h >= (sqrt(q) - 1)^(2g)``;
* the sandwich ``h (2g-1) (q^g - 1)/(q - 1) >= N >= q^(2g-1) + 1 - 2g q^((2g-1)/2)``
  on the number N of degree-one places over the degree 2g-1 constant
  field extension.
"""

from __future__ import annotations

from dataclasses import dataclass, field

FEASIBLE = "feasible"
RULED_OUT_WEIL = "ruled_out_weil"
RULED_OUT_RR = "ruled_out_rr"


@dataclass(frozen=True)
class SqrtExpr:
    """The real number A - B*sqrt(q), with A, B >= 0."""

    A: int
    B: int
    q: int

    def __mul__(self, other: SqrtExpr) -> SqrtExpr:
        # (A - B s)(C - D s) = AC + BDq - (AD + BC) s, all parts nonneg
        if self.q != other.q:
            raise ValueError("different radicands")
        return SqrtExpr(
            self.A * other.A + self.B * other.B * self.q,
            self.A * other.B + self.B * other.A,
            self.q,
        )

    def __gt__(self, h: int) -> bool:
        d = self.A - h
        return d > 0 and d * d > self.B * self.B * self.q

    def __float__(self) -> float:
        return self.A - self.B * self.q**0.5


def _check(q: int, g: int, h: int) -> None:
    if not (isinstance(q, int) and q >= 2):
        raise ValueError(f"q must be an integer >= 2, got {q!r}")
    if not (isinstance(g, int) and g >= 1):
        raise ValueError(f"g must be an integer >= 1, got {g!r}")
    if not (isinstance(h, int) and h >= 1):
        raise ValueError(f"h must be an integer >= 1, got {h!r}")


def weil_factor(q: int, g: int) -> SqrtExpr:
    """(sqrt(q) - 1)^(2g) = (q + 1 - 2 sqrt(q))^g."""
    base = SqrtExpr(q + 1, 2, q)
    out = SqrtExpr(1, 0, q)
    for _ in range(g):
        out = out * base
    return out


def weil_lower_bound_exceeds(q: int, g: int, h: int) -> bool:
    """True iff (sqrt(q)-1)^(2g) > h, i.e. (q, g) is impossible for h."""
    _check(q, g, h)
    return weil_factor(q, g) > h


def rr_upper(q: int, g: int, h: int, literal_exponent: bool = False) -> int:
    """h (2g-1) (q^e - 1)/(q - 1) with e = g (or e = q for the literal reading)."""
    e = q if literal_exponent else g
    return h * (2 * g - 1) * ((q**e - 1) // (q - 1))


def weil_count_base(q: int, g: int) -> int:
    return q ** (2 * g - 1) + 1


def rr_weil_feasible(q: int, g: int, h: int, literal_exponent: bool = False) -> bool:
    """Is A >= B - 2g q^((2g-1)/2), with A the upper and B the centre of N?"""
    _check(q, g, h)
    A = rr_upper(q, g, h, literal_exponent)
    B = weil_count_base(q, g)
    if A >= B:
        return True
    return (B - A) ** 2 <= 4 * g * g * q ** (2 * g - 1)


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def verdict(q: int, g: int, h: int, literal_exponent: bool = False) -> str:
    if weil_lower_bound_exceeds(q, g, h):
        return RULED_OUT_WEIL
    if not rr_weil_feasible(q, g, h, literal_exponent):
        return RULED_OUT_RR
    return FEASIBLE


@dataclass
class BoundsReport:
    h: int
    q_cap: int
    g_cap: int
    literal_exponent: bool = False
    verdicts: dict[tuple[int, int], str] = field(default_factory=dict)
    g_max: dict[int, int] = field(default_factory=dict)
    # (q, g) -> (upper bound on N, Weil lower bound centre q^(2g-1)+1)
    sandwich: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)
    # q whose verdicts are not monotone in g inside the cap
    gaps: dict[int, list[int]] = field(default_factory=dict)

    @property
    def feasible(self) -> list[tuple[int, int]]:
        return sorted(qg for qg, v in self.verdicts.items() if v == FEASIBLE)

    @property
    def q_max(self) -> int | None:
        return max(self.g_max) if self.g_max else None

    def to_dict(self) -> dict:
        return {
            "h": self.h,
            "q_cap": self.q_cap,
            "g_cap": self.g_cap,
            "exponent": "q^q (literal)" if self.literal_exponent else "q^g",
            "genus_zero": "always feasible: the rational function field has h = 1",
            "feasible": [list(qg) for qg in self.feasible],
            "g_max": {str(q): g for q, g in sorted(self.g_max.items())},
            "q_max": self.q_max,
            "ruled_out_reasons": {
                f"{q},{g}": v for (q, g), v in sorted(self.verdicts.items()) if v != FEASIBLE
            },
            "non_monotone": {str(q): gs for q, gs in sorted(self.gaps.items())},
            "scope": (
                f"verdicts cover prime powers q <= {self.q_cap} and 1 <= g <= {self.g_cap} only; "
                "nothing is claimed outside these caps"
            ),
        }


def genus_bounds_for_h(
    h: int, q_cap: int = 64, g_cap: int = 64, literal_exponent: bool = False
) -> BoundsReport:
    if h < 1 or q_cap < 2 or g_cap < 1:
        raise ValueError("need h >= 1, q_cap >= 2, g_cap >= 1")
    rep = BoundsReport(h, q_cap, g_cap, literal_exponent)
    for q in range(2, q_cap + 1):
        if not is_prime_power(q):
            continue
        feasible_gs = []
        for g in range(1, g_cap + 1):
            v = verdict(q, g, h, literal_exponent)
            rep.verdicts[(q, g)] = v
            rep.sandwich[(q, g)] = (rr_upper(q, g, h, literal_exponent), weil_count_base(q, g))
            if v == FEASIBLE:
                feasible_gs.append(g)
        if feasible_gs:
            gm = max(feasible_gs)
            rep.g_max[q] = gm
            holes = [g for g in range(1, gm) if g not in feasible_gs]
            if holes:
                rep.gaps[q] = holes
    return rep
