"""The 64 candidate curves C_i = Q_i + L^2 = 0 and the class-number-one certificate."""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from . import zeta
from .errors import CertificateError, ClassOneError
from .forms import Form, LinearMask, add_forms, builtin_candidates, square_linear
from .points import (
    PointCounts,
    closed_point_counts,
    count_points,
    find_points,
    has_point_small_fields,
    jacobian_rank_ok,
)
from .quadforms import reduced_mask_list

log = logging.getLogger(__name__)

GENUS = 4
Q_BASE = 2
CERT_DEPTH = 2 * GENUS
EXCEPTION_CASE = (2, LinearMask(1, 0, 1, 1))


@dataclass(frozen=True)
class CaseId:
    i: int
    mask: LinearMask

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.i, tuple(self.mask))

    def __lt__(self, other: CaseId) -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return f"({self.i}, {self.mask})"


@dataclass
class CaseReport:
    id: CaseId
    in_reduced_24: bool
    counts: tuple[int, int, int]
    places: tuple[int, int, int]
    has_deg_le_3: bool
    certificate: dict | None = None

    def to_dict(self) -> dict:
        d = {
            "i": self.id.i,
            "mask": str(self.id.mask),
            "in_reduced_24": self.in_reduced_24,
            "N": list(self.counts),
            "B": list(self.places),
            "has_deg_le_3": self.has_deg_le_3,
        }
        if self.certificate is not None:
            d["certificate"] = self.certificate
        return d

    @classmethod
    def from_dict(cls, d: dict) -> CaseReport:
        return cls(
            CaseId(int(d["i"]), LinearMask.from_string(d["mask"])),
            bool(d["in_reduced_24"]),
            tuple(int(x) for x in d["N"]),
            tuple(int(x) for x in d["B"]),
            bool(d["has_deg_le_3"]),
            d.get("certificate"),
        )


def case_forms(i: int, mask: LinearMask) -> tuple[Form, Form]:
    """(quadric, cubic) cutting out candidate (i, mask)."""
    C, Q = builtin_candidates()[i]
    return add_forms(Q, square_linear(mask)), C


def exception_forms() -> tuple[Form, Form]:
    return case_forms(*EXCEPTION_CASE)


def reduced_case_ids() -> list[CaseId]:
    out = []
    for i, (_, Q) in builtin_candidates().items():
        out.extend(CaseId(i, L) for L in reduced_mask_list(Q))
    return sorted(out)


def census_case(cid: CaseId, in_reduced: bool, workers: int = 1) -> CaseReport:
    Q, C = case_forms(cid.i, cid.mask)
    pc = PointCounts(Q_BASE, tuple(count_points([Q, C], k, workers=workers) for k in (1, 2, 3)))
    places = closed_point_counts(pc).places
    deg3 = sum(places) > 0
    if deg3 != has_point_small_fields(pc):  # pragma: no cover - both criteria are equivalent
        raise AssertionError(f"degree criteria disagree on {cid}: N={pc.counts}")
    return CaseReport(cid, in_reduced, pc.counts, places, deg3)


def run_census(mode: str = "reduced", workers: int = 1) -> list[CaseReport]:
    if mode not in ("reduced", "full"):
        raise ValueError(f"mode must be 'reduced' or 'full', got {mode!r}")
    reduced = {c.key for c in reduced_case_ids()}
    if mode == "reduced":
        ids = sorted(CaseId(i, LinearMask(*m)) for i, m in reduced)
    else:
        ids = sorted(CaseId(i, L) for i in builtin_candidates() for L in LinearMask.all())
    reports = []
    for cid in ids:
        log.info("census case %s", cid)
        reports.append(census_case(cid, cid.key in reduced, workers=workers))
    return reports


def check_uniqueness(reports: Sequence[CaseReport]) -> CaseReport:
    """The single reduced case without places of degree <= 3."""
    reduced = [r for r in reports if r.in_reduced_24]
    if len(reduced) != 24:
        raise CertificateError("reduced_case_count", f"expected 24 reduced cases, got {len(reduced)}")
    bare = [r for r in reduced if not r.has_deg_le_3]
    if len(bare) != 1:
        raise CertificateError(
            "unique_exception",
            f"expected exactly one reduced case without degree <= 3 places, got {[str(r.id) for r in bare]}",
        )
    return bare[0]


# --- certificate -----------------------------------------------------------------

def certify_exception(
    max_degree: int = CERT_DEPTH,
    workers: int = 1,
    forms: tuple[Form, Form] | None = None,
) -> CaseReport:
    """Recompute every number behind h = 1 for the exception curve."""
    if not GENUS <= max_degree <= 12:
        raise ValueError(f"certificate depth must be in {GENUS}..12, got {max_degree}")
    Q, C = exception_forms() if forms is None else forms
    cert: dict = {
        "case": {"i": EXCEPTION_CASE[0], "mask": str(EXCEPTION_CASE[1])},
        "quadric": str(Q),
        "cubic": str(C),
        "genus": GENUS,
        "q": Q_BASE,
        "max_field_degree": max_degree,
        "partial": max_degree < CERT_DEPTH,
        "checks": [],
    }

    def check(name: str, ok: bool, message: str) -> None:
        cert["checks"].append({"name": name, "passed": bool(ok)})
        if not ok:
            raise CertificateError(name, message, cert)

    points = {}
    for k in range(1, max_degree + 1):
        log.info("certificate: enumerating over GF(2^%d)", k)
        points[k] = find_points([Q, C], k, workers=workers)
    pc = PointCounts(Q_BASE, tuple(len(points[k]) for k in range(1, max_degree + 1)))
    cert["counts"] = list(pc.counts)
    try:
        places = closed_point_counts(pc).places
    except ClassOneError as exc:
        check("place_counts_integral", False, str(exc))
    cert["places"] = list(places)

    check("no_points_over_F2_F4_F8", pc.counts[:3] == (0, 0, 0), f"N_1..N_3 = {pc.counts[:3]}")
    check("one_place_of_degree_4", places[3] == 1, f"B_4 = {places[3]}")

    try:
        Z = zeta.numerator_from_counts(pc, GENUS, Q_BASE)
    except ClassOneError as exc:
        check("integral_zeta_numerator", False, str(exc))
    cert["zeta"] = Z.to_dict()
    try:
        h = zeta.class_number(Z)
    except ClassOneError as exc:
        check("class_number_positive", False, str(exc))
    cert["h"] = h
    check("class_number_one", h == 1, f"h = P(1) = {h}")

    predicted = zeta.predict_counts(Z, max_degree)
    cert["predicted_counts"] = list(predicted.counts)
    if max_degree > GENUS:
        check(
            "predicted_counts_match",
            predicted.counts == pc.counts,
            f"predicted {predicted.counts[GENUS:]} vs counted {pc.counts[GENUS:]}",
        )
    cert["functional_equation_checked"] = max_degree >= CERT_DEPTH
    if max_degree >= CERT_DEPTH:
        try:
            full = zeta.numerator_full(pc, GENUS, Q_BASE)
            ok, msg = full == Z, f"full-depth numerator {full.a} differs from {Z.a}"
        except ClassOneError as exc:
            ok, msg = False, str(exc)
        check("functional_equation", ok, msg)

    jac = {}
    bad = []
    for k, pts in points.items():
        jac[str(k)] = len(pts)
        bad.extend(p.bits for p in pts if not jacobian_rank_ok(Q, C, p))
    cert["jacobian"] = {"points_checked": jac, "failures": [list(b) for b in bad]}
    check("jacobian_rank_2", not bad, f"{len(bad)} points with rank < 2")

    check("weil_bound", zeta.weil_check(Z), "predicted counts violate |N_k - q^k - 1| <= 2g q^(k/2)")

    cid = CaseId(*EXCEPTION_CASE)
    return CaseReport(
        cid,
        True,
        pc.counts[:3],
        places[:3],
        sum(places[:3]) > 0,
        certificate=cert,
    )


# --- serialization -----------------------------------------------------------------

TABLE_COLUMNS = ("i", "k1k2k3k4", "reduced?", "N1", "N2", "N3", "B1", "B2", "B3", "deg<=3?")


def _row(r: CaseReport) -> list:
    return [
        r.id.i,
        str(r.id.mask),
        "yes" if r.in_reduced_24 else "no",
        *r.counts,
        *r.places,
        "yes" if r.has_deg_le_3 else "no",
    ]


def format_report(reports: Sequence[CaseReport], fmt: str = "json") -> str:
    if not reports:
        raise ValueError("no reports to emit")
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TABLE_COLUMNS)
        w.writerows(_row(r) for r in reports)
        return buf.getvalue()
    if fmt == "table":
        rows = [list(map(str, TABLE_COLUMNS))] + [list(map(str, _row(r))) for r in reports]
        widths = [max(len(row[c]) for row in rows) for c in range(len(TABLE_COLUMNS))]
        lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit_report(reports: Sequence[CaseReport], fmt: str = "json", path: str | Path | None = None) -> str:
    text = format_report(reports, fmt)
    if path is not None:
        Path(path).write_text(text)
    return text


def load_report(source: str | Path) -> list[CaseReport]:
    """Inverse of the JSON format; accepts a path or the JSON text itself."""
    text = str(source)
    if not text.lstrip().startswith("["):
        text = Path(source).read_text()
    return [CaseReport.from_dict(d) for d in json.loads(text)]


def load_csv(source: str | Path) -> list[dict]:
    text = str(source)
    if "\n" not in text:
        text = Path(source).read_text()
    return list(csv.DictReader(io.StringIO(text)))


def exception_row(reports: Iterable[CaseReport]) -> CaseReport | None:
    i, mask = EXCEPTION_CASE
    return next((r for r in reports if r.id.i == i and r.id.mask == mask), None)
