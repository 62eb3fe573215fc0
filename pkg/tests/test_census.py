import json

import pytest

from classone import census
from classone.census import (
    CaseReport,
    certify_exception,
    check_uniqueness,
    emit_report,
    exception_row,
    load_csv,
    load_report,
    reduced_case_ids,
    run_census,
)
from classone.errors import CertificateError
from classone.forms import LinearMask, parse_form

from .test_quadforms import PAPER_LISTS


@pytest.fixture(scope="module")
def reduced():
    return run_census("reduced")


@pytest.fixture(scope="module")
def full():
    return run_census("full")


def test_reduced_ids_match_paper_lists():
    got = {(c.i, str(c.mask)) for c in reduced_case_ids()}
    want = {(i, m) for i, ms in PAPER_LISTS.items() for m in ms}
    assert got == want and len(got) == 24


def test_reduced_census(reduced):
    assert len(reduced) == 24
    assert sum(r.has_deg_le_3 for r in reduced) == 23
    e = check_uniqueness(reduced)
    assert (e.id.i, str(e.id.mask)) == (2, "1011")
    for r in reduced:
        assert r.has_deg_le_3 == (sum(r.places) > 0) == (r.counts[1] > 0 or r.counts[2] > 0)
    assert [r.id.key for r in reduced] == sorted(r.id.key for r in reduced)


def test_full_census(full, reduced):
    assert len(full) == 64
    assert sum(r.in_reduced_24 for r in full) == 24
    by_id = {r.id.key: r for r in full}
    for r in reduced:
        f = by_id[r.id.key]
        assert (f.counts, f.places, f.has_deg_le_3) == (r.counts, r.places, r.has_deg_le_3)
    check_uniqueness(full)


def test_bad_mode():
    with pytest.raises(ValueError):
        run_census("half")


def test_uniqueness_failures(reduced):
    with pytest.raises(CertificateError) as ei:
        check_uniqueness(reduced[:10])
    assert ei.value.invariant == "reduced_case_count"
    doctored = [CaseReport(r.id, r.in_reduced_24, r.counts, r.places, False) for r in reduced]
    with pytest.raises(CertificateError) as ei:
        check_uniqueness(doctored)
    assert ei.value.invariant == "unique_exception"


def test_certificate(certificate):
    c = certificate
    assert c["counts"][:3] == [0, 0, 0]
    assert c["places"][3] == 1 and c["counts"][3] == 4
    assert c["zeta"]["a"] == [1, -3, 2, 0, 1, 0, 8, -24, 16]
    assert c["h"] == 1
    assert c["predicted_counts"] == c["counts"]
    assert c["functional_equation_checked"] and not c["partial"]
    assert c["jacobian"]["failures"] == []
    assert sum(c["jacobian"]["points_checked"].values()) == sum(c["counts"])
    assert all(ch["passed"] for ch in c["checks"])


def test_partial_certificate():
    rep = certify_exception(max_degree=4)
    assert rep.certificate["partial"]
    assert not rep.certificate["functional_equation_checked"]
    assert rep.certificate["h"] == 1
    with pytest.raises(ValueError):
        certify_exception(max_degree=3)


def test_certificate_rejects_other_curve():
    Q = parse_form("x1*x2+x1*x3+x1*x4+x2*x4+x3^2", 2)
    C = census.builtin_candidates()[2][0]
    with pytest.raises(CertificateError) as ei:
        certify_exception(max_degree=4, forms=(Q, C))
    assert ei.value.invariant == "no_points_over_F2_F4_F8"
    assert ei.value.details["counts"][:3] != [0, 0, 0]


def test_json_round_trip(reduced, certificate, tmp_path):
    rows = list(reduced)
    rows[8] = CaseReport(rows[8].id, True, rows[8].counts, rows[8].places, False, certificate)
    p = tmp_path / "r.json"
    text = emit_report(rows, "json", p)
    assert load_report(p) == rows
    assert load_report(text) == rows
    assert p.read_text() == text


def test_csv_and_table(reduced, tmp_path):
    p = tmp_path / "r.csv"
    emit_report(reduced, "csv", p)
    rows = load_csv(p)
    assert len(rows) == len(json.loads(emit_report(reduced, "json"))) == 24
    assert list(rows[0]) == list(census.TABLE_COLUMNS)
    ex = [r for r in rows if r["i"] == "2" and r["k1k2k3k4"] == "1011"][0]
    assert ex["deg<=3?"] == "no"
    table = emit_report(reduced, "table")
    assert len(table.strip().splitlines()) == 26
    with pytest.raises(ValueError):
        emit_report([], "json")
    with pytest.raises(ValueError):
        emit_report(reduced, "xml")


def test_emit_deterministic(reduced):
    assert emit_report(reduced, "csv") == emit_report(run_census("reduced"), "csv")


def test_exception_row(reduced):
    assert exception_row(reduced).id.mask == LinearMask(1, 0, 1, 1)
