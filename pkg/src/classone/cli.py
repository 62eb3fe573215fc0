"""Command-line entry point.

Exit codes: 0 success, 1 a certificate or uniqueness check failed,
2 bad arguments or unparsable forms.  Every flag can also be set through a
``CLASSONE_<FLAG>`` environment variable; an explicit flag wins.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bounds, census, points, quadforms, zeta
from .errors import CertificateError, ClassOneError
from .forms import parse_form, parse_form_any
from .gfield import MAX_DEGREE

ENV_PREFIX = "CLASSONE_"
log = logging.getLogger("classone")


class UsageError(Exception):
    pass


@dataclass
class Config:
    max_field_degree: int = census.CERT_DEPTH
    workers: int = 1
    out: Path | None = None
    format: str = "json"

    def __post_init__(self):
        if not 1 <= self.max_field_degree <= MAX_DEGREE:
            raise UsageError(f"max field degree must be in 1..{MAX_DEGREE}")
        if self.workers < 1:
            raise UsageError("width must be >= 1")


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"), default)


def _env_flag(name: str) -> bool:
    return str(_env(name, "")).lower() not in ("", "0", "false", "no")


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)
        log.info("wrote %s", out)


def cmd_bounds(args) -> int:
    if args.class_number < 1 or args.q_cap < 2 or args.g_cap < 1:
        raise UsageError("need --class-number >= 1, --q-cap >= 2, --g-cap >= 1")
    rep = bounds.genus_bounds_for_h(args.class_number, args.q_cap, args.g_cap, args.literal_exponent)
    _write(json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n", args.out)
    log.info("feasible (q, g): %s", rep.feasible)
    return 0


def cmd_census(args) -> int:
    cfg = Config(workers=args.workers, out=args.out, format=args.format)
    reports = census.run_census(args.mode, workers=cfg.workers)
    _write(census.format_report(reports, cfg.format), cfg.out)
    try:
        exc = census.check_uniqueness(reports)
    except CertificateError as err:
        print(f"FAILED {err.invariant}: {err}", file=sys.stderr)
        return 1
    log.info("unique reduced case without places of degree <= 3: %s", exc.id)
    return 0


def cmd_certify(args) -> int:
    cfg = Config(args.max_field_degree, args.workers, args.out)
    if cfg.max_field_degree < census.GENUS:
        raise UsageError(f"certificate needs --max-field-degree >= {census.GENUS}")
    try:
        rep = census.certify_exception(cfg.max_field_degree, workers=cfg.workers)
    except CertificateError as err:
        print(f"FAILED {err.invariant}: {err}", file=sys.stderr)
        if cfg.out is not None:
            body = {"failed": err.invariant, "message": str(err), "certificate": err.details}
            cfg.out.write_text(json.dumps(body, indent=2, sort_keys=True) + "\n")
        return 1
    cert = rep.certificate
    if cfg.out is not None:
        cfg.out.write_text(json.dumps(cert, indent=2, sort_keys=True) + "\n")
    print(f"curve: {cert['quadric']} = {cert['cubic']} = 0")
    print(f"h = {cert['h']}")
    print("zeta numerator a = " + " ".join(map(str, cert["zeta"]["a"])))
    print("N = " + " ".join(map(str, cert["counts"])))
    print("B = " + " ".join(map(str, cert["places"])))
    if cert["partial"]:
        print(f"partial certificate: counted to GF(2^{cfg.max_field_degree}) only, "
              f"deep-count and functional-equation checks skipped")
    return 0


def cmd_count(args) -> int:
    system = [parse_form_any(t) for t in args.form]
    k = args.field_degree
    if not 1 <= k <= MAX_DEGREE:
        raise UsageError(f"--field-degree must be in 1..{MAX_DEGREE}")
    print(points.count_points(system, k, workers=args.workers))
    return 0


def cmd_zeta(args) -> int:
    Q = parse_form(args.quadric, 2)
    C = parse_form(args.cubic, 3)
    g, depth = args.genus, args.depth
    if g < 0 or not g <= depth <= MAX_DEGREE:
        raise UsageError("need 0 <= genus <= depth <= 12")
    pc = points.count_sequence([Q, C], depth, workers=args.workers)
    try:
        Z = zeta.numerator_full(pc, g) if depth >= 2 * g else zeta.numerator_from_counts(pc, g)
        h = zeta.class_number(Z)
    except ClassOneError as err:
        print(f"FAILED: {err}", file=sys.stderr)
        return 1
    print("N = " + " ".join(map(str, pc.counts)))
    print("a = " + " ".join(map(str, Z.a)))
    print(f"h = {h}")
    return 0


def cmd_equiv(args) -> int:
    w = quadforms.are_equivalent(parse_form(args.lhs, 2), parse_form(args.rhs, 2))
    if not w.equivalent:
        print("not equivalent")
    else:
        for row in w.matrix.rows:
            print(" ".join(map(str, row)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    default_workers = int(_env("workers", os.cpu_count() or 1))
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", "--width", type=int, default=default_workers,
                        help="parallel processes for point counting")
    common.add_argument("-q", "--quiet", action="store_true", default=_env_flag("quiet"),
                        help="suppress progress on stderr")

    p = argparse.ArgumentParser(prog="classone", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", parents=[common], help="(q, g) feasibility for a class number")
    b.add_argument("--class-number", type=int, required=_env("class_number") is None,
                   default=int(_env("class_number", 1)))
    b.add_argument("--q-cap", type=int, default=int(_env("q_cap", 64)))
    b.add_argument("--g-cap", type=int, default=int(_env("g_cap", 64)))
    b.add_argument("--literal-exponent", action="store_true", default=_env_flag("literal_exponent"),
                   help="use q^q instead of q^g in the counting bound (comparison only)")
    b.add_argument("--out", type=Path, default=_env("out"))
    b.set_defaults(func=cmd_bounds)

    c = sub.add_parser("census", parents=[common], help="tabulate the candidate curves")
    c.add_argument("--mode", choices=("reduced", "full"), default=_env("mode", "reduced"))
    c.add_argument("--format", choices=("json", "csv", "table"), default=_env("format", "json"))
    c.add_argument("--out", type=Path, default=_env("out"))
    c.set_defaults(func=cmd_census)

    ce = sub.add_parser("certify", parents=[common], help="certify h = 1 for the exception curve")
    ce.add_argument("--max-field-degree", type=int,
                    default=int(_env("max_field_degree", census.CERT_DEPTH)))
    ce.add_argument("--out", type=Path, default=_env("out"))
    ce.set_defaults(func=cmd_certify)

    co = sub.add_parser("count", parents=[common], help="count common zeros in P^3(GF(2^k))")
    co.add_argument("--form", action="append", required=True)
    co.add_argument("--field-degree", type=int, default=int(_env("field_degree", 1)))
    co.set_defaults(func=cmd_count)

    z = sub.add_parser("zeta", parents=[common], help="zeta numerator of Q = C = 0")
    z.add_argument("--quadric", required=True)
    z.add_argument("--cubic", required=True)
    z.add_argument("--genus", type=int, default=int(_env("genus", census.GENUS)))
    z.add_argument("--depth", type=int, default=int(_env("depth", census.CERT_DEPTH)))
    z.set_defaults(func=cmd_zeta)

    e = sub.add_parser("equiv", parents=[common], help="GL_4(F_2) equivalence of two quadrics")
    e.add_argument("--lhs", required=True)
    e.add_argument("--rhs", required=True)
    e.set_defaults(func=cmd_equiv)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        return args.func(args)
    except (UsageError, ClassOneError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
