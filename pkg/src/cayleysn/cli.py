"""Command-line front end.

Every subcommand produces a list of records (plain dicts with a ``kind``
field) and a failure count.  Records are printed either as aligned
``key=value`` lines or, with ``--json``, as one JSON object per line.
The exit status is 0 exactly when the failure count is 0; usage errors
exit with 2.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import schreier as sch
from .charcache import ENV_VAR, CharacterCache
from .constructions import build_annihilator, find_beating_irrep, verify_annihilation
from .errors import DomainError, SizeMismatchError
from .partitions import enumerate_cycle_types, parse_cycle_type
from .records import json_line, to_jsonable
from .spectra import (
    check_eight_theorem,
    check_gap_theorem,
    check_eight_floor,
    check_single_class_gap,
    check_tables23,
    dims_audit,
    eight_max,
    random_normal_element,
    ruling_report,
)
from .table1 import crosscheck


@dataclass
class RunConfig:
    command: str
    workers: int = 1
    json: bool = False
    cache: str | None = None
    eig_tol: float = sch.EIG_TOL
    match_tol: float = sch.MATCH_TOL
    quiet: bool = False


Result = tuple[list[dict], int]


def _progress(cfg: RunConfig, label: str) -> Callable[[int, int], None] | None:
    if cfg.quiet:
        return None
    start = time.monotonic()

    def report(done: int, total: int) -> None:
        elapsed = time.monotonic() - start
        print(f"\r{label}: {done}/{total} tasks, {elapsed:.1f}s", end="", file=sys.stderr)
        if done == total:
            print(file=sys.stderr)

    return report


def _open_cache(cfg: RunConfig) -> CharacterCache | None:
    path = cfg.cache or os.environ.get(ENV_VAR)
    return CharacterCache(path) if path else None


# --------------------------------------------------------------------------
# commands


def cmd_rule(cfg: RunConfig, n: int, cycle_type: str) -> Result:
    mu = parse_cycle_type(cycle_type)
    if mu.n != n:
        raise SizeMismatchError(f"cycle type {mu} has size {mu.n}, not {n}")
    best, arg = ruling_report(n, mu)
    rec = {"kind": "rule", "n": n, "class": mu, "max": best, "argmax": arg}
    if n >= 8:
        emax, earg = eight_max(n, mu)
        rec.update(eight_max=emax, eight_argmax=earg, beats_eight=best > emax)
    return [rec], 0


def cmd_scan(cfg: RunConfig, n_from: int, n_to: int, eight_only: bool = False) -> Result:
    records, failures = [], 0
    if eight_only:
        # cheap listing of the EIGHT_n maximum per class, closed forms only
        for n in range(n_from, n_to + 1):
            for mu in enumerate_cycle_types(n):
                emax, earg = eight_max(n, mu)
                records.append({"kind": "eight", "n": n, "class": mu,
                                "eight_max": emax, "eight_argmax": earg})
        return records, 0
    cache = _open_cache(cfg)
    for n in range(n_from, n_to + 1):
        table = cache.table(n, cfg.workers) if cache else None
        report = check_eight_theorem(n, cfg.workers, _progress(cfg, f"scan n={n}"), table)
        for v in report.violations:
            records.append({"kind": "violation", "n": n, **v.to_record()})
        records.append({"kind": "scan", "n": n, "classes": report.classes_checked,
                        "violations": len(report.violations)})
        failures += len(report.violations)
    if cache:
        cache.save()
    return records, failures


def cmd_audit_dims(cfg: RunConfig, ns: list[int], outside: int, exponent: Fraction) -> Result:
    records, failures = [], 0
    for n in ns:
        audit = dims_audit(n, outside, exponent)
        records.append({"kind": "audit-dims", **audit.to_record()})
        failures += len(audit.failures)
    return records, failures


def cmd_table1_check(cfg: RunConfig, n_from: int, n_to: int) -> Result:
    records, failures = [], 0
    for n in range(n_from, n_to + 1):
        checked, bad = crosscheck(n)
        for fam, mu, got, expected in bad:
            records.append({"kind": "table1-mismatch", "n": n, "family": str(fam),
                            "class": mu, "table": got, "mn": expected})
        records.append({"kind": "table1-check", "n": n, "checked": checked,
                        "mismatches": len(bad)})
        failures += len(bad)
    return records, failures


def cmd_tables23_check(cfg: RunConfig, n: int, max_c1: int | None) -> Result:
    report = check_tables23(n, max_c1)
    records = [{"kind": "tables23-mismatch", "n": n, **m} for m in report.mismatches]
    records += [{"kind": "tables23-unlisted", "n": n, "class": mu} for mu in report.unlisted]
    records.append({
        "kind": "tables23-check", "n": n, "classes": report.classes_checked,
        "mismatches": len(report.mismatches), "unlisted": len(report.unlisted),
        "ambiguous": len(report.ambiguous),
    })
    # report-grade: mismatches are counted in the summary, not failures
    return records, 0


def cmd_gap_check(cfg: RunConfig, n_from: int, n_to: int, samples: int, seed: int) -> Result:
    records, failures = [], 0
    cache = _open_cache(cfg)
    for n in range(n_from, n_to + 1):
        table = cache.table(n, cfg.workers) if cache else None
        report = check_single_class_gap(n, cfg.workers, _progress(cfg, f"gap n={n}"), table)
        for mu, bad in report.violations:
            records.append({"kind": "gap-violation", "n": n, "class": mu, "irreps": bad})
        failures += len(report.violations)
        rng = random.Random(f"{seed}:{n}")
        random_failures = 0
        for i in range(samples):
            sigma = random_normal_element(n, rng)
            gap = check_gap_theorem(sigma)
            if not gap.holds:
                random_failures += 1
                records.append({"kind": "gap-random-violation", "sample": i,
                                "coeffs": sigma.coeffs, **gap.to_record()})
        failures += random_failures
        records.append({"kind": "gap-check", "n": n, "classes": report.classes_checked,
                        "class_violations": len(report.violations), "samples": samples,
                        "sample_violations": random_failures})
    if cache:
        cache.save()
    return records, failures


def cmd_eight_floor(cfg: RunConfig, n_from: int, n_to: int) -> Result:
    records, failures = [], 0
    for n in range(n_from, n_to + 1):
        report = check_eight_floor(n)
        records += [{"kind": "eight-floor-violation", "n": n, **v} for v in report.violations]
        records.append({"kind": "eight-floor", "n": n, "classes": report.classes_checked,
                        "violations": len(report.violations)})
        failures += len(report.violations)
    return records, failures


def cmd_construct(cfg: RunConfig, n: int, k: int, m: int | None) -> Result:
    sigma, spec = build_annihilator(n, k, m)
    annihilation = verify_annihilation(sigma, k)
    beating = find_beating_irrep(sigma, k)
    records = [{"kind": "annihilator", **spec.to_record()}]
    records += [{"kind": "eigenvalue", "irrep": p, "value": v}
                for p, v in annihilation.values.items()]
    records += [{"kind": "beating", "irrep": p, "value": v} for p, v in beating]
    records.append({"kind": "construct", "n": n, "k": k, "m": spec.m,
                    "annihilated": annihilation.ok, "beating": len(beating)})
    return records, int(not annihilation.ok) + int(not beating)


def cmd_schreier(cfg: RunConfig, n: int, example: str, export: str | None) -> Result:
    if example != "cycle-transposition":
        raise DomainError(f"unknown example {example!r}")
    gens = sch.cycle_transposition_set(n)
    att = sch.attribute_blocks(gens, cfg.match_tol)
    ordered_top = max(float(v[0]) for name, v in att.blocks.items() if name != "n" and len(v))
    points_top = float(att.blocks["n-1,1"][0])
    quotient, target = sch.rayleigh_witness(n)
    checks = {
        "ordered_gap": (1 - ordered_top, 1 / (18 * n**3),
                        1 - ordered_top >= 1 / (18 * n**3) - cfg.eig_tol),
        "rayleigh": (quotient, target, abs(quotient / target - 1) <= 0.25),
        "points_scaled_gap": (n**2 * (1 - points_top), 1.0,
                              abs(n**2 * (1 - points_top) - 1) <= 0.25),
        "points_gap_floor": (1 - points_top, 1 / (32 * n**2),
                             1 - points_top >= 1 / (32 * n**2)),
        "not_std": (ordered_top, points_top, "n-1,1" not in att.top_blocks()),
    }
    records = [{"kind": "attribution", **att.to_record()}]
    for name, (value, reference, ok) in checks.items():
        records.append({"kind": "schreier-check", "check": name, "value": float(value),
                        "reference": float(reference), "pass": bool(ok)})
    records.append({"kind": "diameter", "bound": sch.diameter_bound(
        sch.log_factorial(n), 1 - ordered_top)})
    if export:
        out = Path(export)
        out.mkdir(parents=True, exist_ok=True)
        for label, ell, ordered in (("points", 1, True), ("unordered", 2, False),
                                    ("ordered", 2, True)):
            M = sch.action_matrix(gens, ell, ordered)
            sch.write_coordinate(M, out / f"{label}_n{n}.mtx")
            (out / f"{label}_n{n}.csv").write_text(sch.spectrum_csv(sch.spectrum(M)))
    return records, sum(not ok for _, _, ok in checks.values())


def cmd_oracle(cfg: RunConfig, ns: list[int], samples: int, seed: int, transpositions: bool) -> Result:
    records, failures = [], 0
    for n in ns:
        rng = random.Random(f"{seed}:{n}")
        worst = 0.0
        for _ in range(samples):
            if transpositions:
                weights = {(i, j): rng.random() for i in range(1, n + 1)
                           for j in range(i + 1, n + 1)}
                lam, std = sch.transposition_check(sch.transposition_set(n, weights))
                err = abs(lam - std)
            else:
                sigma = random_normal_element(n, rng)
                err = float(max(abs(sch.cayley_oracle(sigma) - sch.normal_spectrum_multiset(sigma))))
            worst = max(worst, err)
        ok = worst <= cfg.match_tol
        failures += not ok
        records.append({"kind": "transpositions" if transpositions else "oracle", "n": n,
                        "samples": samples, "max_error": worst, "pass": ok})
    return records, failures


# --------------------------------------------------------------------------
# argument parsing


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _max_c1(text: str) -> int | None:
    return None if text == "all" else int(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON lines")
    common.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")
    common.add_argument("--cache", help=f"character cache file (default: ${ENV_VAR} if set)")
    common.add_argument("--eig-tol", type=float, default=sch.EIG_TOL)
    common.add_argument("--match-tol", type=float, default=sch.MATCH_TOL)
    common.add_argument("--quiet", action="store_true", help="no progress on stderr")

    parser = argparse.ArgumentParser(prog="cayleysn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rule", parents=[common], help="ruling irreps for one class")
    p.add_argument("n", type=int)
    p.add_argument("cycle_type")

    p = sub.add_parser("scan", parents=[common], help="EIGHT_n scan over a range of n")
    p.add_argument("n_from", type=int)
    p.add_argument("n_to", type=int)
    p.add_argument("--eight-only", action="store_true",
                   help="list the EIGHT_n maximum per class without the full scan")

    p = sub.add_parser("audit-dims", parents=[common], help="dimension lower-bound audit")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--outside", type=int, required=True)
    p.add_argument("--exp", type=_fraction, required=True)

    p = sub.add_parser("table1-check", parents=[common], help="closed forms vs MN")
    p.add_argument("--n-from", type=int, default=1)
    p.add_argument("--n-to", type=int, default=14)

    p = sub.add_parser("tables23-check", parents=[common], help="predicted ruling irreps")
    p.add_argument("--n", type=int, default=30)
    p.add_argument("--max-c1", type=_max_c1, default=1, help="integer or 'all'")

    p = sub.add_parser("gap-check", parents=[common], help="spectral gap versus std")
    p.add_argument("--n-from", type=int, default=17)
    p.add_argument("--n-to", type=int, default=22)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("eight-floor", parents=[common], help="lower bound on the EIGHT_n maximum")
    p.add_argument("--n-from", type=int, default=17)
    p.add_argument("--n-to", type=int, default=40)

    p = sub.add_parser("construct", parents=[common], help="annihilating normal element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int)

    p = sub.add_parser("schreier", parents=[common], help="pair-action spectra")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--example", default="cycle-transposition", choices=["cycle-transposition"])
    p.add_argument("--export", metavar="DIR", help="write .mtx matrices and spectrum CSVs")

    p = sub.add_parser("oracle", parents=[common], help="brute-force Cayley spectra, n <= 6")
    p.add_argument("--n", type=int, nargs="+", default=[4, 5, 6])
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--transpositions", action="store_true", help="random transposition weightings")
    return parser


def _dispatch(cfg: RunConfig, args: argparse.Namespace) -> Result:
    c = args.command
    if c == "rule":
        return cmd_rule(cfg, args.n, args.cycle_type)
    if c == "scan":
        return cmd_scan(cfg, args.n_from, args.n_to, args.eight_only)
    if c == "audit-dims":
        return cmd_audit_dims(cfg, args.n, args.outside, args.exp)
    if c == "table1-check":
        return cmd_table1_check(cfg, args.n_from, args.n_to)
    if c == "tables23-check":
        return cmd_tables23_check(cfg, args.n, args.max_c1)
    if c == "gap-check":
        return cmd_gap_check(cfg, args.n_from, args.n_to, args.samples, args.seed)
    if c == "eight-floor":
        return cmd_eight_floor(cfg, args.n_from, args.n_to)
    if c == "construct":
        return cmd_construct(cfg, args.n, args.k, args.m)
    if c == "schreier":
        return cmd_schreier(cfg, args.n, args.example, args.export)
    if c == "oracle":
        return cmd_oracle(cfg, args.n, args.samples, args.seed, args.transpositions)
    raise AssertionError(c)


def _summary(records: list[dict], failures: int) -> str | None:
    """One-line human summary for the table format."""
    checked = [r for r in records if r["kind"] == "audit-dims"]
    if checked:
        return f"{sum(r['checked'] for r in checked)} checked, {failures} failures"
    return None


def format_table(record: dict) -> str:
    flat = to_jsonable(record)
    kind = flat.pop("kind")
    parts = []
    for key, value in flat.items():
        if isinstance(value, list):
            value = "{" + "; ".join(str(v) for v in value) + "}"
        parts.append(f"{key}={value}")
    return f"{kind:<18} " + " ".join(parts)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(args.command, args.workers, args.json, args.cache,
                    args.eig_tol, args.match_tol, args.quiet)
    try:
        records, failures = _dispatch(cfg, args)
    except (ValueError, DomainError) as exc:
        parser.error(str(exc))
    for rec in records:
        print(json_line(rec) if cfg.json else format_table(rec))
    if not cfg.json:
        line = _summary(records, failures)
        if line:
            print(line)
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
