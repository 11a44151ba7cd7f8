"""Command-line frontend: ``twistspin {alex,spin,deg,gradedroot,sweep,selftest}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from math import gcd
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .alexander import GroupPresentation, alexander_polynomial, analyze_spin
from .degree import (
    DegreeReport,
    deg_brieskorn,
    deg_brieskorn_closed_form,
    deg_torus_knot,
    deg_twist_roll_spin,
    brieskorn_row,
    lspace_obstruction,
)
from .floer import floer_summary, graded_root, tau_sequence_brieskorn
from .knots import braid_to_presentation, parse_braid, parse_presentation, torus_braid, torus_knot
from .laurent import equal_up_to_units, format_laurent


class DomainError(Exception):
    """Raised for invalid mathematical input; reported with exit code 1."""


def _emit(obj: Any, fmt: str, text: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _thread_count(arg: int | None) -> int:
    if arg is not None:
        return max(1, arg)
    env = os.environ.get("TWISTSPIN_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise DomainError(f"TWISTSPIN_THREADS must be an integer, got {env!r}") from None
    return min(4, os.cpu_count() or 1)


# -- input sources --------------------------------------------------------


def _knot_source(args, need_longitude: bool) -> tuple[GroupPresentation, dict[str, Any]]:
    if args.braid is not None:
        b = parse_braid(args.braid)
        return braid_to_presentation(b), {"braid": str(b)}
    if args.presentation is not None:
        path = Path(args.presentation)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise DomainError(f"cannot read {path}: {exc.strerror}") from None
        return parse_presentation(text), {"presentation": str(path)}
    p, q = args.torus
    if need_longitude:
        torus_knot(p, q)  # validates (p, q)
        return braid_to_presentation(torus_braid(p, q)), {"torus": [p, q], "via": "braid"}
    return torus_knot(p, q)[0], {"torus": [p, q]}


def _add_knot_sources(parser: argparse.ArgumentParser) -> None:
    g = parser.add_mutually_exclusive_group(required=True)
    g.add_argument("--braid", help="braid word, e.g. 'B3: s1 s2^-1 s1 s2^-1'")
    g.add_argument("--presentation", metavar="PATH", help="presentation file")
    g.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"), help="torus knot T(p,q)")


# -- verbs ----------------------------------------------------------------


def cmd_alex(args) -> int:
    pres, inputs = _knot_source(args, need_longitude=False)
    delta = alexander_polynomial(pres)
    out = {
        "invariant": "alexander",
        "inputs": inputs,
        "generators": pres.generator_count,
        "relators": len(pres.relators),
        "alexander": format_laurent(delta),
        "is_unit": len(delta.coeffs) == 1,
    }
    lines = [f"generators: {pres.generator_count}, relators: {len(pres.relators)}", f"Delta(T) = {delta}"]
    if args.torus is not None:
        closed = torus_knot(*args.torus)[1].to_rational()
        agree = equal_up_to_units(delta, closed)
        out["closed_form_agrees"] = agree
        lines.append(f"closed form agrees: {'yes' if agree else 'NO'}")
    _emit(out, args.format, "\n".join(lines))
    return 0


def cmd_spin(args) -> int:
    pres, inputs = _knot_source(args, need_longitude=True)
    rep = analyze_spin(pres, args.m, args.n)
    inputs.update({"m": args.m, "n": args.n})
    out: dict[str, Any] = {
        "invariant": "alexander_ideal",
        "inputs": inputs,
        "alexander": format_laurent(rep.alexander),
        "spun_ideal": None if rep.spun_ideal is None else format_laurent(rep.spun_ideal),
        "inclusion_target": format_laurent(rep.inclusion_target),
        "inclusion_holds": rep.inclusion_holds,
        "notes": list(rep.notes),
    }
    lines = [
        f"Delta_K(T) = {rep.alexander}",
        f"(Delta_K, T^{args.m} - 1) = ({rep.inclusion_target})",
    ]
    if rep.spun_ideal is not None:
        lines.append(f"Alexander ideal of twist-roll-spin: ({rep.spun_ideal})")
        lines.append(f"ideal inclusion: {'holds' if rep.inclusion_holds else 'FAILS'}")
    if args.m != 0:
        out["fiber_rational_homology_ball"] = rep.fiber_is_qhb
        verdict = "is" if rep.fiber_is_qhb else "is NOT"
        lines.append(f"fiber {verdict} a rational homology ball")
    else:
        out["roll_spin_obstructed"] = rep.roll_obstructed
        if rep.roll_obstructed:
            lines.append("roll-spin does not bound a rational homology ball (Delta_K != 1)")
        else:
            lines.append("roll-spin: no Alexander-module obstruction")
    lines += [f"note: {n}" for n in rep.notes]
    _emit(out, args.format, "\n".join(lines))
    if rep.inclusion_holds is False:
        raise DomainError("ideal inclusion failed; this indicates a bug")
    return 0


def _deg_report(args) -> DegreeReport:
    if args.brieskorn is not None:
        p, q, r = args.brieskorn
        if sorted((p, q)) == [2, 3]:
            if r < 1 or gcd(r, 6) != 1:
                raise DomainError("r must be coprime to 6")
            if r == 1:
                return deg_brieskorn_closed_form(1)
            report = deg_brieskorn(p, q, r)
            closed = deg_brieskorn_closed_form(r)
            if report.value != closed.value:
                raise DomainError(f"graded-root value {report.value} disagrees with closed form {closed.value}")
            return report
        return deg_brieskorn(p, q, r)
    p, q = args.torus
    return deg_torus_knot(p, q)


def cmd_deg(args) -> int:
    report = _deg_report(args)
    if args.m is not None or args.n is not None:
        report = deg_twist_roll_spin(report, args.m or 0, args.n or 0)
    status = lspace_obstruction(report)
    text = [f"|deg| = {report.value}  ({report.method.value})", f"punctured L-space Seifert solid: {status.value}"]
    text += [f"warning: {w}" for w in report.warnings]
    _emit(report.to_json(), args.format, "\n".join(text))
    return 0


def cmd_gradedroot(args) -> int:
    p, q, r = args.brieskorn
    tau = tau_sequence_brieskorn(p, q, r)
    root = graded_root(tau)
    summary = floer_summary(root)
    summ = {
        "total_rank": summary.total_rank,
        "z2_grading": summary.z2_grading,
        "anti_invariant_euler": summary.anti_invariant_euler,
        "warnings": list(summary.warnings),
    }
    out: dict[str, Any] = {"brieskorn": [p, q, r], "summary": summ}
    lines = [
        f"Sigma({p},{q},{r}): {len(root.vertices)} vertices, {len(root.leaves())} leaves",
        f"reduced rank {summary.total_rank} ({summary.z2_grading}), chi^-iota = {summary.anti_invariant_euler}",
    ]
    if args.dump:
        out["vertices"] = root.to_json()
        lines.append("id grading parent involution_image")
        lines += [f"{v['id']} {v['grading']} {v['parent']} {v['involution_image']}" for v in out["vertices"]]
    lines += [f"warning: {w}" for w in summary.warnings]
    _emit(out, args.format or ("json" if args.dump else "text"), "\n".join(lines))
    return 0


def sweep_rows(r_max: int, include_trivial: bool = False, threads: int = 1) -> list[dict[str, Any]]:
    rs = [r for r in range(1 if include_trivial else 5, r_max + 1) if gcd(r, 6) == 1]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(brieskorn_row, rs))


def _table(rows: Sequence[dict[str, Any]], cols: Sequence[str]) -> str:
    cells = [[str(c) for c in cols]] + [[str(row[c]) for c in cols] for row in rows]
    widths = [max(len(line[k]) for line in cells) for k in range(len(cols))]
    return "\n".join("  ".join(v.rjust(w) for v, w in zip(line, widths)) for line in cells)


def cmd_sweep(args) -> int:
    rows = sweep_rows(args.r_max, args.include_trivial, _thread_count(args.threads))
    cols = ["r", "rank", "grading", "chi_anti", "deg_chi", "deg_closed", "agree"]
    text = _table(rows, cols) if rows else "(no rows)"
    _emit({"family": args.family, "rows": rows}, args.format, text)
    return 0 if all(r["agree"] for r in rows) else 1


def selftest_checks(r_max: int = 97) -> list[tuple[str, bool]]:
    checks = []
    for row in sweep_rows(r_max):
        r = row["r"]
        k = (r + 5) // 12 if r % 12 in (7, 11) else r // 12
        want = 2 * k if r % 12 in (1, 5) else 2 * k - 1
        checks.append((f"rank Sigma(2,3,{r}) = {want}", row["rank"] == want))
        checks.append((f"|deg| K(2,3,{r}) graded root = closed form", row["agree"]))
    for p in range(3, 12, 2):
        for q in range(p + 2, 12, 2):
            if gcd(p, q) == 1:
                checks.append((f"|deg| T({p},{q}) = 1", deg_torus_knot(p, q).value == 1))
    trefoil = braid_to_presentation(parse_braid("B2: s1^3"))
    checks.append(("Delta(trefoil) = T^2 - T + 1", format_laurent(alexander_polynomial(trefoil)) == "1 - T + T^2"))
    return checks


def cmd_selftest(args) -> int:
    checks = selftest_checks(args.r_max)
    failed = [name for name, ok in checks if not ok]
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in checks]
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    _emit({"checks": [{"name": n, "ok": ok} for n, ok in checks], "failed": failed}, args.format, "\n".join(lines))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistspin", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("alex", help="Alexander polynomial of a knot")
    _add_knot_sources(p)
    common(p)
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("spin", help="Alexander ideal and rational-ball test for a twist-roll-spin")
    _add_knot_sources(p)
    p.add_argument("--m", type=int, required=True, help="number of twists")
    p.add_argument("--n", type=int, default=0, help="number of rolls")
    common(p)
    p.set_defaults(func=cmd_spin)

    p = sub.add_parser("deg", help="|deg| and the punctured L-space obstruction")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--brieskorn", nargs=3, type=int, metavar=("P", "Q", "R"))
    g.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"))
    p.add_argument("--m", type=int, help="transfer to tau^m rho^n K (needs m + 2n = 2 mod 4)")
    p.add_argument("--n", type=int)
    common(p)
    p.set_defaults(func=cmd_deg)

    p = sub.add_parser("gradedroot", help="graded root of a Brieskorn sphere")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--brieskorn", nargs=3, type=int, metavar=("P", "Q", "R"))
    p.add_argument("--dump", action="store_true", help="emit the vertex list as JSON")
    p.add_argument("--format", choices=("text", "json"), default=None)
    p.set_defaults(func=cmd_gradedroot)

    p = sub.add_parser("sweep", help="family table for Sigma(2,3,r)")
    p.add_argument("--family", choices=("brieskorn_23",), default="brieskorn_23")
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--include-trivial", action="store_true", help="include r = 1 (the unknot)")
    p.add_argument("--threads", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="calibration and acceptance checks")
    p.add_argument("--r-max", type=int, default=97)
    common(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DomainError, ValueError) as exc:
        sys.stderr.write(f"twistspin: error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
