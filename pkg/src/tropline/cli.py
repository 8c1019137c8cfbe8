"""Command-line front end.

Exit status: 0 on success, 1 when a check fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import os
import sys
import time

from . import verify as _verify
from .barvinok_classes import EMPTY, class_dimension, class_intersect, valid_strings
from .canonical_line import canonical_line, face_label
from .complex_gen import build_complex, unrefined_cells
from .errors import TroplineError
from .homology import reduced_homology
from .io import (
    Check,
    RunReport,
    complex_from_json,
    complex_to_json,
    digest,
    dumps,
    fraction_to_json,
    parse_matrix,
    read_text,
)
from .shelling import constant_strings, is_shelling, shelling_top_betti, ternary_string_complex
from .simplicial import f_vector
from .trop_core import barvinok_rank_le2, trop_det, tropical_rank


class UsageError(Exception):
    pass


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows) -> str:
    buf = _io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _need_format(args, *allowed) -> None:
    if args.format not in allowed:
        raise UsageError(f"--format {args.format} is not available for '{args.command}'")


def _load_matrix(path):
    text = read_text(path)
    return parse_matrix(text), digest(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_rank(args) -> RunReport:
    M, dig = _load_matrix(args.path)
    r, rows, cols = tropical_rank(M, with_witness=True)
    le2, pair = barvinok_rank_le2(M)
    results = {
        "shape": [M.d, M.n],
        "tropical_rank": r,
        "witness": {"rows": list(rows), "cols": list(cols)},
        "barvinok_rank_le2": le2,
        "barvinok_pair": list(pair) if pair else None,
    }
    if M.d == M.n:
        det = trop_det(M)
        results["determinant"] = {"value": fraction_to_json(det.value), "singular": det.singular}
    return RunReport(["rank", args.path], dig, results)


def cmd_line(args) -> RunReport:
    M, dig = _load_matrix(args.path)
    line = canonical_line(M)
    results = {"line": line.to_json(), "dot": line.to_dot()}
    if args.label:
        results["label"] = face_label(M).to_json()
    return RunReport(["line", args.path] + (["--label"] if args.label else []), dig, results)


def cmd_complex(args) -> dict:
    K = build_complex(args.d, args.n, args.variant, threads=args.threads)
    out = complex_to_json(K)
    if not args.refined:
        out["facets"] = sorted(list(vs) for _, vs in unrefined_cells(K))
    return out


def _load_complex(path):
    text = read_text(path)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TroplineError(f"invalid JSON: {exc}") from exc
    return complex_from_json(obj)


def cmd_shell(args) -> RunReport:
    n = args.n
    consts = constant_strings(n)
    if args.remove is None:
        removed = consts
    else:
        try:
            symbols = [int(x) for x in args.remove.split(",") if x.strip()]
        except ValueError as exc:
            raise UsageError("--remove takes a comma list drawn from 1,2,3") from exc
        if any(a not in (1, 2, 3) for a in symbols):
            raise UsageError("--remove takes a comma list drawn from 1,2,3")
        removed = [(a,) * n for a in sorted(set(symbols))]
    K, order = ternary_string_complex(n, removed)
    ok, bad = is_shelling(K, order)
    results = {"n": n, "removed": ["".join(map(str, c)) for c in removed], "shelling": ok,
               "first_violation": list(bad) if bad else None}
    report = RunReport(["shell", "--n", str(n)] + (["--remove", args.remove] if args.remove else []),
                       None, results)
    if ok:
        results["top_betti"] = shelling_top_betti(K, order)
    report.checks.append(Check(f"snake order shells n={n}", True, ok, ok))
    return report


def cmd_classes(args):
    if args.action == "intersect":
        if len(args.strings) != 2:
            raise UsageError("classes intersect takes two strings")
        u = class_intersect(*args.strings)
        return {"intersection": "EMPTY" if u is EMPTY else u,
                "dimension": None if u is EMPTY else class_dimension(u)}
    if args.action == "list":
        if args.n is None:
            raise UsageError("classes list needs --n")
        return [{"string": s, "dimension": class_dimension(s)} for s in valid_strings(args.n)]
    if len(args.strings) != 1:
        raise UsageError("classes dim takes one string")
    return {"string": args.strings[0], "dimension": class_dimension(args.strings[0])}


def cmd_verify(args) -> RunReport:
    _verify.THREADS = args.threads
    report = RunReport(["verify", args.scope] + (["--skip-slow"] if args.skip_slow else []))
    stream = args.format == "text" or (args.format == "json" and args.out)

    def emit(c):
        if stream:
            print(c.line(), flush=True)

    report.checks = _verify.run(args.scope, args.skip_slow, emit)
    return report


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to this file")
    common.add_argument("--format", choices=("json", "csv", "dot", "text"), default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker processes for enumeration (default: CPU count)")

    p = argparse.ArgumentParser(prog="tropline", parents=[common],
                                description="Tropical rank-two matrices: lines, complexes, homology.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("rank", parents=[common], help="tropical rank and Barvinok rank <= 2 of a matrix")
    s.add_argument("path")

    s = sub.add_parser("line", parents=[common], help="canonical tropical line through the columns")
    s.add_argument("path")
    s.add_argument("--label", action="store_true", help="also print the face descriptor")

    s = sub.add_parser("complex", parents=[common], help="build T_{d,n} or B_{d,n}")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--variant", choices=("T", "B"), default="T")
    s.add_argument("--refined", action="store_true", help="simplicial refinement (else polyhedral cells)")

    s = sub.add_parser("fvector", parents=[common], help="f-vector of a complex JSON file")
    s.add_argument("path")

    s = sub.add_parser("homology", parents=[common], help="reduced integral homology of a complex JSON file")
    s.add_argument("path")

    s = sub.add_parser("shell", parents=[common], help="check the snake order on ternary strings")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--remove", default=None, help="constant strings to remove, e.g. 1,2,3 (default all)")

    s = sub.add_parser("classes", parents=[common], help="Barvinok class strings for d = 4")
    s.add_argument("action", choices=("intersect", "list", "dim"))
    s.add_argument("strings", nargs="*")
    s.add_argument("--n", type=int, default=None)

    s = sub.add_parser("verify", parents=[common], help="recompute the published numbers")
    s.add_argument("scope", choices=_verify.SCOPES)
    s.add_argument("--skip-slow", action="store_true", help="skip the d = 4 homology and purity runs")
    return p


def _defaults(args) -> None:
    for name, value in (("out", None), ("threads", os.cpu_count() or 1)):
        if not hasattr(args, name):
            setattr(args, name, value)
    if not hasattr(args, "format"):
        args.format = "text" if args.command in ("verify", "shell") else "json"


def _render(args, result) -> tuple:
    """Text to print and the exit status."""
    fmt = args.format
    if isinstance(result, RunReport):
        status = 0 if result.ok else 1
        if args.command == "line" and fmt == "dot":
            return result.results["dot"] + "\n", status
        if fmt == "json":
            return dumps(result.to_json()), status
        if fmt == "text":
            if args.command == "verify":
                return "", status  # lines were streamed
            lines = [c.line() for c in result.checks]
            if result.results and result.results.get("first_violation"):
                lines.append(f"first violating pair: {result.results['first_violation']}")
            return "\n".join(lines) + "\n", status
        if fmt == "csv" and args.command == "rank":
            r = result.results
            return _csv([["tropical_rank", "barvinok_rank_le2"], [r["tropical_rank"], r["barvinok_rank_le2"]]]), status
        raise UsageError(f"--format {fmt} is not available for '{args.command}'")
    if fmt == "json":
        return dumps(result), 0
    if fmt == "csv" and args.command == "fvector":
        return _csv([list(range(len(result))), result]), 0
    if fmt == "csv" and args.command == "homology":
        return _csv([["dim", "betti", "torsion"]]
                    + [[g["dim"], g["betti"], " ".join(map(str, g["torsion"]))] for g in result]), 0
    raise UsageError(f"--format {fmt} is not available for '{args.command}'")


def main(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    _defaults(args)
    start = time.perf_counter()
    try:
        if args.command == "verify" and args.format not in ("text", "json"):
            raise UsageError("verify prints text or json")
        if args.command == "rank":
            result = cmd_rank(args)
        elif args.command == "line":
            result = cmd_line(args)
        elif args.command == "complex":
            result = cmd_complex(args)
        elif args.command == "fvector":
            result = f_vector(_load_complex(args.path))
        elif args.command == "homology":
            result = reduced_homology(_load_complex(args.path)).to_json()
        elif args.command == "shell":
            result = cmd_shell(args)
        elif args.command == "classes":
            result = cmd_classes(args)
        else:
            result = cmd_verify(args)
        text, status = _render(args, result)
    except (UsageError, TroplineError, TypeError) as exc:
        print(f"tropline {args.command}: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, RunReport):
        result.seconds = time.perf_counter() - start
    if text:
        _emit(text, args)
    print(f"[{args.command}: {time.perf_counter() - start:.2f} s]", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
