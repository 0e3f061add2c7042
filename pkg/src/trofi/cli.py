"""Command-line front end.

Exit codes: 0 success / verification passed, 1 verification mismatch,
2 invalid input, 3 full-enumeration cap exceeded.  Every subcommand
takes --json for machine-readable output with a schema version field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import asymptotics, words
from .enumeration import FullEnumerationCapError, enumerate_diagrams
from .invariants import bg, bg_cleared, bg_truncated_report
from .polygon import SurfaceClass
from .series import (
    TruncSeries,
    bracket_series,
    eisenstein_e2,
    laurent_to_json,
    partition_series,
    series_to_json,
)

SCHEMA = 1
THREADS_ENV = "TROFI_THREADS"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BAD_INPUT = 2
EXIT_CAP = 3


class InputError(Exception):
    pass


def _surface_from_args(args) -> SurfaceClass:
    spec = args.surface
    if spec is None:
        raise InputError("--surface is required")
    try:
        if spec == "p2":
            if args.cls is None:
                raise InputError("p2 needs --class d")
            return SurfaceClass.p2(int(args.cls))
        if spec.startswith("hirzebruch:"):
            delta = int(spec.split(":", 1)[1])
            if args.cls is None:
                raise InputError("hirzebruch needs --class a,b")
            a, b = (int(t) for t in args.cls.split(","))
            return SurfaceClass.hirzebruch(delta, a, b)
        if spec == "polygon":
            if args.polygon_file is None:
                raise InputError("--surface polygon needs --polygon-file")
            with open(args.polygon_file) as fh:
                return SurfaceClass.from_json(json.load(fh))
    except (ValueError, OSError) as exc:
        raise InputError(str(exc)) from exc
    raise InputError(f"unknown surface {spec!r}")


def _threads(args) -> int:
    if getattr(args, "threads", None) is not None:
        return max(1, args.threads)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2) if args.json else text
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _cmd_invariant(args) -> int:
    sc = _surface_from_args(args)
    t0 = time.monotonic()
    if args.full:
        try:
            laurent = bg(sc, args.genus, full_cap=args.full_cap)
            cleared = bg_cleared(sc, args.genus, full_cap=args.full_cap)
        except FullEnumerationCapError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CAP
        payload = {
            "schema": SCHEMA,
            "surface": sc.to_json(),
            "genus": args.genus,
            "bg": laurent_to_json(laurent),
            "bg_cleared": laurent_to_json(cleared),
            "wall_time": time.monotonic() - t0,
        }
        _emit(args, payload, f"bg = {laurent}\nbg_cleared = {cleared}")
        return EXIT_OK
    if args.mod_x is None:
        raise InputError("either --full or --mod-x N is required")
    rep = bg_truncated_report(sc, args.genus, args.mod_x, args.s, threads=_threads(args))
    payload = {
        "schema": SCHEMA,
        "surface": sc.to_json(),
        "genus": args.genus,
        "s": args.s,
        "truncation": args.mod_x,
        "series": series_to_json(rep.series),
        "hypothesis_warnings": list(rep.warnings),
        "diagram_count": rep.diagram_count,
        "wall_time": time.monotonic() - t0,
    }
    text = str(rep.series)
    for w in rep.warnings:
        text += f"\nwarning: {w}"
    _emit(args, payload, text)
    return EXIT_OK


def _named_series(args) -> TruncSeries:
    n = args.mod_x
    name = args.name
    if name == "p":
        return partition_series(n)
    if name == "e2":
        return eisenstein_e2(n)
    if name == "bracket":
        return bracket_series(args.m, n)
    if name == "p-pow":
        return partition_series(n) ** args.chi
    if name == "ar-genus0":
        return asymptotics.ar_genus0(args.chi, n)
    if name == "ar-genus1":
        if args.gmax is None:
            raise InputError("ar-genus1 needs --gmax")
        return asymptotics.ar_genus1(args.chi, args.gmax, n, args.s)
    raise InputError(f"unknown series {name!r}")


def _cmd_series(args) -> int:
    if args.mod_x is None:
        raise InputError("--mod-x N is required")
    s = _named_series(args)
    payload = {"schema": SCHEMA, "name": args.name, "series": series_to_json(s)}
    _emit(args, payload, f"[{', '.join(str(c) for c in s.coeffs)}]")
    return EXIT_OK


def _cmd_verify(args) -> int:
    sc = _surface_from_args(args)
    report = asymptotics.verify(
        sc,
        args.mode,
        order=args.mod_x,
        max_genus=args.max_genus,
        s=args.s,
        force=args.force,
        threads=_threads(args),
    )
    if args.json:
        _emit(args, report.to_json(), "")
    else:
        lines = [f"mode={report.mode} class[{sc.describe()}] status={report.status}"]
        for u in report.unmet:
            lines.append(f"  threshold not met: {u}")
        for w in report.warnings:
            lines.append(f"  warning: {w}")
        if report.rows:
            lines.append("  genus  x^k  enumerated  closed-form  status")
            for r in report.rows:
                lines.append(
                    f"  {r.genus:5d}  x^{r.index}  {r.enumerated:>10}  "
                    f"{r.expected:>11}  {'ok' if r.ok else 'MISMATCH'}"
                )
        _emit(args, {}, "\n".join(lines))
    return EXIT_MISMATCH if report.status == "fail" else EXIT_OK


def _parse_word_file(path: str, args):
    surface_line = None
    class_line = None
    word_lines: list[str] = []
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("surface:"):
                    surface_line = body.split(":", 1)[1].strip()
                elif body.startswith("class:"):
                    class_line = body.split(":", 1)[1].strip()
                continue
            word_lines.append(line)
    if args.surface is None and surface_line is not None:
        args.surface = surface_line
        args.cls = class_line
    return word_lines


def _cmd_word_roundtrip(args) -> int:
    word_lines = _parse_word_file(args.file, args)
    sc = _surface_from_args(args)
    results = []
    n_bad = 0
    for line in word_lines:
        word = words.parse_word(line)
        rec = words.marked_from_word(word, sc)
        entry = {
            "word": words.format_word(word),
            "codegree": words.word_codegree(word),
            "weights": list(rec.weights),
            "positive_weights": rec.ok,
        }
        if rec.ok:
            back = words.word_from_marked(rec.diagram, rec.marking)
            entry["roundtrip"] = back == word
            entry["diagram_codegree"] = rec.diagram.codegree()
            if not entry["roundtrip"] or rec.diagram.codegree() != entry["codegree"]:
                n_bad += 1
        results.append(entry)
    payload = {"schema": SCHEMA, "surface": sc.to_json(), "words": results}
    ok = sum(1 for r in results if r.get("roundtrip"))
    text = f"OK, {ok} words validated" if n_bad == 0 else f"{n_bad} words FAILED roundtrip"
    _emit(args, payload, text)
    return EXIT_OK if n_bad == 0 else EXIT_MISMATCH


def _cmd_export_diagrams(args) -> int:
    sc = _surface_from_args(args)
    try:
        ds = enumerate_diagrams(
            sc, args.genus, args.codeg_max, full_cap=args.full_cap, threads=_threads(args)
        )
    except FullEnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    sink = open(args.out, "w") if args.out else sys.stdout
    try:
        for d in ds:
            if args.format == "dot":
                sink.write(d.to_dot() + "\n")
            else:
                record = d.to_json()
                record["genus"] = d.genus()
                record["codegree"] = d.codegree()
                record["markings"] = str(d.count_markings())
                sink.write(json.dumps(record) + "\n")
        print(f"exported {len(ds)} diagrams", file=sys.stderr)
    finally:
        if args.out:
            sink.close()
    return EXIT_OK


def _add_surface_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--surface", help="p2 | hirzebruch:<delta> | polygon")
    p.add_argument("--class", dest="cls", help="d for p2, a,b for hirzebruch")
    p.add_argument("--polygon-file", help="polygon JSON file")
    p.add_argument("--threads", type=int, default=None,
                   help=f"worker threads (default: ${THREADS_ENV} or 1)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="trofi",
        description="Tropical refined invariants via exact floor-diagram enumeration",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="compute a refined invariant")
    _add_surface_opts(p)
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--mod-x", type=int, default=None, help="truncation order N")
    p.add_argument("--s", type=int, default=0, help="pairing parameter")
    p.add_argument("--full", action="store_true", help="full Laurent output")
    p.add_argument("--full-cap", type=int, default=30)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("series", help="emit a named series")
    p.add_argument("name", choices=["p", "e2", "bracket", "p-pow", "ar-genus0", "ar-genus1"])
    p.add_argument("--mod-x", type=int, default=None)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--chi", type=int, default=4)
    p.add_argument("--gmax", type=int, default=None)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("verify", help="check a closed form against enumeration")
    p.add_argument("mode", choices=list(asymptotics.VERIFY_MODES))
    _add_surface_opts(p)
    p.add_argument("--mod-x", type=int, default=1, help="x-order for genus modes")
    p.add_argument("--max-genus", type=int, default=2, help="u-order for codegree modes")
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--force", action="store_true",
                   help="compare even when the largeness thresholds fail")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("word-roundtrip", help="validate a file of words")
    p.add_argument("file")
    _add_surface_opts(p)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_word_roundtrip)

    p = sub.add_parser("export-diagrams", help="stream diagrams as JSON lines or DOT")
    _add_surface_opts(p)
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--codeg-max", type=int, default=None)
    p.add_argument("--full-cap", type=int, default=30)
    p.add_argument("--format", choices=["jsonl", "dot"], default="jsonl")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_export_diagrams)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
