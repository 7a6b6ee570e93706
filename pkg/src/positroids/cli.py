"""
Command line front end.

Exit status: 0 on success, 1 when two computations disagree or a proved
statement fails, 2 on bad input, 3 when a configured size bound is exceeded.
Conjecture outcomes are reported but never change the exit status.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import config
from .diagram import CONJECTURES, pattern_DMw
from .errors import DomainError, ResourceLimitError
from .families import SetFamily, elements, mask
from .oracle import enumerate_bases, pattern_Mw, rank_of, tutte_by_rank
from .perms import (
    all_perms, avoiders_123, avoids_123, bruhat_leq, format_word, g_stat, parse_perm,
)
from .positroid import Q_family, enumerate_Pw
from .tutte import rank_in_Pw, tutte_Pw
from .verify import SUITES, report_ok, run_suite

__all__ = ["main", "build_parser"]

SOURCES = ("positroid", "oracle", "qunion", "diagram")


class Disagreement(Exception):
    pass


def _perm_arg(text: str) -> tuple[int, ...]:
    try:
        return parse_perm(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _set_arg(text: str) -> int:
    parts = [p for p in text.replace(",", " ").replace("{", " ").replace("}", " ").split() if p]
    if not all(p.isdigit() and int(p) > 0 for p in parts):
        raise argparse.ArgumentTypeError(f"malformed subset: {text!r}")
    return mask(int(p) for p in parts)


def _family(w, source: str) -> SetFamily:
    if source == "positroid":
        return enumerate_Pw(w)
    if source == "qunion":
        return enumerate_Pw(w, strategy="qunion")
    if source == "oracle":
        return enumerate_bases(pattern_Mw(w))
    return enumerate_bases(pattern_DMw(w))


def _emit_family(F: SetFamily, fmt: str, out) -> None:
    sets = F.sets()
    if fmt == "json":
        json.dump({"count": len(sets), "bases": [list(s) for s in sets]}, out)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        for s in sets:
            writer.writerow(s)
    else:
        for s in sets:
            out.write("{" + ",".join(map(str, s)) + "}\n")
        out.write(f"count: {len(sets)}\n")


def cmd_bases(args, out) -> int:
    w = args.w
    if args.only_q:
        F = Q_family(w)
    else:
        F = _family(w, args.source)
    # the three descriptions of P_w must agree; DM_w has nothing to agree with
    if args.cross_check and not args.only_q and args.source != "diagram":
        for s in ("positroid", "oracle", "qunion"):
            if _family(w, s) != F:
                raise Disagreement(f"source {args.source} disagrees with {s} for {format_word(w)}")
    _emit_family(F, args.format, out)
    return 0


def cmd_tutte(args, out) -> int:
    w = args.w
    closed = tutte_Pw(w) if args.method in ("closed", "both") else None
    rank = tutte_by_rank(pattern_Mw(w)) if args.method in ("rank", "both") else None
    poly = closed if closed is not None else rank
    if closed is not None and rank is not None and closed != rank:
        raise Disagreement(f"closed form {closed} differs from rank sum {rank}")
    if args.format == "json":
        json.dump({"permutation": format_word(w), "method": args.method,
                   "terms": [list(t) for t in poly.triples()], "text": str(poly)}, out)
        out.write("\n")
    else:
        out.write(f"{poly}\n")
        if args.method == "both":
            out.write("closed form and rank sum agree\n")
    return 0


def cmd_rank(args, out) -> int:
    w, I = args.w, args.subset
    if I >> (2 * len(w)):
        raise DomainError(f"subset {elements(I)} not inside [1, {2 * len(w)}]")
    r = rank_in_Pw(w, I)
    if args.cross_check and r != rank_of(pattern_Mw(w), I):
        raise Disagreement("certificate rank differs from matching rank")
    out.write(f"{r}\n")
    return 0


def cmd_decompose(args, out) -> int:
    w = args.w
    rows = [v for v in avoiders_123(len(w)) if bruhat_leq(w, v)]
    total = 0
    for v in rows:
        Q = Q_family(v)
        total += len(Q)
        out.write(f"{format_word(v)}\t{len(Q)}\t" + " ".join(
            "{" + ",".join(map(str, s)) + "}" for s in Q.sets()) + "\n")
    out.write(f"total: {total}\n")
    return 0


def cmd_counts(args, out) -> int:
    header = ["permutation", "avoids_123", "g", "bases", "diagram_bases"]
    rows = []
    for w in all_perms(args.n):
        rows.append([format_word(w), int(avoids_123(w)), g_stat(w),
                     len(enumerate_Pw(w)), len(enumerate_bases(pattern_DMw(w)))])
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    elif args.format == "json":
        json.dump([dict(zip(header, r)) for r in rows], out)
        out.write("\n")
    else:
        for r in rows:
            out.write("\t".join(map(str, r)) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    which = "all" if args.which in (None, "all") else args.which
    report = run_suite(args.suite, args.n, seed=args.seed, which=which)
    json.dump(report, out, indent=2)
    out.write("\n")
    return 0 if report_ok(report) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="positroids", description=__doc__.strip().splitlines()[0])
    p.add_argument("--config", help="JSON file with size bounds")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bases", help="list the bases of P_w (or DM_w)")
    b.add_argument("w", type=_perm_arg)
    b.add_argument("--source", choices=SOURCES, default="positroid")
    b.add_argument("--only-q", action="store_true", help="only the piece Q_w")
    b.add_argument("--cross-check", action="store_true")
    b.add_argument("--format", choices=("text", "json", "csv"), default="text")
    b.set_defaults(func=cmd_bases)

    t = sub.add_parser("tutte", help="Tutte polynomial of P_w")
    t.add_argument("w", type=_perm_arg)
    t.add_argument("--method", choices=("closed", "rank", "both"), default="closed")
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.set_defaults(func=cmd_tutte)

    r = sub.add_parser("rank", help="rank of a subset in P_w")
    r.add_argument("w", type=_perm_arg)
    r.add_argument("subset", type=_set_arg, help='e.g. "1,4,6"')
    r.add_argument("--cross-check", action="store_true")
    r.set_defaults(func=cmd_rank)

    d = sub.add_parser("decompose", help="pieces Q_v covering P_w")
    d.add_argument("w", type=_perm_arg)
    d.set_defaults(func=cmd_decompose)

    c = sub.add_parser("counts", help="basis counts for every w in S_n")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=("text", "json", "csv"), default="text")
    c.set_defaults(func=cmd_counts)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--which", choices=("all",) + CONJECTURES, default="all")
    v.add_argument("--config", dest="suite_config", help="JSON file with size bounds")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = getattr(args, "suite_config", None) or args.config
    old = config.bounds()
    try:
        if cfg:
            config.set_bounds(config.load_bounds(cfg))
        buf = io.StringIO()
        code = args.func(args, buf)
        out.write(buf.getvalue())
        return code
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Disagreement as exc:
        print(f"disagreement: {exc}", file=sys.stderr)
        return 1
    finally:
        config.set_bounds(old)


if __name__ == "__main__":
    sys.exit(main())
