"""Command-line front end: feasibility checks, enumeration, sweeps, reports.

Subcommands: check, enumerate, unigraphic, family, witness, table1, table2.
Sequences are written as comma-separated integers with optional caret powers
("8,8,5,4^6,3").  Graph output is newline-delimited graph6; reports are JSON
with stable key order.  Long sweeps go through a JSON-lines result cache so
reruns resume (disk layout: one {key, report} object per line).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from multiprocessing import Pool
from pathlib import Path

from . import __version__
from .canon import canonical_form, is_isomorphic
from .enumeration import (
    UNIGRAPHIC,
    UnigraphicReport,
    auto_method,
    enumerate_apex,
    enumerate_auto,
    enumerate_generic,
    feasible_sequences,
    unigraphic_check,
)
from .families import (
    FamilyId,
    ParamOutOfRange,
    RecipeNotApplicable,
    WitnessRecipe,
    parse_family_text,
    realize_family,
    sequence_of,
    witness_pair,
    SIGMA,
    SIGMA_MIN_P,
)
from .graphcore import (
    DegreeSequence,
    Graph,
    SequenceParseError,
    graph6_encode,
    polyhedral_feasible,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2

DEFAULT_CACHE_DIR = ".polyuni-cache"
CACHE_ENV_VAR = "POLYUNI_CACHE_DIR"


def _emit_json(obj: dict, stream=None) -> None:
    print(json.dumps(obj, indent=2), file=stream or sys.stdout)


def to_dot(named_graphs: list[tuple[str, Graph]]) -> str:
    """Presentational DOT text for one or more graphs."""
    blocks = []
    for name, g in named_graphs:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(g.p)]
        lines += [f"  {u} -- {v};" for u, v in g.edges()]
        lines.append("}")
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + "\n"


# ---------------------------------------------------------------------------
# Result cache
# ---------------------------------------------------------------------------

class ResultCache:
    """JSON-lines cache of UnigraphicReport dicts, keyed by inputs + version.

    Warm lookups return the stored report verbatim, so cold and warm sweeps
    serialize byte-identically.
    """

    def __init__(self, directory: str | None):
        if directory is None:
            directory = os.environ.get(CACHE_ENV_VAR, DEFAULT_CACHE_DIR)
        self.path = Path(directory) / "results.jsonl"
        self._entries: dict[str, dict] = {}
        self.hits = 0
        if self.path.exists():
            with self.path.open() as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    obj = json.loads(line)
                    self._entries[obj["key"]] = obj["report"]

    @staticmethod
    def key(s: DegreeSequence, method: str, limit: int | None) -> str:
        return f"{s.text()}|{method}|limit={limit}|v{__version__}"

    def get(self, key: str) -> dict | None:
        report = self._entries.get(key)
        if report is not None:
            self.hits += 1
        return report

    def put(self, key: str, report: dict) -> None:
        if key in self._entries:
            return
        self._entries[key] = report
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps({"key": key, "report": report}) + "\n")


def _checked_unigraphic(args: tuple[str, int | None]) -> dict:
    """Worker: one sequence's unigraphic report as a JSON dict."""
    text, limit = args
    s = DegreeSequence.from_text(text)
    return unigraphic_check(s, limit=limit or 2).to_json_dict()


def _full_count(text: str) -> dict:
    """Worker: full realization count for one sequence."""
    s = DegreeSequence.from_text(text)
    graphs = enumerate_auto(s)
    return {
        "sequence": s.text(),
        "count": len(graphs),
        "canonical_codes": [canonical_form(g).text for g in graphs],
    }


def _map_jobs(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with Pool(processes=jobs) as pool:
        return pool.map(fn, items)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_check(args: argparse.Namespace) -> int:
    try:
        s = DegreeSequence.from_text(args.sequence)
    except SequenceParseError as exc:
        _emit_json({"error": str(exc)}, sys.stderr)
        return EXIT_INPUT_ERROR
    report = polyhedral_feasible(s)
    out = {"sequence": s.text(), "p": s.p}
    out.update(report.to_json_dict())
    _emit_json(out)
    return EXIT_OK if report.polyhedral_necessary else EXIT_NEGATIVE


def cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        s = DegreeSequence.from_text(args.sequence)
    except SequenceParseError as exc:
        _emit_json({"error": str(exc)}, sys.stderr)
        return EXIT_INPUT_ERROR
    if args.method == "generic":
        graphs = enumerate_generic(s, limit=args.limit)
    elif args.method == "apex":
        graphs = enumerate_apex(s, limit=args.limit)
    else:
        graphs = enumerate_auto(s, limit=args.limit)
    lines = [graph6_encode(g).decode("ascii") for g in graphs]
    summary = {
        "sequence": s.text(),
        "method": args.method,
        "count": len(graphs),
        "truncated": args.limit is not None and len(graphs) >= args.limit,
    }
    if args.out:
        Path(args.out).write_text("".join(line + "\n" for line in lines))
        _emit_json(summary)
    else:
        for line in lines:
            print(line)
        _emit_json(summary, sys.stderr)
    return EXIT_OK


def cmd_unigraphic(args: argparse.Namespace) -> int:
    try:
        s = DegreeSequence.from_text(args.sequence)
    except SequenceParseError as exc:
        _emit_json({"error": str(exc)}, sys.stderr)
        return EXIT_INPUT_ERROR
    cache = ResultCache(args.cache_dir)
    key = ResultCache.key(s, auto_method(s), 2)
    report = cache.get(key)
    if report is None:
        report = unigraphic_check(s).to_json_dict()
        cache.put(key, report)
    _emit_json(report)
    return EXIT_OK if report["verdict"] == UNIGRAPHIC else EXIT_NEGATIVE


def _resolve_family(text: str) -> tuple[DegreeSequence, FamilyId | None]:
    """Family text, lambda shorthand, or a plain sequence."""
    name = text.split(":", 1)[0].lower()
    if name in ("lambda1", "lambda2"):
        params = dict(
            item.split("=") for item in text.split(":", 1)[1].split(",")
        )
        p = int(params["p"])
        if name == "lambda1":
            return DegreeSequence((p - 2, 5) + (4,) * (p - 3) + (3,)), None
        return DegreeSequence((p - 2, 7, 5) + (4,) * (p - 4) + (3,)), None
    if ":" in text:
        fid = parse_family_text(text)
        return sequence_of(fid), fid
    return DegreeSequence.from_text(text), None


def cmd_family(args: argparse.Namespace) -> int:
    try:
        fid = parse_family_text(args.family)
    except ParamOutOfRange as exc:
        _emit_json({"error": str(exc)}, sys.stderr)
        return EXIT_INPUT_ERROR
    seq = sequence_of(fid)
    graphs: list[tuple[str, Graph]] = []
    if args.emit in ("sequence", "both"):
        print(seq.text())
    if args.emit in ("graph", "both"):
        g = realize_family(fid)
        graphs.append((fid.kind.lower(), g))
        print(graph6_encode(g).decode("ascii"))
    if args.dot and graphs:
        Path(args.dot).write_text(to_dot(graphs))
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    try:
        s, _ = _resolve_family(args.target)
        recipe = WitnessRecipe(args.recipe.upper())
        g1, g2 = witness_pair(s, recipe)
    except (SequenceParseError, ParamOutOfRange) as exc:
        _emit_json({"error": str(exc)}, sys.stderr)
        return EXIT_INPUT_ERROR
    except RecipeNotApplicable as exc:
        _emit_json({"error": str(exc)}, sys.stderr)
        return EXIT_NEGATIVE
    print(graph6_encode(g1).decode("ascii"))
    print(graph6_encode(g2).decode("ascii"))
    _emit_json(
        {
            "sequence": s.text(),
            "recipe": recipe.kind,
            "isomorphic": is_isomorphic(g1, g2),
            "both_polyhedral": True,
        },
        sys.stderr,
    )
    if args.dot:
        Path(args.dot).write_text(to_dot([("w1", g1), ("w2", g2)]))
    return EXIT_OK


def table1_report(
    p_min: int, p_max: int, cache: ResultCache | None = None, jobs: int = 1
) -> dict:
    """Per-order unigraphicity sweep over sequences starting p-2, p-2."""
    per_p: dict[str, list[dict]] = {}
    unigraphic: dict[str, list[str]] = {}
    totals = {"sequences": 0, "unigraphic": 0}
    for p in range(p_min, p_max + 1):
        seqs = feasible_sequences(p, prefix=(p - 2, p - 2))
        missing = []
        reports: dict[str, dict] = {}
        for s in seqs:
            key = ResultCache.key(s, auto_method(s), 2)
            cached = cache.get(key) if cache else None
            if cached is not None:
                reports[s.text()] = cached
            else:
                missing.append(s)
        computed = _map_jobs(
            _checked_unigraphic, [(s.text(), 2) for s in missing], jobs
        )
        for s, rep in zip(missing, computed):
            if cache:
                cache.put(ResultCache.key(s, auto_method(s), 2), rep)
            reports[s.text()] = rep
        ordered = [reports[s.text()] for s in seqs]
        per_p[str(p)] = ordered
        unigraphic[str(p)] = [
            r["sequence"] for r in ordered if r["verdict"] == UNIGRAPHIC
        ]
        totals["sequences"] += len(ordered)
        totals["unigraphic"] += len(unigraphic[str(p)])
    return {
        "p_min": p_min,
        "p_max": p_max,
        "filter": "starts-with-p-2,p-2",
        "per_p": per_p,
        "unigraphic": unigraphic,
        "totals": totals,
        "cache_hits": cache.hits if cache else 0,
    }


def cmd_table1(args: argparse.Namespace) -> int:
    cache = ResultCache(args.cache_dir)
    report = table1_report(args.p_min, args.p_max, cache, args.jobs)
    _emit_json(report)
    return EXIT_OK


def _sigma_values(p: int) -> dict[tuple[int, ...], str]:
    out: dict[tuple[int, ...], str] = {}
    for kind in SIGMA:
        if p >= SIGMA_MIN_P[kind]:
            out[sequence_of(FamilyId(kind, p)).degrees] = kind
    return out


def table2_report(p: int, jobs: int = 1) -> dict:
    """Realization counts per sequence starting p-2, p-2, mapped to families.

    Every polyhedron with two degree-(p-2) vertices and largest entry p-2
    shows up here; for p >= 8 the largest entry cannot exceed p-2 anyway
    (a degree-(p-1) vertex plus two of degree p-2 forces a K3,3).
    """
    seqs = feasible_sequences(p, prefix=(p - 2, p - 2))
    rows = _map_jobs(_full_count, [s.text() for s in seqs], jobs)
    sigma = _sigma_values(p)
    by_family: dict[str, int] = {}
    all_in = True
    out_rows = []
    for row in rows:
        degs = DegreeSequence.from_text(row["sequence"]).degrees
        family = sigma.get(degs)
        realized = row["count"] > 0
        if realized and family is None:
            all_in = False
        if realized and family is not None:
            by_family[family] = by_family.get(family, 0) + row["count"]
        out_rows.append(
            {
                "sequence": row["sequence"],
                "family": family,
                "count": row["count"],
            }
        )
    return {
        "p": p,
        "rows": out_rows,
        "all_realized_in_sigma": all_in,
        "counts_by_family": {k: by_family[k] for k in sorted(by_family)},
    }


def cmd_table2(args: argparse.Namespace) -> int:
    report = table2_report(args.p, args.jobs)
    _emit_json(report)
    return EXIT_OK if report["all_realized_in_sigma"] else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyuni",
        description="Unigraphic degree sequences over 3-connected planar graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="feasibility screen for a sequence")
    c.add_argument("sequence")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("enumerate", help="list all polyhedral realizations")
    e.add_argument("sequence")
    e.add_argument("--method", choices=("auto", "generic", "apex"), default="auto")
    e.add_argument("--limit", type=int, default=None)
    e.add_argument("--out", default=None, help="write graph6 lines to this file")
    e.set_defaults(func=cmd_enumerate)

    u = sub.add_parser("unigraphic", help="decide unigraphicity (exit 0 iff yes)")
    u.add_argument("sequence")
    u.add_argument("--cache-dir", default=None)
    u.set_defaults(func=cmd_unigraphic)

    f = sub.add_parser("family", help="emit a named family member")
    f.add_argument("family", help='e.g. "alpha:p=7", "nu:p=15,m=3", "sigma7:p=8"')
    f.add_argument("--emit", choices=("sequence", "graph", "both"), default="both")
    f.add_argument("--dot", default=None, help="write DOT to this file")
    f.set_defaults(func=cmd_family)

    w = sub.add_parser("witness", help="two non-isomorphic realizations")
    w.add_argument("target", help="sequence, family text, or lambda1/lambda2:p=N")
    w.add_argument("recipe", help="STAR_SPLIT, TRIANGLE_K_DROP, SIGMA_IJ_MOVE, ...")
    w.add_argument("--dot", default=None)
    w.set_defaults(func=cmd_witness)

    t1 = sub.add_parser("table1", help="unigraphic sweep of p-2,p-2 sequences")
    t1.add_argument("--p-min", type=int, default=6)
    t1.add_argument("--p-max", type=int, default=11)
    t1.add_argument("--cache-dir", default=None)
    t1.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    t1.set_defaults(func=cmd_table1)

    t2 = sub.add_parser("table2", help="family membership of realized sequences")
    t2.add_argument("--p", type=int, required=True)
    t2.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    t2.set_defaults(func=cmd_table2)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
