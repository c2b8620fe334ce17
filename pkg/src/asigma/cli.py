"""Command line front end: spectra, exact independence numbers, family
builders, exhaustive minimizer search backed by a JSON-lines census,
verification suites, and the candidate tables.

Exit statuses: 0 ok, 1 a verification check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from . import __version__
from .enumeration import MAX_GRAPH_N, MAX_TREE_N
from .families import build, candidate_rows, parse_family
from .graphs import graph6_decode
from .independence import independence_number
from .search import DEFAULT_TIE_TOL, SearchSpace, find_minimizers
from .spectral import spectral_radius
from .verification import DEFAULT_SEED, SUITES, run_suite

DEFAULT_STORE = "asigma-census.jsonl"


@dataclass(frozen=True)
class CensusEntry:
    n: int
    alpha: int
    sigma: float
    cls: str
    record: dict
    version: str
    timestamp: str

    @property
    def key(self):
        return (self.n, self.alpha, self.sigma, self.cls)

    def to_json(self):
        return {
            "n": self.n,
            "alpha": self.alpha,
            "sigma": self.sigma,
            "class": self.cls,
            "record": self.record,
            "version": self.version,
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_record(cls, record):
        return cls(
            record["n"],
            record["alpha"],
            record["sigma"],
            record["class"],
            record,
            __version__,
            datetime.now(timezone.utc).isoformat(timespec="seconds"),
        )


def _validate_record(record, where):
    for field in ("n", "alpha", "sigma", "class", "min_lambda", "tie_tol", "minimizers"):
        if field not in record:
            raise ValueError(f"{where}: record missing field {field!r}")
    for code in record["minimizers"]:
        g = graph6_decode(code)
        if g.n != record["n"]:
            raise ValueError(
                f"{where}: stored graph {code!r} has {g.n} vertices, key says {record['n']}"
            )


def census_load(path):
    """Load census entries; corrupt lines raise, duplicate keys keep the
    later record with a warning."""
    by_key: dict = {}
    with open(path, encoding="ascii") as fh:
        for ln, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(
                    f"{path} line {ln}: corrupt or truncated entry ({exc.msg})"
                ) from None
            entry = CensusEntry(
                raw["n"],
                raw["alpha"],
                raw["sigma"],
                raw["class"],
                raw["record"],
                raw.get("version", "unknown"),
                raw.get("timestamp", ""),
            )
            _validate_record(entry.record, f"{path} line {ln}")
            if entry.key in by_key:
                print(
                    f"warning: duplicate census key {entry.key} at line {ln}; later record wins",
                    file=sys.stderr,
                )
            by_key[entry.key] = entry
    return list(by_key.values())


def census_store(entries, path):
    with open(path, "w", encoding="ascii") as fh:
        for entry in entries:
            fh.write(json.dumps(entry.to_json()) + "\n")


def _census_append(entry, path):
    with open(path, "a", encoding="ascii") as fh:
        fh.write(json.dumps(entry.to_json()) + "\n")


def _cmd_spectral(args):
    g = graph6_decode(args.graph6)
    res = spectral_radius(g, args.sigma, tol=args.tol)
    print(f"{res.lam:.15g}")
    return 0


def _cmd_alpha(args):
    print(independence_number(graph6_decode(args.graph6)).alpha)
    return 0


def _cmd_family(args):
    from .graphs import graph6_encode

    print(graph6_encode(build(parse_family(args.spec))))
    return 0


def _cmd_search(args):
    cls = "connected" if args.cls == "graph" else args.cls
    space = SearchSpace(args.n, args.alpha, cls)
    if args.census and os.path.exists(args.census):
        for entry in census_load(args.census):
            if entry.key == (args.n, args.alpha, args.sigma, cls):
                print(json.dumps(entry.record))
                return 0
    rec = find_minimizers(space, args.sigma, tie_tol=args.tie_tol)
    payload = rec.to_json()
    if args.census:
        _census_append(CensusEntry.from_record(payload), args.census)
    print(json.dumps(payload))
    return 0


def _cmd_verify(args):
    seed = DEFAULT_SEED if args.seed is None else args.seed
    print(
        f"suite={args.suite} seed={seed} budget={args.budget} instances=default",
        file=sys.stderr,
    )
    outcomes = run_suite(args.suite, budget=args.budget, seed=args.seed)
    for out in outcomes:
        print(json.dumps(out.to_json()))
    return 1 if any(out.passed is False for out in outcomes) else 0


def _cmd_candidates(args):
    for row in candidate_rows(args.n, refined=args.refined):
        print(
            json.dumps(
                {
                    "shape": row.shape,
                    "counts": list(row.counts),
                    "t": row.t,
                    "lp": row.lp,
                }
            )
        )
    return 0


def _cmd_census(args):
    if args.action == "export":
        entries = census_load(args.store) if os.path.exists(args.store) else []
        census_store(entries, args.path)
        print(f"exported {len(entries)} entries to {args.path}")
        return 0
    incoming = census_load(args.path)
    merged = {e.key: e for e in (census_load(args.store) if os.path.exists(args.store) else [])}
    for entry in incoming:
        merged[entry.key] = entry
    census_store(list(merged.values()), args.store)
    print(f"imported {len(incoming)} entries into {args.store}")
    return 0


def _build_parser():
    top = argparse.ArgumentParser(
        prog="asigma",
        description="A_sigma spectral radius toolkit for graphs with prescribed independence number",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectral", help="spectral radius of a graph6 graph")
    p.add_argument("graph6")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(fn=_cmd_spectral)

    p = sub.add_parser("alpha", help="exact independence number")
    p.add_argument("graph6")
    p.set_defaults(fn=_cmd_alpha)

    p = sub.add_parser("family", help="build a named family, print graph6")
    p.add_argument("spec", help="e.g. path:10, d_graph:11, t2:2,1,1,2")
    p.set_defaults(fn=_cmd_family)

    p = sub.add_parser(
        "search",
        help=f"exhaustive minimizer search (trees to n={MAX_TREE_N}, graphs to n={MAX_GRAPH_N})",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--class", dest="cls", choices=("tree", "graph"), required=True)
    p.add_argument("--tie-tol", type=float, default=DEFAULT_TIE_TOL)
    p.add_argument("--census", help="JSON-lines store; cached keys are reused verbatim")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("verify", help="run a named check suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--budget", type=float)
    p.add_argument("--seed", type=int)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("candidates", help="attachment-count candidate table rows")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--refined", action="store_true")
    p.set_defaults(fn=_cmd_candidates)

    p = sub.add_parser("census", help="export or import the minimizer census")
    p.add_argument("action", choices=("export", "import"))
    p.add_argument("path")
    p.add_argument("--store", default=DEFAULT_STORE)
    p.set_defaults(fn=_cmd_census)

    return top


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
