"""Command-line front end.

    treeideals invariants --height 5
    treeideals betti --graph path.el --json
    treeideals covers --height 2
    treeideals verify --max-height 3

Exit codes: 0 ok, 1 input/parse error, 2 size cap exceeded, 3 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import formulas
from .covers import (
    DEFAULT_CAP,
    census,
    count_maximal_independent_sets_tree,
    maximum_matching_size,
    min_maximal_independent_set_tree,
    vertex_cover_number,
)
from .errors import HeightTooLarge, TreeIdealsError
from .graph import MAX_VERTICES, Graph, is_tree, parse_edge_list, perfect_binary_tree
from .hochster import HOCHSTER_CAP, BettiTable, graded_betti
from .ideal import decomposition_to_json, edge_ideal, primary_decomposition
from .linalg import DEFAULT_PRIME, Field
from .verify import VerifyConfig, iter_checks

EXIT_VERIFY = 3


@dataclass
class RunConfig:
    command: str
    height: int | None
    graph_path: Path | None
    cap: int
    field: Field
    threads: int
    fmt: str
    budget_secs: float | None
    skip_homology: bool

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        fmt = "json" if args.json else "csv" if args.csv else "table"
        fld = Field.rationals() if args.exact else Field(args.field)
        if args.cap < 1 or args.threads < 1:
            raise TreeIdealsError("--cap and --threads must be positive")
        return cls(args.command, getattr(args, "height", None), getattr(args, "graph", None), args.cap, fld,
                   args.threads, fmt, args.budget_secs, args.skip_homology)

    def load(self) -> tuple[Graph | None, int | None]:
        """The input graph (None for perfect trees too big to build) and the height."""
        if self.height is not None:
            if self.height < 0:
                raise TreeIdealsError("height must be nonnegative")
            if formulas.n_vertices(self.height) > MAX_VERTICES:
                return None, self.height
            return perfect_binary_tree(self.height)[0], self.height
        try:
            text = Path(self.graph_path).read_text()
        except OSError as exc:
            raise TreeIdealsError(f"cannot read {self.graph_path}: {exc}") from None
        return parse_edge_list(text), None


def _fmt(v) -> str:
    return "-" if v is None else str(v)


def _emit_rows(rows: list[dict], fmt: str, header: dict, columns: list[str]) -> str:
    if fmt == "json":
        return json.dumps({**header, "rows": rows}, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({c: _fmt(r.get(c)) for c in columns})
        return buf.getvalue().rstrip("\n")
    widths = [max(len(c), *(len(_fmt(r.get(c))) for r in rows)) for c in columns]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(_fmt(r.get(c)).ljust(w) for c, w in zip(columns, widths)).rstrip())
    return "\n".join(lines)


def _betti_or_none(g: Graph, cfg: RunConfig) -> BettiTable | None:
    if cfg.skip_homology or g.n > HOCHSTER_CAP:
        return None
    t = graded_betti(g, cfg.field, workers=cfg.threads, budget_secs=cfg.budget_secs)
    return None if t.partial else t


def _computed_perfect(g: Graph, cfg: RunConfig) -> dict:
    alpha = vertex_cover_number(g)
    q = min_maximal_independent_set_tree(g)
    out = {
        "n_vertices": g.n,
        "n_edges": g.n_edges,
        "n_leaves": sum(1 for v in range(g.n) if g.degree(v) <= 1),
        "alpha": alpha,
        "beta": g.n - alpha,
        "m": count_maximal_independent_sets_tree(g),
        "matching": maximum_matching_size(g),
        "depth": q,
        "pd": g.n - q,
        "last_betti": None,
    }
    t = _betti_or_none(g, cfg)
    if t is not None:
        out["depth"], out["pd"], out["last_betti"] = t.depth(), t.projective_dimension(), t.last_total_betti()
    return out


def cmd_invariants(cfg: RunConfig) -> str:
    g, h = cfg.load()
    if h is not None:
        closed = formulas.record(h).to_dict()
        del closed["h"]
        computed = _computed_perfect(g, cfg) if g is not None else {}
        rows = []
        for name, value in closed.items():
            got = computed.get(name)
            match = "n/a" if got is None or value is None else ("match" if got == value else "MISMATCH")
            rows.append({"invariant": name, "closed": value, "computed": got, "match": match})
        return _emit_rows(rows, cfg.fmt, {"height": h}, ["invariant", "closed", "computed", "match"])

    c = census(g, cfg.cap)
    values = {"n_vertices": g.n, "n_edges": g.n_edges, "alpha": c.alpha, "beta": c.beta, "m": c.m_count,
              "matching": c.matching, "q": c.q}
    t = _betti_or_none(g, cfg)
    if t is not None:
        values.update(depth=t.depth(), pd=t.projective_dimension(), last_betti=t.last_total_betti())
    elif is_tree(g) and c.q is not None:
        values.update(depth=c.q, pd=g.n - c.q)
    rows = [{"invariant": k, "computed": v} for k, v in values.items()]
    header = {"graph": str(cfg.graph_path), "tree": is_tree(g)}
    if c.missing:
        header["missing"] = c.missing
    return _emit_rows(rows, cfg.fmt, header, ["invariant", "computed"])


def cmd_betti(cfg: RunConfig) -> str:
    g, h = cfg.load()
    if g is None:
        raise HeightTooLarge(f"height {h} is beyond graph capacity; only closed forms are available")
    t = graded_betti(g, cfg.field, workers=cfg.threads, budget_secs=cfg.budget_secs)
    if cfg.fmt == "json":
        return t.to_json()
    if cfg.fmt == "csv":
        lines = ["i,j,count"] + [f"{i},{j},{v}" for (i, j), v in sorted(t.entries.items())]
        return "\n".join(lines)
    summary = (f"pd {t.projective_dimension()}  depth {t.depth()}  "
               f"last total Betti {t.last_total_betti()}  over {t.field_name}")
    if t.partial:
        summary += "  [PARTIAL: time budget exhausted]"
    return t.render() + "\n" + summary


def cmd_covers(cfg: RunConfig) -> str:
    g, h = cfg.load()
    if g is None:
        raise HeightTooLarge(f"height {h} is beyond graph capacity")
    comps = primary_decomposition(g, cfg.cap)
    if cfg.fmt == "json":
        return json.dumps({"n": g.n, "ideal": [c.labels() for c in edge_ideal(g).generators],
                           "components": decomposition_to_json(comps)}, indent=2)
    if cfg.fmt == "csv":
        return "\n".join(["component,vertices"] + [f"{k},{' '.join(map(str, c.labels()))}"
                                                    for k, c in enumerate(comps, 1)])
    lines = [f"I(G) = {edge_ideal(g)}", f"{len(comps)} minimal vertex covers / associated primes:"]
    lines += [f"  {c}" for c in comps]
    return "\n".join(lines)


def cmd_verify(cfg: RunConfig, args: argparse.Namespace) -> tuple[str, int]:
    vcfg = VerifyConfig(max_height=args.max_height, random_trees=args.random_trees, max_n=args.max_n,
                        seed=args.seed, cap=cfg.cap, skip_homology=cfg.skip_homology, threads=cfg.threads,
                        budget_secs=cfg.budget_secs, field=cfg.field)
    results = []
    for r in iter_checks(vcfg):
        results.append(r)
        if cfg.fmt == "table":
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<26} {r.detail}", flush=True)
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(json.dumps({"failed": r.name, **r.counterexample}, default=str), file=sys.stderr)
    code = EXIT_VERIFY if failed else 0
    if cfg.fmt == "json":
        return json.dumps({"passed": not failed, "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]}, indent=2), code
    if cfg.fmt == "csv":
        return "\n".join(["check,passed"] + [f"{r.name},{r.passed}" for r in results]), code
    return f"{len(results) - len(failed)}/{len(results)} checks passed", code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="machine-readable output")
    out.add_argument("--csv", action="store_true")
    common.add_argument("--exact", action="store_true", help="homology over the rationals")
    common.add_argument("--field", type=int, default=DEFAULT_PRIME, metavar="P", help="prime for modular ranks")
    common.add_argument("--threads", type=int, default=1, metavar="N")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, metavar="N", help="enumeration vertex cap")
    common.add_argument("--budget-secs", type=float, default=None, metavar="T")
    common.add_argument("--skip-homology", action="store_true")

    parser = argparse.ArgumentParser(prog="treeideals", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [("invariants", "closed-form and computed invariants"),
                           ("betti", "graded Betti table via Hochster's formula"),
                           ("covers", "minimal vertex covers / primary decomposition")]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--height", type=int, metavar="H", help="perfect binary tree of height H")
        src.add_argument("--graph", type=Path, metavar="PATH", help="edge-list file")
    v = sub.add_parser("verify", parents=[common], help="run the cross-verification suites")
    v.add_argument("--max-height", type=int, default=3)
    v.add_argument("--random-trees", type=int, default=100, metavar="K")
    v.add_argument("--max-n", type=int, default=12, metavar="N")
    v.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        if cfg.command == "verify":
            text, code = cmd_verify(cfg, args)
        else:
            text = {"invariants": cmd_invariants, "betti": cmd_betti, "covers": cmd_covers}[cfg.command](cfg)
            code = 0
    except (TreeIdealsError, ValueError) as exc:
        code = getattr(exc, "exit_code", 1)
        print(json.dumps({"error": type(exc).__name__, "message": str(exc), "exit_code": code}), file=sys.stderr)
        return code
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
