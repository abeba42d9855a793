"""Command-line entry point: ``multizagreb <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from contextlib import contextmanager
from typing import Iterator, Sequence, TextIO

from .domination import gamma_k
from .enumeration import FREE_TREE_CAP, free_trees
from .families import corona, path, star, t_a_nk2, t_nks
from .indices import f_aux, first_zagreb, h_aux, pi1, pi2, second_zagreb
from .transforms import contract_pend, move_pendants
from .tree import Tree, canonical_code, read_trees, write_trees
from .verify import CLAIM_IDS, FAIL, run_verification

log = logging.getLogger("multizagreb")


@contextmanager
def _open_out(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _load(path: str) -> list[tuple[int, Tree]]:
    if path == "-":
        return list(read_trees(sys.stdin))
    with open(path, encoding="utf-8") as fh:
        return list(read_trees(fh))


def _emit_rows(rows: list[dict], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    elif fmt == "csv":
        if rows:
            w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
    else:
        for row in rows:
            out.write(" ".join(f"{key}={value}" for key, value in row.items()) + "\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def compute_row(line: int, tree: Tree, k: int | None) -> dict:
    row: dict = {"line": line, "n": tree.n}
    row["m1"] = str(first_zagreb(tree))
    row["m2"] = str(second_zagreb(tree))
    row["pi1"] = str(pi1(tree)) if tree.n >= 2 else ""
    row["pi2"] = str(pi2(tree)) if tree.n >= 2 else ""
    row["f"] = str(f_aux(tree))
    row["h"] = str(h_aux(tree))
    if k is not None:
        row["k"] = k
        row["gamma"] = gamma_k(tree, k).gamma
    row["code"] = canonical_code(tree).hex()
    return row


def _cmd_compute(args: argparse.Namespace) -> int:
    rows = [compute_row(line, t, args.k) for line, t in _load(args.input)]
    with _open_out(args.out) as out:
        _emit_rows(rows, args.format, out)
    return 0


def _cmd_gamma(args: argparse.Namespace) -> int:
    rows = []
    for line, t in _load(args.input):
        res = gamma_k(t, args.k)
        rows.append(
            {"line": line, "n": t.n, "k": args.k, "gamma": res.gamma, "witness": ",".join(map(str, res.witness))}
        )
    with _open_out(args.out) as out:
        _emit_rows(rows, args.format, out)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if (args.filter_gamma is None) != (args.k is None):
        raise ValueError("--filter-gamma and --k must be given together")
    trees = free_trees(args.n, cap=args.cap)
    if args.filter_gamma is not None:
        trees = (t for t in trees if gamma_k(t, args.k).gamma == args.filter_gamma)
    with _open_out(args.out) as out:
        write_trees(trees, out)
    return 0


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"family {args.name} requires {', '.join(missing)}")


def _cmd_family(args: argparse.Namespace) -> int:
    name = args.name
    if name == "star":
        _need(args, "n")
        trees = [star(args.n)]
    elif name == "path":
        _need(args, "n")
        trees = [path(args.n)]
    elif name == "t_nks":
        _need(args, "n", "k", "s")
        trees = [t_nks(args.n, args.k, args.s)]
    elif name == "t_a_nk2":
        _need(args, "n", "k", "a")
        trees = [t_a_nk2(args.n, args.k, args.a)]
    else:
        _need(args, "k", "input")
        trees = [corona(base, args.k) for _, base in _load(args.input)]
    with _open_out(args.out) as out:
        write_trees(trees, out)
    return 0


def _cmd_transform(args: argparse.Namespace) -> int:
    results = []
    for line, t in _load(args.input):
        try:
            if args.name == "contract":
                results.append(contract_pend(t, args.u, args.v))
            else:
                results.extend(move_pendants(t, args.u, args.v))
        except ValueError as exc:
            raise ValueError(f"line {line}: {exc}") from None
    with _open_out(args.out) as out:
        write_trees(results, out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.claims == "all":
        claims = list(CLAIM_IDS)
    else:
        claims = [c.strip() for c in args.claims.split(",") if c.strip()]
        unknown = [c for c in claims if c not in CLAIM_IDS]
        if unknown:
            raise ValueError(f"unknown claim id(s): {', '.join(unknown)}")
    if args.nmax > FREE_TREE_CAP:
        raise ValueError(f"--nmax exceeds the enumeration cap n <= {FREE_TREE_CAP}")
    report = run_verification(claims, args.nmax, args.kmax, jobs=args.jobs)
    if args.report:
        with _open_out(args.report) as out:
            out.write(report.to_json() if args.format != "csv" else report.to_csv())
    if args.csv:
        with _open_out(args.csv) as out:
            out.write(report.to_csv())
    summary = io.StringIO()
    for c in report.claims:
        summary.write(f"{c.claim:16s} {c.status:24s} checked={c.checked} violations={c.violations}\n")
    sys.stderr.write(summary.getvalue())
    return 1 if any(c.status == FAIL for c in report.claims) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multizagreb", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p: argparse.ArgumentParser, default: str = "text") -> None:
        p.add_argument("--format", choices=("text", "json", "csv"), default=default)

    p = sub.add_parser("compute", help="indices (and gamma_k with --k) for every tree in a file")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=_positive)
    p.add_argument("--out")
    fmt(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("gamma", help="distance-k domination number and a witness set")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--out")
    fmt(p)
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("enumerate", help="all non-isomorphic trees of one order")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--filter-gamma", type=_positive)
    p.add_argument("--k", type=_positive)
    p.add_argument("--cap", type=_positive, default=FREE_TREE_CAP)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("family", help="build a named tree")
    p.add_argument("name", choices=("star", "path", "t_nks", "t_a_nk2", "corona"))
    p.add_argument("--n", type=_positive)
    p.add_argument("--k", type=_positive)
    p.add_argument("--s", type=_positive)
    p.add_argument("--a", type=_positive)
    p.add_argument("--input", help="base trees for corona")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("transform", help="apply contract (T_uv) or move (G', G'') to each tree")
    p.add_argument("name", choices=("contract", "move"))
    p.add_argument("--input", required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("verify", help="exhaustively check the claims and extremal cells")
    p.add_argument("--claims", default="all", help="'all' or a comma-separated list of claim ids")
    p.add_argument("--nmax", type=_positive, default=10)
    p.add_argument("--kmax", type=_positive, default=3)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--csv", help="write the CSV summary here")
    fmt(p, default="json")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
