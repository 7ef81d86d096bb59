"""Command-line surface: generate trees, assign labels, answer queries,
verify schemes, and benchmark.

Exit codes: 0 success, 1 validation failure, 2 verification failure.
The query command never reads the tree file; it works from labels alone.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from . import classic as classic_mod
from .bench import BenchConfig, run_bench, rows_to_csv
from .codec import Label, decide_ancestry, mark_details
from .families import FAMILIES, TreeFamilySpec, generate_tree
from .intervals import SchemeParams, intervals_csv
from .tree import TreeFormatError, parse_parent_array, serialize_parent_array
from .verify import check_label_budget, check_lpo, check_scheme_vs_oracle

LABEL_COLUMNS = ("node_id", "scheme", "family_size", "label_hex")


class CliError(Exception):
    pass


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (CliError, TreeFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treelabel",
        description="Compact ancestry labels for rooted trees.",
    )
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("gen", help="generate a tree from a named family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--size", required=True, type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--path-count", type=int, default=None)
    p.add_argument("--path-length", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("label", help="assign labels to a tree file")
    p.add_argument("--input", required=True)
    p.add_argument("--scheme", required=True, choices=("optimal", "classic"))
    p.add_argument("--family-size", required=True, type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--intervals-out", default=None,
                   help="also dump the assigned dyadic intervals (optimal only)")
    p.add_argument("--tight", action="store_true",
                   help="use the one-bit-smaller supervisor-offset field")
    p.set_defaults(handler=_cmd_label)

    p = sub.add_parser("query", help="answer ancestry queries from labels alone")
    p.add_argument("--labels", required=True)
    p.add_argument("--pairs", default=None, help="file of 'u v' lines")
    p.add_argument("--u", type=int, default=None)
    p.add_argument("--v", type=int, default=None)
    p.add_argument("--out", default=None, help="write answers here instead of stdout")
    p.set_defaults(handler=_cmd_query)

    p = sub.add_parser("verify", help="run the correctness checkers")
    p.add_argument("--input", required=True)
    p.add_argument("--scheme", required=True, choices=("optimal", "classic"))
    p.add_argument("--family-size", required=True, type=int)
    p.add_argument("--labels", default=None,
                   help="verify this label CSV instead of freshly marked labels")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--pair-budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report-csv", default=None)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("bench", help="measure label sizes and wall times")
    p.add_argument("--families", required=True,
                   help="comma-separated family names")
    p.add_argument("--sizes", required=True,
                   help="comma-separated node counts")
    p.add_argument("--family-sizes", default=None,
                   help="comma-separated n values matching --sizes")
    p.add_argument("--schemes", default="optimal,classic")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--query-batch", type=int, default=10_000)
    p.add_argument("--out", required=True)
    p.add_argument("--plots", action="store_true",
                   help="render figures next to the CSV")
    p.set_defaults(handler=_cmd_bench)
    return parser


def _read_tree(path: str):
    return parse_parent_array(Path(path).read_text())


def _cmd_gen(args) -> int:
    spec = TreeFamilySpec(
        args.family, args.size, seed=args.seed,
        path_count=args.path_count, path_length=args.path_length,
    )
    tree = generate_tree(spec)
    Path(args.out).write_text(serialize_parent_array(tree) + "\n")
    return 0


def _write_label_csv(path: str, rows) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(LABEL_COLUMNS)
        writer.writerows(rows)


def _cmd_label(args) -> int:
    tree = _read_tree(args.input)
    n = args.family_size
    if tree.node_count > n:
        raise CliError(
            f"tree has {tree.node_count} nodes, exceeds family size {n}"
        )
    if args.scheme == "optimal":
        params = SchemeParams.for_family_size(n)
        result = mark_details(tree, params, tight=args.tight)
        rows = [
            (u, "optimal", n, result.labels[u].to_hex(result.layout))
            for u in range(tree.node_count)
        ]
        if args.intervals_out:
            Path(args.intervals_out).write_text(
                intervals_csv(params, result.intervals)
            )
    else:
        if args.intervals_out:
            raise CliError("--intervals-out applies to the optimal scheme only")
        labels = classic_mod.classic_mark(tree, n)
        rows = [
            (u, "classic", n, classic_mod.classic_to_hex(labels[u], n))
            for u in range(tree.node_count)
        ]
    _write_label_csv(args.out, rows)
    return 0


def _read_label_csv(path: str):
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or tuple(header) != LABEL_COLUMNS:
            raise CliError(f"{path}: not a label table (bad header {header})")
        schemes = set()
        sizes = set()
        table: dict[int, str] = {}
        for row in reader:
            node, scheme, size, hex_text = row
            table[int(node)] = hex_text
            schemes.add(scheme)
            sizes.add(int(size))
    if len(schemes) != 1 or len(sizes) != 1:
        raise CliError(f"{path}: mixed schemes or family sizes")
    return schemes.pop(), sizes.pop(), table


def _cmd_query(args) -> int:
    scheme, n, table = _read_label_csv(args.labels)
    if args.pairs is not None:
        pairs = []
        for line in Path(args.pairs).read_text().split("\n"):
            if line.strip():
                u, v = line.split()
                pairs.append((int(u), int(v)))
    elif args.u is not None and args.v is not None:
        pairs = [(args.u, args.v)]
    else:
        raise CliError("provide --pairs or both --u and --v")

    if scheme == "optimal":
        params = SchemeParams.for_family_size(n)
        labels = {u: Label.from_hex(h) for u, h in table.items()}
        decide = lambda u, v: decide_ancestry(params, labels[u], labels[v])
    else:
        labels = {u: classic_mod.classic_from_hex(h, n) for u, h in table.items()}
        decide = lambda u, v: classic_mod.classic_decide(labels[u], labels[v])

    lines = []
    for u, v in pairs:
        if u not in labels or v not in labels:
            raise CliError(f"unknown node id in pair ({u},{v})")
        lines.append(f"{u} {v} {1 if decide(u, v) else 0}")
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    tree = _read_tree(args.input)
    n = args.family_size
    if tree.node_count > n:
        raise CliError(
            f"tree has {tree.node_count} nodes, exceeds family size {n}"
        )
    params = SchemeParams.for_family_size(n)
    reports = []

    provided = None
    if args.labels:
        scheme, label_n, table = _read_label_csv(args.labels)
        if scheme != args.scheme or label_n != n:
            raise CliError("label CSV scheme/family-size do not match the flags")
        if args.scheme == "optimal":
            provided = {u: Label.from_hex(h) for u, h in table.items()}
        else:
            provided = {u: classic_mod.classic_from_hex(h, n) for u, h in table.items()}

    if args.scheme == "optimal" and provided is None:
        result = mark_details(tree, params)
        reports.append(check_lpo(result.decorated, result.intervals, params,
                                 seed=args.seed))
        reports.append(check_label_budget(result.labels, params, result.layout))
    reports.append(
        check_scheme_vs_oracle(
            tree,
            args.scheme,
            params,
            pair_budget=args.pair_budget,
            seed=args.seed,
            exhaustive=True if args.exhaustive else None,
            labels=provided,
        )
    )

    for report in reports:
        print(report.to_text())
    if args.report_csv:
        with open(args.report_csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(("check", "status", "detail"))
            for report in reports:
                writer.writerows(report.csv_rows())
    return 0 if all(r.passed for r in reports) else 2


def _cmd_bench(args) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    per_size = sizes
    if args.family_sizes:
        per_size = [int(s) for s in args.family_sizes.split(",") if s.strip()]
        if len(per_size) != len(sizes):
            raise CliError("--family-sizes must match --sizes in length")
    specs = []
    override_list = []
    for family in families:
        for size, family_n in zip(sizes, per_size):
            specs.append(TreeFamilySpec(family, size, seed=args.seed))
            override_list.append(family_n)
    overrides = override_list if args.family_sizes else None
    config = BenchConfig(
        families=specs,
        trials=args.trials,
        seed=args.seed,
        schemes=tuple(s.strip() for s in args.schemes.split(",")),
        family_size_overrides=overrides,
        query_batch=args.query_batch,
    )
    rows = run_bench(config)
    out = Path(args.out)
    out.write_text(rows_to_csv(rows))
    if args.plots:
        from .plots import render_all

        written = render_all(rows, out.parent if out.parent != Path("") else Path("."))
        for path in written:
            print(f"wrote {path}")
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
