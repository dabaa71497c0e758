"""Command-line front end.

Groups are named by family identifiers (``cyclic:6``, ``dihedral:8``,
``dicyclic:8``, ``symmetric:4``, ``alternating:5``, ``elemab:2^3``,
``product:cyclic:2,cyclic:3``, ``psl2:7``) or by input files: a Cayley
table (first line n, then n rows of 0-based indices with the identity at
index 0) or a generator list (first line ``degree: k``, then one 1-based
cycle word per line).  Products apply the left factor first.

Exit codes: 0 success/pass, 1 verification failure, 2 bad input,
3 cap exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from .catalog import catalog_iter, group_from_spec
from .core import (
    ELEMENT_CAP,
    SUBGROUP_CAP,
    CapExceededError,
    FiniteGroup,
    from_cayley,
    generate_group,
)
from .metric import classify, distance_csv_text, report_records, report_text
from .perm import parse_cycles
from .verify import DEFAULT_BOUNDS, TARGETS, run_verify

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_CAP = 3


def load_group_file(path: str, element_cap: int = ELEMENT_CAP) -> FiniteGroup:
    """Auto-detect and load a Cayley-table or generator file."""
    with open(path, "r", encoding="utf-8") as handle:
        lines = [ln.strip() for ln in handle if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty group file")
    name = os.path.splitext(os.path.basename(path))[0]
    if lines[0].lower().startswith("degree:"):
        degree = int(lines[0].split(":", 1)[1])
        gens = [parse_cycles(word, degree) for word in lines[1:]]
        if not gens:
            raise ValueError(f"{path}: generator file lists no generators")
        return generate_group(gens, cap=element_cap, name=name)
    n = int(lines[0])
    if len(lines) != n + 1:
        raise ValueError(f"{path}: expected {n} table rows, found {len(lines) - 1}")
    table = [[int(tok) for tok in row.split()] for row in lines[1:]]
    return from_cayley(table, name=name)


def resolve_group(spec: str, element_cap: int = ELEMENT_CAP) -> FiniteGroup:
    """A family identifier first, an existing file path second."""
    try:
        return group_from_spec(spec)
    except ValueError:
        if os.path.exists(spec):
            return load_group_file(spec, element_cap=element_cap)
        raise


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    group = resolve_group(args.spec, element_cap=args.cap_elements)
    report = classify(group, audit=args.audit_triangle)
    if args.format == "records":
        text = report_records(group, report) + "\n"
    else:
        text = report_text(group, report) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def _classify_rows(max_order: int) -> list[dict]:
    rows = []
    for name, group in catalog_iter(max_order):
        report = classify(group, name=name)
        rows.append(
            {
                "name": name,
                "order": str(report.order),
                "cp": "true" if report.in_cp else "false",
                "cp2": "true" if report.in_cp2 else "false",
                "cp3": "true" if report.in_cp3 else "false",
                "solvable": "true" if report.solvable else "false",
                "p_group": str(report.p_group) if report.p_group is not None else "-",
            }
        )
    return rows


def _cmd_classify(args) -> int:
    rows = _classify_rows(args.max_order)
    columns = ("name", "order", "cp", "cp2", "cp3", "solvable", "p_group")
    if args.format == "records":
        text = "\n".join(" ".join(f"{c}={row[c]}" for c in columns) for row in rows) + "\n"
    else:
        widths = {c: max(len(c), *(len(row[c]) for row in rows)) for c in columns}
        header = "  ".join(c.ljust(widths[c]) for c in columns)
        body = [
            "  ".join(row[c].ljust(widths[c]) for c in columns)
            for row in rows
        ]
        text = "\n".join([header] + body) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    result = run_verify(args.target, max_order=args.max_order, subgroup_cap=args.cap_subgroups)
    text = "\n".join(result.lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK if result.passed else EXIT_VERIFY_FAILED


def _cmd_distance_matrix(args) -> int:
    group = resolve_group(args.spec, element_cap=args.cap_elements)
    _emit(distance_csv_text(group), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpgroups",
        description=(
            "Order-distance and CP-class computations on small finite groups. "
            "Multiplication applies the left factor first."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="classify one group and print its report")
    analyze.add_argument("spec", help="group identifier or input file path")
    analyze.add_argument("--format", choices=("text", "records"), default="text")
    analyze.add_argument("--output", default=None, help="write the report to a file")
    analyze.add_argument(
        "--audit-triangle",
        action="store_true",
        help="also run the raw all-triples triangle check (order <= 60)",
    )
    analyze.add_argument("--cap-elements", type=int, default=ELEMENT_CAP)
    analyze.set_defaults(func=_cmd_analyze)

    classify_cmd = sub.add_parser("classify", help="tabulate class flags over the catalog")
    classify_cmd.add_argument("--max-order", type=int, required=True)
    classify_cmd.add_argument("--format", choices=("text", "records"), default="text")
    classify_cmd.add_argument("--output", default=None)
    classify_cmd.set_defaults(func=_cmd_classify)

    verify = sub.add_parser(
        "verify",
        help="run one bundled verification target",
        description=(
            "Targets: theorem1 (strict-triangle groups have prime-power element orders, "
            "properly), theorem2 (their abelian subgroups are p-groups), theorem3 "
            "(p-groups: strict triangle iff ultrametric, with normal order layers), "
            "theorem4 (no nonabelian simple group passes the strict triangle), "
            "conjecture5 (solvability scan), subgroup-closure, problem1 (quotient "
            "observations, non-conclusive).  Default bounds: "
            + ", ".join(f"{t}={DEFAULT_BOUNDS[t]}" for t in TARGETS)
        ),
    )
    verify.add_argument("target", choices=TARGETS)
    verify.add_argument("--max-order", type=int, default=None)
    verify.add_argument("--cap-subgroups", type=int, default=SUBGROUP_CAP)
    verify.add_argument("--output", default=None)
    verify.set_defaults(func=_cmd_verify)

    dm = sub.add_parser("distance-matrix", help="export the order-distance matrix as CSV")
    dm.add_argument("spec", help="group identifier or input file path")
    dm.add_argument("--output", default=None)
    dm.add_argument("--cap-elements", type=int, default=ELEMENT_CAP)
    dm.set_defaults(func=_cmd_distance_matrix)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
