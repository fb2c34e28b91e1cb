"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 a relation fails under the
representation.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TextIO

from . import catalog
from .homology import (
    GeneratorTensorBasis,
    NotInKernel,
    RelationInconsistency,
    class_of,
    format_combination,
    h0,
    h1,
    parse_combination,
)
from .intlat import AbelianGroup
from .representation import (
    NotUnimodular,
    Representation,
    check_relations,
    parse_representation,
    trivial_representation,
)
from .words import ParseError, Presentation, parse_presentation

EXIT_OK, EXIT_INPUT, EXIT_MATH = 0, 1, 2


class InputError(Exception):
    pass


@dataclass(frozen=True)
class ComputeRequest:
    presentation: Presentation
    representation: Representation
    degree: int = 1
    machine: bool = False

    def __post_init__(self):
        if self.degree not in (0, 1):
            raise ValueError(f"degree must be 0 or 1, got {self.degree}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def load_source(args) -> tuple[Presentation, Representation]:
    if args.catalog:
        if args.presentation or args.representation:
            raise InputError("--catalog cannot be combined with --presentation/--representation")
        try:
            entry = catalog.load(args.catalog)
        except catalog.UnknownEntry:
            raise InputError(f"unknown catalog entry {args.catalog!r}; try 'catalog list'") from None
        return entry.presentation, entry.representation
    if not args.presentation:
        raise InputError("need --catalog ID or --presentation PATH")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            pres = parse_presentation(_read(args.presentation))
        except ParseError as exc:
            raise InputError(f"{args.presentation}: {exc}") from None
    if not args.representation:
        return pres, trivial_representation(pres)
    try:
        rep = parse_representation(_read(args.representation), pres)
    except (ParseError, NotUnimodular, ValueError) as exc:
        raise InputError(f"{args.representation}: {exc}") from None
    return pres, rep


def format_group(group: AbelianGroup, degree: int, machine: bool) -> str:
    if machine:
        return f"rank {group.free_rank}\ntorsion" + "".join(f" {t}" for t in group.torsion) + "\n"
    return f"H{degree} = {group}\n"


def _relation_line(pres: Presentation, check) -> str:
    status = "ok" if check.ok else "FAIL"
    return f"{status} ({check.label}) {pres.format_relation(check.relation)}"


def _require_consistent(pres: Presentation, rep: Representation):
    for check in check_relations(pres, rep):
        if not check.ok:
            raise RelationInconsistency(
                f"relation fails under the representation: {_relation_line(pres, check)}", check)


def cmd_compute(req: ComputeRequest, out: TextIO) -> int:
    _require_consistent(req.presentation, req.representation)
    if req.degree == 0:
        group = h0(req.presentation, req.representation)
    else:
        group = h1(req.presentation, req.representation).group
    out.write(format_group(group, req.degree, req.machine))
    return EXIT_OK


def cmd_verify(pres: Presentation, rep: Representation, out: TextIO) -> int:
    report = check_relations(pres, rep)
    for check in report:
        out.write(_relation_line(pres, check) + "\n")
    return EXIT_OK if all(c.ok for c in report) else EXIT_MATH


def cmd_kernel(pres: Presentation, rep: Representation, machine: bool, out: TextIO) -> int:
    _require_consistent(pres, rep)
    K = h1(pres, rep).kernel_basis
    basis = GeneratorTensorBasis.of(rep)
    out.write(f"rank {K.cols}\n")
    for j in range(K.cols):
        col = K.col(j)
        if machine:
            out.write("vector " + " ".join(str(x) for x in col) + "\n")
        else:
            out.write(format_combination(col, basis) + "\n")
    return EXIT_OK


def cmd_class(pres: Presentation, rep: Representation, expression: str, machine: bool,
              out: TextIO) -> int:
    _require_consistent(pres, rep)
    result = h1(pres, rep)
    try:
        vec = parse_combination(expression, result.basis)
    except ParseError as exc:
        raise InputError(f"expression: {exc}") from None
    try:
        cls = class_of(result, vec)
    except NotInKernel as exc:
        raise InputError("not a cycle: boundary is "
                         + _format_module_vector(exc.boundary, rep.basis_labels)) from None
    order = cls.order()
    order_text = "inf" if order is None else str(order)
    if machine:
        out.write("coords" + "".join(f" {c}" for c in cls.coords) + f"\norder {order_text}\n")
    elif cls.is_zero:
        out.write("zero\n")
    else:
        out.write(f"class {cls} in {result.group}, order {order_text}\n")
    return EXIT_OK


def _format_module_vector(v: Sequence[int], labels: Sequence[str]) -> str:
    parts = []
    for c, label in zip(v, labels):
        if c:
            mag = "" if abs(c) == 1 else f"{abs(c)} "
            sign = ("-" if c < 0 else "") if not parts else ("- " if c < 0 else "+ ")
            parts.append(f"{sign}{mag}{label}")
    return " ".join(parts) or "0"


def cmd_catalog_list(out: TextIO) -> int:
    for key, note in catalog.entries().items():
        out.write(f"{key}\t{note}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--catalog", metavar="ID", help="built-in entry (see 'catalog list')")
    source.add_argument("--presentation", metavar="PATH", help="presentation file")
    source.add_argument("--representation", metavar="PATH",
                        help="representation file (default: trivial rank-1 module)")
    source.add_argument("--machine", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="twisthom",
        description="Twisted group homology H0/H1 of finitely presented groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[source], help="compute H0 or H1")
    p.add_argument("--degree", type=int, choices=(0, 1), default=1)
    sub.add_parser("verify", parents=[source], help="check every relation under the representation")
    sub.add_parser("kernel", parents=[source], help="print a basis of the cycle lattice")
    p = sub.add_parser("class", parents=[source], help="homology class of a cycle, e.g. 'a1[1] + a1[2]'")
    p.add_argument("expression")
    p = sub.add_parser("catalog", help="built-in entries")
    p.add_argument("action", choices=("list",))
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "catalog":
            return cmd_catalog_list(out)
        pres, rep = load_source(args)
        for note in pres.warnings:
            err.write(f"warning: {note}\n")
        if args.command == "compute":
            return cmd_compute(ComputeRequest(pres, rep, args.degree, args.machine), out)
        if args.command == "verify":
            return cmd_verify(pres, rep, out)
        if args.command == "kernel":
            return cmd_kernel(pres, rep, args.machine, out)
        if args.command == "class":
            return cmd_class(pres, rep, args.expression, args.machine, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except RelationInconsistency as exc:
        err.write(f"error: {exc}\n")
        return EXIT_MATH
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
