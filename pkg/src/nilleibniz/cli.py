"""Command-line front end.

Every command reads and writes JSON. Exit codes:

0  success
1  an identity or axiom check failed
2  malformed input (bad JSON, bad document, unknown family, bad parameter)
3  precondition failure (wrong commutator dimension, nilpotency class, ...)
4  internal invariant breach
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import serialize
from .algebra import (DimensionMismatch, center, check_left_leibniz, check_right_leibniz,
                      commutator_ideal, leib_ideal, left_center, nilpotency_class,
                      right_center)
from .exactla import SingularMatrixError
from .families import FAMILY_NAMES, FamilySpec
from .pencil import ClassificationError, CommutatorDimensionError, classify
from .rack import (RackError, RackPreconditionError, cocycle_rack, rack_axioms_check,
                   tangent_algebra)
from .serialize import DocumentError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION, EXIT_INTERNAL = range(5)


class CliError(Exception):
    def __init__(self, code: int, message: str, extra: dict | None = None):
        super().__init__(message)
        self.code = code
        self.extra = extra or {}


def _read_json(path: str) -> Any:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from exc
    return serialize.loads(text)


def _read_algebra(path: str):
    return serialize.algebra_from_doc(_read_json(path))


def _emit(doc: Any, out) -> None:
    out.write(serialize.dumps(doc))


# -- commands -----------------------------------------------------------------

def cmd_build(args) -> tuple[int, Any]:
    params: dict[str, Any] = {}
    for key in ("a", "k", "n"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.matrix is not None:
        try:
            params["matrix"] = json.loads(args.matrix)
        except json.JSONDecodeError as exc:
            raise CliError(EXIT_INPUT, f"--matrix is not valid JSON: {exc}") from exc
        if not isinstance(params["matrix"], list):
            raise CliError(EXIT_INPUT, "--matrix must be a JSON list of rows")
    required = {
        "heisenberg": ("matrix",), "heisenberg-jordan": ("a",), "heisenberg-real-jordan": ("a",),
        "kronecker": ("n",), "dieudonne": ("n",), "classical-heisenberg": ("n",),
        "realified-complex-heisenberg": ("a",),
    }[args.family]
    missing = [f"--{r}" for r in required if r not in params]
    if missing:
        raise CliError(EXIT_INPUT, f"family {args.family} needs {', '.join(missing)}")
    try:
        L = FamilySpec(args.family, params).build()
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise CliError(EXIT_INPUT, f"bad parameters for {args.family}: {exc}") from exc
    return EXIT_OK, serialize.algebra_to_doc(L)


def cmd_check(args) -> tuple[int, Any]:
    L = _read_algebra(args.input)
    left = check_left_leibniz(L)
    right = check_right_leibniz(L)
    doc = {
        "left_leibniz": {"pass": left is None} | ({} if left is None else left.to_json()),
        "right_leibniz": {"pass": right is None} | ({} if right is None else right.to_json()),
        "symmetric": left is None and right is None,
        "nilpotency_class": nilpotency_class(L),
        "commutator_dim": commutator_ideal(L).dim,
        "leib_dim": leib_ideal(L).dim,
        "left_center_dim": left_center(L).dim,
        "right_center_dim": right_center(L).dim,
        "center_dim": center(L).dim,
    }
    return (EXIT_OK if left is None else EXIT_FAIL), doc


def _classify(L):
    try:
        return classify(L)
    except CommutatorDimensionError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc), {"commutator_dim": exc.dim}) from exc
    except ClassificationError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from exc


def cmd_classify(args) -> tuple[int, Any]:
    L = _read_algebra(args.input)
    return EXIT_OK, _classify(L).to_json()


def cmd_iso(args) -> tuple[int, Any]:
    L1, L2 = _read_algebra(args.input1), _read_algebra(args.input2)
    if L1.dim != L2.dim:
        raise CliError(EXIT_PRECONDITION, f"dimensions differ: {L1.dim} and {L2.dim}",
                       {"dims": [L1.dim, L2.dim]})
    c1, c2 = _classify(L1), _classify(L2)
    return EXIT_OK, {"isomorphic": c1 == c2, "left": c1.to_json(), "right": c2.to_json()}


def cmd_rack(args) -> tuple[int, Any]:
    L = _read_algebra(args.input)
    try:
        R = cocycle_rack(L)
    except RackPreconditionError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from exc
    doc = serialize.rack_to_doc(R)
    if not (args.check or args.symbolic):
        return EXIT_OK, doc
    samples = "symbolic" if args.symbolic else args.samples
    report = rack_axioms_check(R, samples, seed=args.seed)
    return (EXIT_OK if report.is_rack else EXIT_FAIL), {"rack": doc, "report": report.to_json()}


def cmd_tangent(args) -> tuple[int, Any]:
    doc = _read_json(args.input)
    if isinstance(doc, dict) and "rack" in doc and "kind" not in doc:
        doc = doc["rack"]
    R = serialize.rack_from_doc(doc)
    return EXIT_OK, serialize.algebra_to_doc(tangent_algebra(R))


# -- parser -------------------------------------------------------------------

def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilleibniz",
        description="Two-step nilpotent Leibniz algebras: build, check, classify, integrate.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit the structure tensor of a named family")
    p.add_argument("family", choices=FAMILY_NAMES)
    p.add_argument("--a", help="scalar parameter, e.g. 1/2, -3, 1+i, 2-i")
    p.add_argument("--k", type=_positive_int, help="Jordan block size")
    p.add_argument("--n", type=_positive_int, help="size parameter")
    p.add_argument("--matrix", help="inline JSON matrix, e.g. '[[\"1/2\", 0], [0, 1]]'")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="Leibniz identities and standard subspaces")
    p.add_argument("input", help="algebra document path, or - for stdin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="Kronecker invariants (1-dim commutator ideal)")
    p.add_argument("input")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("iso", help="decide isomorphism of two algebras")
    p.add_argument("input1")
    p.add_argument("input2")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("rack", help="integrate into the cocycle rack")
    p.add_argument("input")
    p.add_argument("--check", action="store_true", help="check the rack axioms on samples")
    p.add_argument("--samples", type=_positive_int, default=50)
    p.add_argument("--symbolic", action="store_true", help="exact symbolic axiom check")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_rack)

    p = sub.add_parser("tangent", help="recover the algebra from a rack document")
    p.add_argument("input")
    p.set_defaults(func=cmd_tangent)
    return parser


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        code, doc = args.func(args)
    except CliError as exc:
        _emit({"error": str(exc), "exit_code": exc.code} | exc.extra, stdout)
        print(f"error: {exc}", file=stderr)
        return exc.code
    except DocumentError as exc:
        _emit({"error": str(exc), "exit_code": EXIT_INPUT}, stdout)
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except (DimensionMismatch, SingularMatrixError, RackError) as exc:
        _emit({"error": str(exc), "exit_code": EXIT_PRECONDITION}, stdout)
        print(f"error: {exc}", file=stderr)
        return EXIT_PRECONDITION
    except Exception as exc:  # noqa: BLE001 - any other failure is an internal breach
        _emit({"error": f"{type(exc).__name__}: {exc}", "exit_code": EXIT_INTERNAL}, stdout)
        print(f"internal error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL
    _emit(doc, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
