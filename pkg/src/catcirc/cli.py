"""Command-line front end.

Commands: validate, run, k0, funcat, fuse. Results go to stdout as
deterministic JSON (funcat prints text unless --json is given); diagnostics
go to stderr. Exit codes: 0 success, 1 validation failure, 2 I/O or parse
failure (argparse usage errors included), 3 integer overflow.
"""

from __future__ import annotations

import argparse
import json
import sys

from .circuit import catbit_register, elaborate, k0_of_functor
from .core import ObjectExpr, Tolerance, basis_object, vect
from .defects import bulk_report, run_script
from .diagnostics import Diagnostic, ValidationError
from .formats import (
    dump_json,
    load_boundary_state,
    load_circuit,
    load_defect_script,
    load_morphism,
    morphism_payload,
    state_payload,
)
from .functors import apply_to_morphism, apply_to_object
from . import intmat

__all__ = ["build_parser", "entry_point", "main"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output and diagnostics")
    common.add_argument("--eps", type=float, default=1e-9, metavar="FLOAT",
                        help="tolerance for complex comparisons (default 1e-9)")

    parser = argparse.ArgumentParser(prog="catcirc", description="categorical circuits on categorical bits")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a circuit file")
    p.add_argument("circuit", help="path to a circuit JSON file")

    p = sub.add_parser("run", parents=[common], help="run a circuit on an object (and optionally a morphism)")
    p.add_argument("circuit", help="path to a circuit JSON file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--object", dest="object_json", metavar="JSON",
                       help="input multiplicity vector, e.g. \"[1,0,2,0]\"")
    group.add_argument("--basis", metavar="BITS", help="input basis bitstring, e.g. \"10\"")
    p.add_argument("--morphism", metavar="PATH", help="also transport a morphism file")

    p = sub.add_parser("k0", parents=[common], help="decategorified integer matrix of a circuit")
    p.add_argument("circuit", help="path to a circuit JSON file")

    p = sub.add_parser("funcat", parents=[common], help="endofunctor-category report for a boundary category")
    p.add_argument("simples", type=int, help="number of simple objects of the boundary category")

    p = sub.add_parser("fuse", parents=[common], help="fuse a defect script onto a boundary state")
    p.add_argument("state", help="path to a boundary-state JSON file")
    p.add_argument("script", help="path to a defect-script JSON file")

    return parser


def _input_object(args, register) -> ObjectExpr:
    if args.basis is not None:
        n = register.simple_count.bit_length() - 1
        bits = args.basis
        if len(bits) != n or any(c not in "01" for c in bits):
            raise ValidationError([Diagnostic("input", f"--basis needs {n} characters of 0/1, got {bits!r}", "--basis")])
        return basis_object(register, int(bits, 2) if bits else 0)
    vec = json.loads(args.object_json)
    if not isinstance(vec, list) or len(vec) != register.simple_count or any(
        isinstance(v, bool) or not isinstance(v, int) or v < 0 for v in vec
    ):
        raise ValidationError([Diagnostic(
            "input",
            f"--object needs a list of {register.simple_count} non-negative integers",
            "--object",
        )])
    return ObjectExpr(register, tuple(vec))


def cmd_validate(args) -> int:
    load_circuit(args.circuit)
    return 0


def cmd_run(args) -> int:
    circuit = load_circuit(args.circuit)
    register = catbit_register(circuit.n_catbits)
    functor = elaborate(circuit)
    payload = {"object": list(apply_to_object(functor, _input_object(args, register)).mult)}
    if args.morphism is not None:
        transported = apply_to_morphism(functor, load_morphism(args.morphism, register))
        payload["morphism"] = morphism_payload(transported)
    print(dump_json(payload))
    return 0


def cmd_k0(args) -> int:
    circuit = load_circuit(args.circuit)
    print(dump_json(intmat.to_lists(k0_of_functor(elaborate(circuit)))))
    return 0


def cmd_funcat(args) -> int:
    if args.simples < 0:
        raise ValidationError([Diagnostic("input", "the simple count must be non-negative", "simples")])
    report = bulk_report(vect(args.simples))
    payload = {
        "boundary_simples": report.boundary_simples,
        "defect_classes": report.defect_classes,
        "end_of_identity_dim": report.end_of_identity_dim,
        "stable": report.stable,
        "message": report.message,
    }
    if args.json:
        print(dump_json(payload))
    else:
        for key in sorted(payload):
            print(f"{key}: {dump_json(payload[key]) if not isinstance(payload[key], str) else payload[key]}")
    return 0


def cmd_fuse(args) -> int:
    state = load_boundary_state(args.state)
    script = load_defect_script(args.script, state.category)
    print(dump_json(state_payload(run_script(script, state))))
    return 0


_COMMANDS = {
    "validate": cmd_validate,
    "run": cmd_run,
    "k0": cmd_k0,
    "funcat": cmd_funcat,
    "fuse": cmd_fuse,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        Tolerance(args.eps)  # reject negative tolerances up front
        return _COMMANDS[args.command](args)
    except ValidationError as err:
        if args.json:
            print(json.dumps([d.as_dict() for d in err.diagnostics], sort_keys=True), file=sys.stderr)
        else:
            for d in err.diagnostics:
                print(f"error: {d}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OverflowError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
