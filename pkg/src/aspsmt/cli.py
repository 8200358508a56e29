"""Command-line entry point.

Exit codes follow the usual ASP-solver convention: 10 when at least one
answer set was found, 20 when there is none, 30 on an unknown/timeout
verdict, 1 on any input or solver error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .dependency import is_tight
from .enumeration import enumerate_answer_sets, translate
from .errors import AspSmtError
from .oracle import brute_force_answer_sets
from .program import Program, parse_smodels
from .smt_emit import emit_smtlib
from .solver import default_solver_command
from .theory import EMPTY_THEORY, parse_theory_declarations

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_UNKNOWN = 30
EXIT_ERROR = 1

SOLVER_ENV_VAR = "ASPSMT_SOLVER"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aspsmt",
        description="Translate a ground answer set program (smodels format) "
                    "to SMT-LIB2 and enumerate its answer sets with an "
                    "external SMT solver.")
    parser.add_argument("input", help="smodels-format input file, or - for stdin")
    parser.add_argument("--theory", metavar="FILE",
                        help="side file binding atoms to linear constraints")
    parser.add_argument("-e", "--models", type=int, default=1, metavar="N",
                        help="number of answer sets to enumerate, 0 = all (default: 1)")
    parser.add_argument("--solver", metavar="CMD",
                        default=os.environ.get(SOLVER_ENV_VAR),
                        help="solver command template; {file} is replaced by the "
                             f"SMT-LIB2 file (default: ${SOLVER_ENV_VAR} or the "
                             "bundled reference solver)")
    parser.add_argument("--timeout", type=float, default=300.0, metavar="SECS",
                        help="per-call solver timeout in seconds (default: 300)")
    parser.add_argument("--dump-smt", metavar="FILE",
                        help="write the first emitted SMT-LIB2 file (- for stdout)")
    parser.add_argument("--stats", action="store_true",
                        help="print dependency statistics for the normalized program")
    parser.add_argument("--oracle", action="store_true",
                        help="use the built-in brute-force enumerator instead of "
                             "the SMT pipeline (small programs only)")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _print_stats(tr) -> None:
    sizes = list(tr.dependency.component_size.values())
    largest = max(sizes) if sizes else 0
    verdict = "yes" if is_tight(tr.dependency) else "no"
    print(f"Stats: sccs={len(sizes)} largest-scc={largest} tight={verdict}")


def _print_answer(index: int, atoms, witness=None) -> None:
    line = f"Answer {index}:"
    if atoms:
        line += " " + " ".join(atoms)
    print(line)
    if witness:
        parts = ", ".join(f"{name} = {value}" for name, value in sorted(witness.items()))
        print(f"  {parts}")


def _run_oracle(program: Program, args) -> int:
    models = brute_force_answer_sets(program)
    visible = {a.id: a.name for a in program.visible_atoms()}
    projections: list[tuple[str, ...]] = []
    for interp in models:
        proj = tuple(sorted(visible[a] for a in interp if a in visible))
        if proj not in projections:
            projections.append(proj)
    if args.models:
        projections = projections[:args.models]
    for i, atoms in enumerate(projections, start=1):
        _print_answer(i, atoms)
    if projections:
        print("SATISFIABLE")
        return EXIT_SAT
    print("UNSATISFIABLE")
    return EXIT_UNSAT


def run(args) -> int:
    program = parse_smodels(_read_input(args.input))
    if args.oracle and args.theory:
        raise AspSmtError("--oracle does not support theory constraints")
    decls = EMPTY_THEORY
    if args.theory:
        decls = parse_theory_declarations(_read_input(args.theory), program)

    if args.stats or args.dump_smt:
        tr = translate(program, decls)
        if args.stats:
            _print_stats(tr)
        if args.dump_smt:
            text = emit_smtlib(tr.unit)
            if args.dump_smt == "-":
                sys.stdout.write(text)
            else:
                with open(args.dump_smt, "w", encoding="utf-8") as handle:
                    handle.write(text)

    if args.oracle:
        return _run_oracle(program, args)

    solver = args.solver or default_solver_command()
    result = enumerate_answer_sets(program, decls, n=args.models,
                                   solver_command=solver, timeout=args.timeout)
    for i, answer in enumerate(result.answer_sets, start=1):
        _print_answer(i, answer.true_atoms, answer.numeric_witness)
    if result.unknown:
        print("UNKNOWN")
        return EXIT_UNKNOWN
    if result.answer_sets:
        print("SATISFIABLE")
        return EXIT_SAT
    print("UNSATISFIABLE")
    return EXIT_UNSAT


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.models < 0:
        print("error: --models must be >= 0", file=sys.stderr)
        return EXIT_ERROR
    if args.timeout <= 0:
        print("error: --timeout must be positive", file=sys.stderr)
        return EXIT_ERROR
    try:
        return run(args)
    except AspSmtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
