"""End-to-end pipeline: translate a program (plus optional theory bindings)
into one SMT-LIB2 unit, then enumerate answer sets by repeated solving with
blocking formulas over the visible atoms."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from . import formula as fm
from .completion import clark_completion
from .dependency import DependencyInfo, compute_dependency
from .errors import AspSmtError, UnparseableResponse
from .names import (atom_symbol, numeric_symbol, ranking_symbol,
                    visible_name_map)
from .program import Program, eliminate_choice_rules
from .ranking import level_ranking_formulas, ranked_atoms
from .smt_emit import EmissionUnit, emit_smtlib, select_logic
from .solver import default_solver_command, solve
from .theory import (EMPTY_THEORY, TheoryDecls, inject_theory_choices,
                     theory_formulas)


@dataclass(frozen=True)
class AnswerSet:
    """True visible atoms plus optional solver witnesses."""

    true_atoms: tuple[str, ...]  # user names, sorted
    numeric_witness: dict[str, Fraction] | None = None
    ranking_witness: dict[str, int] | None = None


@dataclass(frozen=True)
class Translation:
    """An emission unit plus the name maps needed to read models back."""

    unit: EmissionUnit
    normalized: Program
    dependency: DependencyInfo
    visible: tuple[tuple[str, str], ...]  # (user name, emitted symbol)
    ranking_vars: tuple[str, ...]
    numeric_vars: tuple[tuple[str, str], ...]  # (user name, emitted symbol)


@dataclass(frozen=True)
class EnumerationResult:
    answer_sets: tuple[AnswerSet, ...]
    exhausted: bool  # True iff the last solver call returned unsat
    unknown: bool = False  # aborted on an unknown verdict; results are partial

    @property
    def complete(self) -> bool:
        return self.exhausted and not self.unknown


def translate(p: Program, decls: TheoryDecls = EMPTY_THEORY) -> Translation:
    """Normalize, analyze, and build the full formula set for one program."""
    prog = inject_theory_choices(p, decls)
    prog = eliminate_choice_rules(prog)
    dep = compute_dependency(prog)

    assertions = tuple(
        clark_completion(prog)
        + level_ranking_formulas(prog, dep)
        + theory_formulas(decls))

    declarations: list[tuple[str, str]] = []
    for atom_id in prog.atom_ids():
        declarations.append((atom_symbol(prog, atom_id), "Bool"))
    for i, r in enumerate(prog.rules):
        if len(r.pos_body) + len(r.neg_body) >= 2:
            declarations.append((f"bd_{i}", "Bool"))
    lr_vars = tuple(ranking_symbol(prog, a) for a in ranked_atoms(prog, dep))
    declarations.extend((v, "Int") for v in lr_vars)
    numeric = tuple((v, numeric_symbol(v)) for v in decls.sorts)
    declarations.extend(
        (sym, "Int" if decls.sorts[name] == "int" else "Real")
        for name, sym in numeric)

    visible = tuple(visible_name_map(prog))
    query = tuple(s for _, s in visible) + lr_vars + tuple(s for _, s in numeric)
    unit = EmissionUnit(
        logic=select_logic(declarations, assertions),
        declarations=tuple(declarations),
        assertions=assertions,
        query_symbols=query,
    )
    return Translation(unit=unit, normalized=prog, dependency=dep,
                       visible=visible, ranking_vars=lr_vars, numeric_vars=numeric)


def blocking_assertion(m: AnswerSet, visible) -> fm.Formula:
    """At least one visible atom must differ from the given answer set."""
    true_names = set(m.true_atoms)
    literals = []
    for name, sym in visible:
        if name in true_names:
            literals.append(fm.not_(fm.Var(sym)))
        else:
            literals.append(fm.Var(sym))
    return fm.or_(literals)


def _read_model(tr: Translation, assignment: dict) -> AnswerSet:
    def lookup(sym: str):
        if sym not in assignment:
            raise UnparseableResponse(f"model is missing queried symbol {sym!r}")
        return assignment[sym]

    names = sorted(name for name, sym in tr.visible if lookup(sym) is True)
    ranking = None
    if tr.ranking_vars:
        ranking = {sym: int(lookup(sym)) for sym in tr.ranking_vars}
    numeric = None
    if tr.numeric_vars:
        numeric = {name: Fraction(lookup(sym)) for name, sym in tr.numeric_vars}
    return AnswerSet(tuple(names), numeric_witness=numeric, ranking_witness=ranking)


def enumerate_answer_sets(p: Program, decls: TheoryDecls = EMPTY_THEORY,
                          n: int = 0, solver_command: str = "",
                          timeout: float = 300.0) -> EnumerationResult:
    """Solve, block, and re-solve until n answer sets (0 = all) or unsat."""
    if n < 0:
        raise ValueError("requested model count must be >= 0")
    if not solver_command:
        solver_command = default_solver_command()
    tr = translate(p, decls)
    assertions = list(tr.unit.assertions)
    found: list[AnswerSet] = []
    seen: set[tuple[str, ...]] = set()
    while n == 0 or len(found) < n:
        text = emit_smtlib(replace(tr.unit, assertions=tuple(assertions)))
        result = solve(text, solver_command, timeout=timeout)
        if result.verdict == "unsat":
            return EnumerationResult(tuple(found), exhausted=True)
        if result.verdict == "unknown":
            return EnumerationResult(tuple(found), exhausted=False, unknown=True)
        m = _read_model(tr, result.assignment)
        if m.true_atoms in seen:
            raise AspSmtError(
                "solver returned a previously blocked model; "
                "it likely ignored part of the input")
        seen.add(m.true_atoms)
        found.append(m)
        assertions.append(blocking_assertion(m, tr.visible))
    return EnumerationResult(tuple(found), exhausted=False)
