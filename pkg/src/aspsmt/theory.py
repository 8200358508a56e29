"""Linear-constraint bindings for designated atoms (the CASP extension).

Side-file grammar, one statement per line, ``%`` starts a comment:

    var int x;
    var real y;
    constraint p: 2*y + -1*x <= 3.5;

Each constraint binds a visible program atom to a linear comparison; the
pipeline injects an implicit choice over every bound atom so its truth is
decided by the constraint rather than by the absence of rules.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from fractions import Fraction

from . import formula as fm
from .errors import (DuplicateDefinition, SortClash, TheoryAtomInHead,
                     TheoryError, UndeclaredVariable, UnknownAtom)
from .names import atom_symbol, escape, numeric_symbol
from .program import CHOICE, Program, Rule

_VAR_RE = re.compile(r"^var\s+(int|real)\s+([A-Za-z_][A-Za-z0-9_]*)$")
_CONSTRAINT_RE = re.compile(r"^constraint\s+(\S+)\s*:\s*(.+)$")
_TERM_RE = re.compile(r"^(-?\d+(?:\.\d+)?)\s*\*\s*([A-Za-z_][A-Za-z0-9_]*)$")
_BARE_VAR_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_CONST_RE = re.compile(r"^-?\d+(?:\.\d+)?$")
_REL_SPLIT = re.compile(r"(<=|>=|=|<|>)")


@dataclass(frozen=True)
class TheoryAtomDef:
    atom_id: int
    atom_name: str
    constraint: fm.Cmp  # over user variable names


@dataclass(frozen=True)
class TheoryDecls:
    sorts: dict[str, str]  # variable name -> "int" | "real", declaration order
    defs: tuple[TheoryAtomDef, ...]

    @property
    def empty(self) -> bool:
        return not self.sorts and not self.defs


EMPTY_THEORY = TheoryDecls(sorts={}, defs=())


def _parse_expr(text: str, sorts: dict[str, str], lineno: int) -> fm.LinExpr:
    coeffs: dict[str, Fraction] = {}
    order: list[str] = []
    for raw in text.split("+"):
        term = raw.strip()
        if not term:
            raise TheoryError(f"line {lineno}: empty term in linear expression")
        m = _TERM_RE.match(term)
        if m:
            coeff, var = Fraction(m.group(1)), m.group(2)
        elif _BARE_VAR_RE.match(term):
            coeff, var = Fraction(1), term
        else:
            raise TheoryError(f"line {lineno}: cannot parse term {term!r}")
        if var not in sorts:
            raise UndeclaredVariable(f"line {lineno}: variable {var!r} is not declared")
        if var not in coeffs:
            coeffs[var] = Fraction(0)
            order.append(var)
        coeffs[var] += coeff
    return fm.LinExpr(tuple((coeffs[v], v) for v in order))


def parse_theory_declarations(text: str, p: Program) -> TheoryDecls:
    """Parse a side file and resolve atom names against the program."""
    name_to_id = {a.name: a.id for a in p.visible_atoms()}
    sorts: dict[str, str] = {}
    defs: list[TheoryAtomDef] = []
    defined: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        if not line.endswith(";"):
            raise TheoryError(f"line {lineno}: statement must end with ';'")
        stmt = line[:-1].strip()

        m = _VAR_RE.match(stmt)
        if m:
            sort, var = m.group(1), m.group(2)
            if var in sorts:
                if sorts[var] != sort:
                    raise SortClash(f"line {lineno}: variable {var!r} redeclared as {sort}")
                raise DuplicateDefinition(f"line {lineno}: variable {var!r} declared twice")
            sorts[var] = sort
            continue

        m = _CONSTRAINT_RE.match(stmt)
        if m:
            atom_name, body = m.group(1), m.group(2)
            if atom_name not in name_to_id:
                raise UnknownAtom(f"line {lineno}: no program atom named {atom_name!r}")
            if atom_name in defined:
                raise DuplicateDefinition(f"line {lineno}: atom {atom_name!r} bound twice")
            parts = _REL_SPLIT.split(body)
            if len(parts) != 3:
                raise TheoryError(f"line {lineno}: expected 'EXPR REL CONST' in {body!r}")
            expr_text, rel, const_text = (s.strip() for s in parts)
            if not _CONST_RE.match(const_text):
                raise TheoryError(f"line {lineno}: right-hand side {const_text!r} is not a decimal literal")
            expr = _parse_expr(expr_text, sorts, lineno)
            constraint = fm.Cmp(expr, rel, fm.lin_const(Fraction(const_text)))
            defs.append(TheoryAtomDef(name_to_id[atom_name], atom_name, constraint))
            defined.add(atom_name)
            continue

        raise TheoryError(f"line {lineno}: cannot parse statement {stmt!r}")

    return TheoryDecls(sorts=sorts, defs=tuple(defs))


def _rename(expr: fm.LinExpr) -> fm.LinExpr:
    return fm.LinExpr(tuple((c, numeric_symbol(v)) for c, v in expr.terms), expr.const)


def theory_formulas(decls: TheoryDecls) -> list[fm.Formula]:
    """One equivalence atom <-> constraint per definition, over emitted symbols."""
    out: list[fm.Formula] = []
    for d in decls.defs:
        c = d.constraint
        out.append(fm.Iff(fm.Var(escape(d.atom_name)),
                          fm.Cmp(_rename(c.left), c.rel, _rename(c.right))))
    return out


def inject_theory_choices(p: Program, decls: TheoryDecls) -> Program:
    """Append an implicit choice rule {ta} for every bound atom.

    Without it the completion would force ta <-> false (no rules for ta),
    contradicting the theory binding.
    """
    if not decls.defs:
        return p
    heads = {r_head for r in p.rules for r_head in r.heads}
    atom_syms = {atom_symbol(p, a) for a in p.atoms}
    for d in decls.defs:
        if d.atom_id in heads:
            raise TheoryAtomInHead(
                f"constraint atom {d.atom_name!r} occurs in a rule head")
    for var in decls.sorts:
        if numeric_symbol(var) in atom_syms:
            raise DuplicateDefinition(
                f"numeric variable {var!r} collides with a program atom name")
    extra = tuple(Rule(CHOICE, (d.atom_id,), (), ()) for d in decls.defs)
    return replace(p, rules=p.rules + extra)


def evaluate_definition(d: TheoryAtomDef, witness) -> bool:
    """Evaluate the constraint on a numeric witness (user variable names)."""
    return fm.eval_cmp(d.constraint, witness)
