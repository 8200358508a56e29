"""Deterministic SMT-LIB2 text generation.

All symbols are emitted |quoted|; arithmetic is rendered per comparison in
integer mode, or in real mode (decimal literals, to_real around integer
variables) as soon as a real-sorted variable or a non-integral rational is
involved, keeping the text well-sorted under strict SMT-LIB rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import formula as fm
from .errors import UndeclaredSymbol


@dataclass(frozen=True)
class EmissionUnit:
    logic: str
    declarations: tuple[tuple[str, str], ...]  # (symbol, "Bool" | "Int" | "Real")
    assertions: tuple[fm.Formula, ...]
    query_symbols: tuple[str, ...]


def _quote(symbol: str) -> str:
    return f"|{symbol}|"


def _cmp_is_real(c: fm.Cmp, sorts: dict[str, str]) -> bool:
    for e in (c.left, c.right):
        if e.const.denominator != 1:
            return True
        for coeff, var in e.terms:
            if coeff.denominator != 1 or sorts.get(var) == "Real":
                return True
    return False


def select_logic(declarations, assertions) -> str:
    """QF_LIA unless anything requires real arithmetic, then QF_LIRA."""
    sorts = {sym: sort for sym, sort in declarations}
    if any(sort == "Real" for sort in sorts.values()):
        return "QF_LIRA"
    for f in assertions:
        for g in fm.subformulas(f):
            if isinstance(g, fm.Cmp) and _cmp_is_real(g, sorts):
                return "QF_LIRA"
    return "QF_LIA"


def _num(value: Fraction, real: bool) -> str:
    def plain(v: Fraction) -> str:
        if v.denominator == 1:
            return f"{v.numerator}.0" if real else str(v.numerator)
        assert real
        return f"(/ {v.numerator}.0 {v.denominator}.0)"

    if value < 0:
        return f"(- {plain(-value)})"
    return plain(value)


def _expr(e: fm.LinExpr, real: bool, sorts: dict[str, str]) -> str:
    def atom(var: str) -> str:
        q = _quote(var)
        if real and sorts.get(var) == "Int":
            return f"(to_real {q})"
        return q

    parts = []
    for coeff, var in e.terms:
        if coeff == 1:
            parts.append(atom(var))
        elif coeff == -1:
            parts.append(f"(- {atom(var)})")
        else:
            parts.append(f"(* {_num(coeff, real)} {atom(var)})")
    if e.const != 0 or not parts:
        parts.append(_num(e.const, real))
    if len(parts) == 1:
        return parts[0]
    return f"(+ {' '.join(parts)})"


def _render(f: fm.Formula, sorts: dict[str, str]) -> str:
    if isinstance(f, fm.TrueF):
        return "true"
    if isinstance(f, fm.FalseF):
        return "false"
    if isinstance(f, fm.Var):
        return _quote(f.name)
    if isinstance(f, fm.Not):
        return f"(not {_render(f.arg, sorts)})"
    if isinstance(f, fm.And):
        return f"(and {' '.join(_render(a, sorts) for a in f.args)})"
    if isinstance(f, fm.Or):
        return f"(or {' '.join(_render(a, sorts) for a in f.args)})"
    if isinstance(f, fm.Implies):
        return f"(=> {_render(f.left, sorts)} {_render(f.right, sorts)})"
    if isinstance(f, fm.Iff):
        return f"(= {_render(f.left, sorts)} {_render(f.right, sorts)})"
    if isinstance(f, fm.Cmp):
        real = _cmp_is_real(f, sorts)
        return f"({f.rel} {_expr(f.left, real, sorts)} {_expr(f.right, real, sorts)})"
    raise TypeError(f"not a formula: {f!r}")


def emit_smtlib(u: EmissionUnit) -> str:
    """Render the unit to SMT-LIB2 text; byte-identical across runs."""
    sorts = {sym: sort for sym, sort in u.declarations}
    if len(sorts) != len(u.declarations):
        raise UndeclaredSymbol("duplicate declaration in emission unit")
    for f in u.assertions:
        for sym in fm.bool_symbols(f) | fm.numeric_symbols(f):
            if sym not in sorts:
                raise UndeclaredSymbol(f"assertion uses undeclared symbol {sym!r}")
    for sym in u.query_symbols:
        if sym not in sorts:
            raise UndeclaredSymbol(f"query lists undeclared symbol {sym!r}")

    lines = [f"(set-logic {u.logic})"]
    for sym, sort in u.declarations:
        lines.append(f"(declare-fun {_quote(sym)} () {sort})")
    for f in u.assertions:
        lines.append(f"(assert {_render(f, sorts)})")
    lines.append("(check-sat)")
    if u.query_symbols:
        lines.append(f"(get-value ({' '.join(_quote(s) for s in u.query_symbols)}))")
    return "\n".join(lines) + "\n"
