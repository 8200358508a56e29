"""Assertion AST: Boolean connectives over propositional symbols plus linear
comparisons over integer/real symbols. Shared by completion, ranking, theory
binding, and emission. Exact arithmetic throughout (fractions.Fraction)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union


@dataclass(frozen=True)
class TrueF:
    pass


@dataclass(frozen=True)
class FalseF:
    pass


TRUE = TrueF()
FALSE = FalseF()


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    args: tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    args: tuple["Formula", ...]


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class LinExpr:
    """Sum of coefficient*variable terms plus a constant."""

    terms: tuple[tuple[Fraction, str], ...] = ()
    const: Fraction = Fraction(0)


RELATIONS = ("<", "<=", "=", ">=", ">")


@dataclass(frozen=True)
class Cmp:
    """Linear comparison ``left REL right``."""

    left: LinExpr
    rel: str
    right: LinExpr


Formula = Union[TrueF, FalseF, Var, Not, And, Or, Implies, Iff, Cmp]


# --- smart constructors (constant folding only, no rewriting) ----------------

def not_(f: Formula) -> Formula:
    if f is TRUE or isinstance(f, TrueF):
        return FALSE
    if f is FALSE or isinstance(f, FalseF):
        return TRUE
    if isinstance(f, Not):
        return f.arg
    return Not(f)


def and_(args) -> Formula:
    kept = []
    for a in args:
        if isinstance(a, FalseF):
            return FALSE
        if not isinstance(a, TrueF):
            kept.append(a)
    if not kept:
        return TRUE
    if len(kept) == 1:
        return kept[0]
    return And(tuple(kept))


def or_(args) -> Formula:
    kept = []
    for a in args:
        if isinstance(a, TrueF):
            return TRUE
        if not isinstance(a, FalseF):
            kept.append(a)
    if not kept:
        return FALSE
    if len(kept) == 1:
        return kept[0]
    return Or(tuple(kept))


def implies(left: Formula, right: Formula) -> Formula:
    if isinstance(left, TrueF):
        return right
    if isinstance(left, FalseF) or isinstance(right, TrueF):
        return TRUE
    if isinstance(right, FalseF):
        return not_(left)
    return Implies(left, right)


def iff(left: Formula, right: Formula) -> Formula:
    if isinstance(left, TrueF):
        return right
    if isinstance(right, TrueF):
        return left
    if isinstance(left, FalseF):
        return not_(right)
    if isinstance(right, FalseF):
        return not_(left)
    return Iff(left, right)


def lin_var(name: str) -> LinExpr:
    return LinExpr(((Fraction(1), name),))


def lin_const(value) -> LinExpr:
    return LinExpr((), Fraction(value))


def rank_gt(a: str, b: str) -> Cmp:
    return Cmp(lin_var(a), ">", lin_var(b))


# --- traversal and evaluation -------------------------------------------------

def subformulas(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, Not):
            stack.append(g.arg)
        elif isinstance(g, (And, Or)):
            stack.extend(g.args)
        elif isinstance(g, (Implies, Iff)):
            stack.append(g.left)
            stack.append(g.right)


def bool_symbols(f: Formula) -> set[str]:
    return {g.name for g in subformulas(f) if isinstance(g, Var)}


def numeric_symbols(f: Formula) -> set[str]:
    out: set[str] = set()
    for g in subformulas(f):
        if isinstance(g, Cmp):
            out.update(v for _, v in g.left.terms)
            out.update(v for _, v in g.right.terms)
    return out


def eval_expr(e: LinExpr, nums: Mapping[str, Fraction]) -> Fraction:
    total = e.const
    for coeff, var in e.terms:
        total += coeff * Fraction(nums[var])
    return total


def eval_cmp(c: Cmp, nums: Mapping[str, Fraction]) -> bool:
    lhs = eval_expr(c.left, nums)
    rhs = eval_expr(c.right, nums)
    if c.rel == "<":
        return lhs < rhs
    if c.rel == "<=":
        return lhs <= rhs
    if c.rel == "=":
        return lhs == rhs
    if c.rel == ">=":
        return lhs >= rhs
    if c.rel == ">":
        return lhs > rhs
    raise ValueError(f"unknown relation {c.rel!r}")


def evaluate(f: Formula, bools: Mapping[str, bool], nums: Mapping[str, Fraction] | None = None) -> bool:
    """Evaluate a closed formula under the given assignment."""
    if isinstance(f, TrueF):
        return True
    if isinstance(f, FalseF):
        return False
    if isinstance(f, Var):
        return bool(bools[f.name])
    if isinstance(f, Not):
        return not evaluate(f.arg, bools, nums)
    if isinstance(f, And):
        return all(evaluate(a, bools, nums) for a in f.args)
    if isinstance(f, Or):
        return any(evaluate(a, bools, nums) for a in f.args)
    if isinstance(f, Implies):
        return (not evaluate(f.left, bools, nums)) or evaluate(f.right, bools, nums)
    if isinstance(f, Iff):
        return evaluate(f.left, bools, nums) == evaluate(f.right, bools, nums)
    if isinstance(f, Cmp):
        return eval_cmp(f, nums or {})
    raise TypeError(f"not a formula: {f!r}")
