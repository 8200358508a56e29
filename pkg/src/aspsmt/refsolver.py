"""Reference SMT-LIB2 solver for the quantifier-free linear fragment.

A deliberately small, fully deterministic solver usable as an external
backend wherever no mainstream SMT solver is installed: DPLL over the
Tseitin-encoded Boolean skeleton, lazy theory checks by exact-rational
Fourier-Motzkin elimination, and branch-and-bound for integer variables.
It reads one SMT-LIB2 file (QF_LIA / QF_LIRA subset: zero-arity Bool/Int/Real
declarations, and/or/not/=>/= connectives, linear comparisons, to_real) and
prints the check-sat verdict plus the get-value response.

Run as:  python -m aspsmt.refsolver FILE   (or - for stdin)
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction

SIMPLE_HEAD = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ~!@$%^&*_+=<>.?/-")
SIMPLE_TAIL = SIMPLE_HEAD | set("0123456789")

BRANCH_BUDGET = 20000  # Fourier-Motzkin calls per feasibility query before giving up


class Unsupported(Exception):
    pass


class BudgetExceeded(Exception):
    pass


# --- reading ------------------------------------------------------------------

def tokenize(text: str) -> list:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c == ";":
            while i < n and text[i] != "\n":
                i += 1
        elif c in "()":
            tokens.append(c)
            i += 1
        elif c == "|":
            j = text.find("|", i + 1)
            if j < 0:
                raise Unsupported("unterminated |...| symbol")
            tokens.append(("sym", text[i + 1:j]))
            i = j + 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "()|;":
                j += 1
            tokens.append(text[i:j])
            i = j
    return tokens


def parse_all(tokens: list[str]) -> list:
    forms = []
    pos = 0
    while pos < len(tokens):
        form, pos = _parse(tokens, pos)
        forms.append(form)
    return forms


def _parse(tokens, pos):
    tok = tokens[pos]
    if tok == "(":
        items = []
        pos += 1
        while pos < len(tokens) and tokens[pos] != ")":
            item, pos = _parse(tokens, pos)
            items.append(item)
        if pos >= len(tokens):
            raise Unsupported("unbalanced parentheses")
        return items, pos + 1
    if tok == ")":
        raise Unsupported("unexpected ')'")
    if isinstance(tok, tuple):
        return tok[1], pos + 1
    return tok, pos + 1


def _name(node) -> str:
    if not isinstance(node, str):
        raise Unsupported(f"expected a symbol, got {node!r}")
    return node


# --- compilation to CNF over Boolean vars and theory atoms ---------------------

class Compiler:
    def __init__(self):
        self.sorts: dict[str, str] = {}
        self.var_index: dict[str, int] = {}  # Bool symbol -> prop var
        self.atom_index: dict[tuple, int] = {}  # canonical comparison -> prop var
        self.atoms: dict[int, tuple] = {}  # prop var -> comparison
        self.nvars = 0
        self.clauses: list[tuple[int, ...]] = []

    def declare(self, sym: str, sort: str):
        if sym in self.sorts:
            raise Unsupported(f"symbol {sym!r} declared twice")
        if sort not in ("Bool", "Int", "Real"):
            raise Unsupported(f"unsupported sort {sort}")
        self.sorts[sym] = sort
        if sort == "Bool":
            self.nvars += 1
            self.var_index[sym] = self.nvars

    def _fresh(self) -> int:
        self.nvars += 1
        return self.nvars

    def _atom_lit(self, terms: dict[str, Fraction], rel: str, const: Fraction) -> int:
        canon = (tuple(sorted(terms.items())), rel, const)
        lit = self.atom_index.get(canon)
        if lit is None:
            lit = self._fresh()
            self.atom_index[canon] = lit
            self.atoms[lit] = canon
        return lit

    # arithmetic terms -> (coefficient map, constant)
    def arith(self, node) -> tuple[dict[str, Fraction], Fraction]:
        if isinstance(node, str):
            sort = self.sorts.get(node)
            if sort in ("Int", "Real"):
                return {node: Fraction(1)}, Fraction(0)
            if sort is None:
                try:
                    return {}, Fraction(node)
                except ValueError:
                    pass
            raise Unsupported(f"not an arithmetic term: {node!r}")
        if not isinstance(node, list) or not node:
            raise Unsupported(f"not an arithmetic term: {node!r}")
        op = node[0]
        if op == "to_real":
            if len(node) != 2:
                raise Unsupported("to_real takes one argument")
            return self.arith(node[1])
        if op == "+":
            terms: dict[str, Fraction] = {}
            const = Fraction(0)
            for child in node[1:]:
                t, c = self.arith(child)
                const += c
                for v, k in t.items():
                    terms[v] = terms.get(v, Fraction(0)) + k
            return terms, const
        if op == "-":
            if len(node) == 2:
                t, c = self.arith(node[1])
                return {v: -k for v, k in t.items()}, -c
            terms, const = self.arith(node[1])
            terms = dict(terms)
            for child in node[2:]:
                t, c = self.arith(child)
                const -= c
                for v, k in t.items():
                    terms[v] = terms.get(v, Fraction(0)) - k
            return terms, const
        if op == "*":
            if len(node) != 3:
                raise Unsupported("* takes two arguments")
            (t1, c1), (t2, c2) = self.arith(node[1]), self.arith(node[2])
            if t1 and t2:
                raise Unsupported("nonlinear multiplication")
            if t1:
                return {v: k * c2 for v, k in t1.items()}, c1 * c2
            return {v: k * c1 for v, k in t2.items()}, c1 * c2
        if op == "/":
            (t1, c1), (t2, c2) = self.arith(node[1]), self.arith(node[2])
            if t1 or t2 or c2 == 0:
                raise Unsupported("division only between constants")
            return {}, c1 / c2
        raise Unsupported(f"unsupported arithmetic operator {op!r}")

    def _is_arith(self, node) -> bool:
        if isinstance(node, str):
            if self.sorts.get(node) in ("Int", "Real"):
                return True
            try:
                Fraction(node)
                return True
            except ValueError:
                return False
        return isinstance(node, list) and bool(node) and node[0] in ("+", "-", "*", "/", "to_real")

    def _comparison(self, rel: str, lhs, rhs) -> int:
        (t1, c1), (t2, c2) = self.arith(lhs), self.arith(rhs)
        terms = dict(t1)
        for v, k in t2.items():
            terms[v] = terms.get(v, Fraction(0)) - k
        terms = {v: k for v, k in terms.items() if k != 0}
        const = c2 - c1
        if rel in (">", ">="):
            terms = {v: -k for v, k in terms.items()}
            const = -const
            rel = "<" if rel == ">" else "<="
        return self._atom_lit(terms, rel, const)

    # Boolean terms -> literal (int) or constant (bool)
    def boolean(self, node):
        if node == "true":
            return True
        if node == "false":
            return False
        if isinstance(node, str):
            lit = self.var_index.get(node)
            if lit is None:
                raise Unsupported(f"undeclared or non-Bool symbol {node!r}")
            return lit
        if not isinstance(node, list) or not node:
            raise Unsupported(f"not a Boolean term: {node!r}")
        op = node[0]
        if op == "not":
            child = self.boolean(node[1])
            return (not child) if isinstance(child, bool) else -child
        if op in ("and", "or"):
            children = [self.boolean(c) for c in node[1:]]
            if op == "and":
                if any(c is False for c in children):
                    return False
                lits = [c for c in children if not isinstance(c, bool)]
                if not lits:
                    return True
                if len(lits) == 1:
                    return lits[0]
                v = self._fresh()
                for lit in lits:
                    self.clauses.append((-v, lit))
                self.clauses.append(tuple([v] + [-lit for lit in lits]))
                return v
            if any(c is True for c in children):
                return True
            lits = [c for c in children if not isinstance(c, bool)]
            if not lits:
                return False
            if len(lits) == 1:
                return lits[0]
            v = self._fresh()
            for lit in lits:
                self.clauses.append((v, -lit))
            self.clauses.append(tuple([-v] + lits))
            return v
        if op == "=>":
            args = [self.boolean(c) for c in node[1:]]
            if len(args) < 2:
                raise Unsupported("=> takes at least two arguments")
            result = args[-1]
            for a in reversed(args[:-1]):
                result = self._or2(self._negate(a), result)
            return result
        if op in ("<", "<=", ">=", ">"):
            if len(node) != 3:
                raise Unsupported(f"{op} takes two arguments")
            return self._comparison(op, node[1], node[2])
        if op == "=":
            if len(node) != 3:
                raise Unsupported("= takes two arguments")
            if self._is_arith(node[1]) or self._is_arith(node[2]):
                return self._comparison("=", node[1], node[2])
            a, b = self.boolean(node[1]), self.boolean(node[2])
            return self._iff(a, b)
        raise Unsupported(f"unsupported operator {op!r}")

    @staticmethod
    def _negate(a):
        return (not a) if isinstance(a, bool) else -a

    def _or2(self, a, b):
        if a is True or b is True:
            return True
        if a is False:
            return b
        if b is False:
            return a
        v = self._fresh()
        self.clauses.append((v, -a))
        self.clauses.append((v, -b))
        self.clauses.append((-v, a, b))
        return v

    def _iff(self, a, b):
        if isinstance(a, bool):
            return b if a else self._negate(b)
        if isinstance(b, bool):
            return a if b else -a
        v = self._fresh()
        self.clauses.append((-v, -a, b))
        self.clauses.append((-v, a, -b))
        self.clauses.append((v, a, b))
        self.clauses.append((v, -a, -b))
        return v

    def assert_term(self, node):
        lit = self.boolean(node)
        if lit is True:
            return
        if lit is False:
            self.clauses.append(())
        else:
            self.clauses.append((lit,))


# --- propositional search -------------------------------------------------------

def dpll(nvars: int, clauses: list[tuple[int, ...]]) -> list[bool] | None:
    """Deterministic DPLL with unit propagation; returns a total assignment."""
    assign: dict[int, bool] = {}

    def value(lit: int):
        v = assign.get(abs(lit))
        if v is None:
            return None
        return v if lit > 0 else not v

    def propagate(trail: list[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for clause in clauses:
                unassigned = None
                satisfied = False
                count = 0
                for lit in clause:
                    v = value(lit)
                    if v is True:
                        satisfied = True
                        break
                    if v is None:
                        unassigned = lit
                        count += 1
                        if count > 1:
                            break
                if satisfied or count > 1:
                    continue
                if count == 0:
                    return False
                assign[abs(unassigned)] = unassigned > 0
                trail.append(abs(unassigned))
                changed = True
        return True

    def search() -> bool:
        trail: list[int] = []
        if not propagate(trail):
            for v in trail:
                del assign[v]
            return False
        var = next((v for v in range(1, nvars + 1) if v not in assign), None)
        if var is None:
            return True
        for choice in (False, True):
            assign[var] = choice
            if search():
                return True
            del assign[var]
        for v in trail:
            del assign[v]
        return False

    if any(len(c) == 0 for c in clauses):
        return None
    if not search():
        return None
    return [assign.get(v, False) for v in range(1, nvars + 1)]


# --- theory checking --------------------------------------------------------------

def _pick_value(lo, lo_strict, hi, hi_strict) -> Fraction:
    """A witness inside the bound interval, preferring integer points so
    that branch-and-bound rarely has anything left to repair."""
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        if hi.denominator == 1:
            return hi - 1 if hi_strict else hi
        return Fraction(math.floor(hi))
    if hi is None:
        if lo.denominator == 1:
            return lo + 1 if lo_strict else lo
        return Fraction(math.ceil(lo))
    if lo == hi:
        return lo
    smallest = lo + 1 if (lo_strict and lo.denominator == 1) else Fraction(math.ceil(lo))
    if smallest < hi or (smallest == hi and not hi_strict):
        return smallest
    return (lo + hi) / 2


class Theory:
    """Exact-rational linear feasibility with integer branch-and-bound.

    Each satisfiable() call gets a fresh Fourier-Motzkin budget; integer
    branching on unbounded systems can diverge, and exhausting the budget
    raises BudgetExceeded instead.
    """

    def __init__(self, int_vars: frozenset[str]):
        self.int_vars = int_vars
        self._budget = BRANCH_BUDGET

    def _fm(self, rows):
        """rows: (terms dict, strict, const) meaning sum < / <= const.
        Returns a rational sample dict or None."""
        self._budget -= 1
        if self._budget <= 0:
            raise BudgetExceeded()
        variables = sorted({v for terms, _, _ in rows for v in terms})
        stack = []
        current = [(dict(t), s, c) for t, s, c in rows]
        for var in variables:
            uppers, lowers, rest = [], [], []
            for terms, strict, const in current:
                k = terms.get(var)
                if k is None or k == 0:
                    rest.append((terms, strict, const))
                elif k > 0:
                    uppers.append((terms, strict, const, k))
                else:
                    lowers.append((terms, strict, const, -k))
            stack.append((var, uppers, lowers))
            for ut, us, uc, uk in uppers:
                for lt, ls, lc, lk in lowers:
                    terms: dict[str, Fraction] = {}
                    for v, k in ut.items():
                        if v != var:
                            terms[v] = terms.get(v, Fraction(0)) + k * lk
                    for v, k in lt.items():
                        if v != var:
                            terms[v] = terms.get(v, Fraction(0)) + k * uk
                    terms = {v: k for v, k in terms.items() if k != 0}
                    rest.append((terms, us or ls, uc * lk + lc * uk))
            current = rest
        for terms, strict, const in current:
            if terms:
                continue
            if strict and not Fraction(0) < const:
                return None
            if not strict and not Fraction(0) <= const:
                return None
        sample: dict[str, Fraction] = {}
        for var, uppers, lowers in reversed(stack):
            hi = hi_strict = None
            lo = lo_strict = None
            for terms, strict, const, k in uppers:
                rest = sum((c * sample[v] for v, c in terms.items() if v != var), Fraction(0))
                bound = (const - rest) / k
                if hi is None or bound < hi or (bound == hi and strict):
                    hi, hi_strict = bound, strict
            for terms, strict, const, k in lowers:
                rest = sum((c * sample[v] for v, c in terms.items() if v != var), Fraction(0))
                bound = (rest - const) / k
                if lo is None or bound > lo or (bound == lo and strict):
                    lo, lo_strict = bound, strict
            sample[var] = _pick_value(lo, lo_strict, hi, hi_strict)
        return sample

    def _feasible_int(self, rows):
        sample = self._fm(rows)
        if sample is None:
            return None
        for var in sorted(sample):
            if var in self.int_vars and sample[var].denominator != 1:
                value = sample[var]
                floor = value.numerator // value.denominator
                down = rows + [({var: Fraction(1)}, False, Fraction(floor))]
                result = self._feasible_int(down)
                if result is not None:
                    return result
                up = rows + [({var: Fraction(-1)}, False, Fraction(-(floor + 1)))]
                return self._feasible_int(up)
        return sample

    def _expand(self, constraints):
        """Split disequalities; yields plain row lists."""
        index = next((i for i, (_, rel, _) in enumerate(constraints) if rel == "!="), None)
        if index is None:
            rows = []
            for terms, rel, const in constraints:
                if rel == "<=":
                    rows.append((terms, False, const))
                elif rel == "<":
                    rows.append((terms, True, const))
                else:  # "="
                    rows.append((terms, False, const))
                    rows.append(({v: -k for v, k in terms.items()}, False, -const))
            yield rows
            return
        terms, _, const = constraints[index]
        others = constraints[:index] + constraints[index + 1:]
        yield from self._expand(others + [(terms, "<", const)])
        yield from self._expand(others + [({v: -k for v, k in terms.items()}, "<", -const)])

    def satisfiable(self, constraints, budget: int = BRANCH_BUDGET):
        self._budget = budget
        for rows in self._expand(constraints):
            sample = self._feasible_int(rows)
            if sample is not None:
                return sample
        return None


def _negated(canon):
    terms, rel, const = canon
    terms = dict(terms)
    if rel == "<=":
        return {v: -k for v, k in terms.items()}, "<", -const
    if rel == "<":
        return {v: -k for v, k in terms.items()}, "<=", -const
    return terms, "!=", const


def _as_constraint(canon, truth: bool):
    terms, rel, const = canon
    if truth:
        return dict(terms), rel, const
    return _negated(canon)


def check(compiler: Compiler):
    """Lazy SMT loop: DPLL model, then theory check, else block and retry.

    Returns (verdict, bool assignment or None, numeric sample or None).
    """
    theory = Theory(frozenset(
        s for s, sort in compiler.sorts.items() if sort == "Int"))
    clauses = list(compiler.clauses)
    while True:
        model = dpll(compiler.nvars, clauses)
        if model is None:
            return "unsat", None, None
        if not compiler.atoms:
            return "sat", model, {}
        lits = [(var, model[var - 1]) for var in sorted(compiler.atoms)]
        constraints = [_as_constraint(compiler.atoms[var], truth)
                       for var, truth in lits]
        try:
            sample = theory.satisfiable(constraints)
        except BudgetExceeded:
            return "unknown", None, None
        if sample is not None:
            return "sat", model, sample
        # shrink the conflict greedily; a trial whose feasibility cannot be
        # settled within budget keeps its literal, so the core stays infeasible
        core = list(lits)
        for candidate in list(core):
            trial = [c for c in core if c != candidate]
            trial_cons = [_as_constraint(compiler.atoms[v], t) for v, t in trial]
            try:
                still_infeasible = theory.satisfiable(trial_cons, budget=100) is None
            except BudgetExceeded:
                still_infeasible = False
            if still_infeasible:
                core = trial
        clauses.append(tuple(-v if t else v for v, t in core))


# --- top level ----------------------------------------------------------------

def _print_symbol(sym: str) -> str:
    if sym and sym[0] in SIMPLE_HEAD and all(c in SIMPLE_TAIL for c in sym):
        return sym
    return f"|{sym}|"


def _print_value(value, sort: str) -> str:
    if sort == "Bool":
        return "true" if value else "false"
    if sort == "Int":
        v = int(value)
        return str(v) if v >= 0 else f"(- {-v})"
    v = Fraction(value)
    if v < 0:
        return f"(- {_print_value(-v, 'Real')})"
    if v.denominator == 1:
        return f"{v.numerator}.0"
    return f"(/ {v.numerator}.0 {v.denominator}.0)"


def run(text: str, out=sys.stdout) -> int:
    sys.setrecursionlimit(20000)
    compiler = Compiler()
    model = sample = None
    verdict = None
    for form in parse_all(tokenize(text)):
        if not isinstance(form, list) or not form:
            raise Unsupported(f"unexpected top-level form {form!r}")
        head = form[0]
        if head in ("set-logic", "set-option", "set-info"):
            continue
        if head == "declare-fun":
            if len(form) != 4 or form[2] != []:
                raise Unsupported("only zero-arity declare-fun is supported")
            compiler.declare(_name(form[1]), _name(form[3]))
        elif head == "declare-const":
            if len(form) != 3:
                raise Unsupported("malformed declare-const")
            compiler.declare(_name(form[1]), _name(form[2]))
        elif head == "assert":
            if len(form) != 2:
                raise Unsupported("assert takes one term")
            compiler.assert_term(form[1])
        elif head == "check-sat":
            verdict, model, sample = check(compiler)
            print(verdict, file=out)
        elif head == "get-value":
            if verdict != "sat":
                print('(error "model is not available")', file=out)
                continue
            parts = []
            for sym_node in form[1]:
                sym = _name(sym_node)
                sort = compiler.sorts.get(sym)
                if sort is None:
                    raise Unsupported(f"get-value of undeclared symbol {sym!r}")
                if sort == "Bool":
                    idx = compiler.var_index[sym]
                    value = model[idx - 1]
                else:
                    value = sample.get(sym, Fraction(0)) if sample else Fraction(0)
                parts.append(f"({_print_symbol(sym)} {_print_value(value, sort)})")
            print(f"({' '.join(parts)})", file=out)
        elif head == "exit":
            break
        else:
            raise Unsupported(f"unsupported command {head!r}")
    return 0


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 1:
        print("usage: python -m aspsmt.refsolver FILE", file=sys.stderr)
        return 2
    if argv[0] == "-":
        text = sys.stdin.read()
    else:
        with open(argv[0], "r", encoding="utf-8") as handle:
            text = handle.read()
    try:
        return run(text)
    except Unsupported as exc:
        print(f'(error "{exc}")', file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
