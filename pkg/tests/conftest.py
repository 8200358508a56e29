"""Shared fixtures: a tiny rule-text DSL for building ground programs,
random program generators, and the solver backends under test."""

from __future__ import annotations

import random
import shutil
from pathlib import Path

import pytest

from aspsmt.program import BASIC, CHOICE, Atom, Program, Rule
from aspsmt.solver import default_solver_command

REPO_ROOT = Path(__file__).resolve().parent.parent
Z3_SCRIPT = REPO_ROOT / "solvers" / "z3wasm" / "z3smt2.js"
Z3_INSTALLED = (REPO_ROOT / "solvers" / "z3wasm" / "node_modules" / "z3-solver").is_dir()

REF_SOLVER = default_solver_command()
Z3_SOLVER = f"node {Z3_SCRIPT} {{file}}" if Z3_INSTALLED and shutil.which("node") else None


def solver_backends():
    backends = [pytest.param(REF_SOLVER, id="refsolver")]
    if Z3_SOLVER:
        backends.append(pytest.param(Z3_SOLVER, id="z3"))
    else:
        backends.append(pytest.param(
            None, id="z3",
            marks=pytest.mark.skip(reason="z3 backend not installed; run npm install in solvers/z3wasm")))
    return backends


@pytest.fixture(params=solver_backends())
def solver_command(request):
    return request.param


@pytest.fixture
def ref_solver():
    return REF_SOLVER


def prog(text: str, assume_true=(), assume_false=(), models=0, hidden=()) -> Program:
    """Build a Program from rule text, one rule per line.

    Syntax: ``a :- b, not c.``  ``b.``  ``{a; b} :- c.``  Atom ids are
    assigned in order of first appearance. Names listed in ``hidden`` get no
    symbol-table entry.
    """
    ids: dict[str, int] = {}

    def atom(name: str) -> int:
        name = name.strip()
        if name not in ids:
            ids[name] = len(ids) + 1
        return ids[name]

    rules = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        assert line.endswith("."), f"rule must end with '.': {line!r}"
        line = line[:-1].strip()
        if ":-" in line:
            head_text, body_text = line.split(":-", 1)
        else:
            head_text, body_text = line, ""
        head_text = head_text.strip()
        if head_text.startswith("{"):
            assert head_text.endswith("}")
            heads = tuple(atom(h) for h in head_text[1:-1].split(";"))
            kind = CHOICE
        else:
            heads = (atom(head_text),)
            kind = BASIC
        pos, neg = [], []
        for lit in filter(None, (s.strip() for s in body_text.split(","))):
            if lit.startswith("not "):
                neg.append(atom(lit[4:]))
            else:
                pos.append(atom(lit))
        rules.append(Rule(kind, heads, tuple(pos), tuple(neg)))

    atoms = {i: Atom(i, None if name in hidden else name) for name, i in ids.items()}
    return Program(
        rules=tuple(rules),
        atoms=atoms,
        assume_true=frozenset(ids[a] for a in assume_true),
        assume_false=frozenset(ids[a] for a in assume_false),
        models_requested=models,
    )


def random_normal_program(rng: random.Random, max_atoms=10, max_rules=15,
                          tight=False, cycle_bias=False,
                          with_assumptions=False) -> Program:
    """Random ground normal program over named atoms a1..ak.

    ``tight=True`` restricts positive bodies to strictly larger atom ids, so
    the positive dependency graph is acyclic by construction. ``cycle_bias``
    plants a positive cycle most of the time.
    """
    n = rng.randint(1, max_atoms)
    atom_ids = list(range(1, n + 1))
    rules = []
    base_budget = max(1, max_rules - 4) if cycle_bias else max_rules
    for _ in range(rng.randint(1, base_budget)):
        head = rng.choice(atom_ids)
        pool = [a for a in atom_ids if a > head] if tight else list(atom_ids)
        n_pos = rng.randint(0, min(2, len(pool)))
        pos = rng.sample(pool, n_pos) if pool else []
        neg_pool = [a for a in atom_ids if a not in pos]
        neg = rng.sample(neg_pool, rng.randint(0, min(2, len(neg_pool))))
        rules.append(Rule(BASIC, (head,), tuple(pos), tuple(neg)))
    if cycle_bias and n >= 2 and rng.random() < 0.85:
        length = rng.randint(2, min(4, n))
        cycle = rng.sample(atom_ids, length)
        for i, a in enumerate(cycle):
            b = cycle[(i + 1) % length]
            extra_neg = tuple(rng.sample(atom_ids, rng.randint(0, 1)))
            rules.append(Rule(BASIC, (a,), (b,), extra_neg))
    elif cycle_bias and rng.random() < 0.5:
        a = rng.choice(atom_ids)
        rules.append(Rule(BASIC, (a,), (a,), ()))

    assume_true: frozenset[int] = frozenset()
    assume_false: frozenset[int] = frozenset()
    if with_assumptions and rng.random() < 0.3:
        assume_true = frozenset(rng.sample(atom_ids, rng.randint(0, 1)))
        remaining = [a for a in atom_ids if a not in assume_true]
        if remaining and rng.random() < 0.5:
            assume_false = frozenset(rng.sample(remaining, 1))

    atoms = {i: Atom(i, f"a{i}") for i in atom_ids}
    return Program(rules=tuple(rules), atoms=atoms,
                   assume_true=assume_true, assume_false=assume_false,
                   models_requested=0)


def random_choice_program(rng: random.Random, max_atoms=8, max_rules=10) -> Program:
    p = random_normal_program(rng, max_atoms=max_atoms, max_rules=max_rules)
    atom_ids = sorted(p.atoms)
    rules = list(p.rules)
    for _ in range(rng.randint(1, 3)):
        heads = tuple(rng.sample(atom_ids, rng.randint(1, min(2, len(atom_ids)))))
        pool = [a for a in atom_ids if a not in heads]
        pos = tuple(rng.sample(pool, rng.randint(0, min(1, len(pool)))))
        neg_pool = [a for a in pool if a not in pos]
        neg = tuple(rng.sample(neg_pool, rng.randint(0, min(1, len(neg_pool)))))
        rules.append(Rule(CHOICE, heads, pos, neg))
    rng.shuffle(rules)
    return Program(rules=tuple(rules), atoms=dict(p.atoms), models_requested=0)


def hamiltonian_cycle_program(n: int = 4) -> Program:
    """Ground Hamiltonian-cycle encoding on the complete digraph K_n.

    Choice over every arc; pairwise at-most-one constraints per source and
    per target feed a shared ``bad`` atom forced false; recursive
    reachability from vertex 1 must cover every vertex (compute B+), which
    closes the cycle. Stable models = directed Hamiltonian cycles = (n-1)!.
    """
    import itertools

    verts = list(range(1, n + 1))
    ids: dict[str, int] = {}

    def atom(name: str) -> int:
        if name not in ids:
            ids[name] = len(ids) + 1
        return ids[name]

    edges = [(i, j) for i in verts for j in verts if i != j]
    arc = {e: atom(f"in({e[0]},{e[1]})") for e in edges}
    reached = {v: atom(f"r({v})") for v in verts}
    bad = atom("bad")

    rules = [Rule(CHOICE, (arc[e],), (), ()) for e in edges]
    for j in verts[1:]:
        rules.append(Rule(BASIC, (reached[j],), (arc[(1, j)],), ()))
    for i in verts[1:]:
        for j in verts:
            if i != j:
                rules.append(Rule(BASIC, (reached[j],), (reached[i], arc[(i, j)]), ()))
    for i in verts:
        for a, b in itertools.combinations([j for j in verts if j != i], 2):
            rules.append(Rule(BASIC, (bad,), (arc[(i, a)], arc[(i, b)]), ()))
    for j in verts:
        for a, b in itertools.combinations([i for i in verts if i != j], 2):
            rules.append(Rule(BASIC, (bad,), (arc[(a, j)], arc[(b, j)]), ()))

    atoms = {i: Atom(i, name) for name, i in ids.items()}
    return Program(rules=tuple(rules), atoms=atoms,
                   assume_true=frozenset(reached.values()),
                   assume_false=frozenset({bad}), models_requested=0)


def oracle_visible_sets(p: Program, cap: int = 16) -> set[frozenset[str]]:
    """Brute-force answer sets projected to visible atom names."""
    from aspsmt.oracle import brute_force_answer_sets
    names = {a.id: a.name for a in p.visible_atoms()}
    return {
        frozenset(names[i] for i in interp if i in names)
        for interp in brute_force_answer_sets(p, cap=cap)
    }


def pipeline_sets(p: Program, solver: str, decls=None, n: int = 0) -> set[frozenset[str]]:
    """Answer sets from the full SMT pipeline, as sets of visible names."""
    from aspsmt.enumeration import enumerate_answer_sets
    from aspsmt.theory import EMPTY_THEORY
    result = enumerate_answer_sets(p, decls or EMPTY_THEORY, n=n, solver_command=solver)
    assert not result.unknown, "solver returned unknown during enumeration"
    return {frozenset(m.true_atoms) for m in result.answer_sets}
