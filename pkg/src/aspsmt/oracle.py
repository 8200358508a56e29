"""Brute-force ground truth, independent of the SMT pipeline.

Answer sets come straight from the definition: an interpretation is stable
iff it equals the least model of the program's reduct. Choice rules are
handled directly (a head survives the reduct iff it is in the candidate).
Completion models are found by exhaustive assignment with body auxiliaries
evaluated definitionally. Interpretations are id sets; the enumeration order
is the binary counter over ascending atom ids.
"""

from __future__ import annotations

import itertools

from . import formula as fm
from .completion import clark_completion
from .dependency import DependencyInfo
from .errors import TooLarge
from .names import atom_symbol, body_aux_symbol
from .program import BASIC, Program, Rule

Interpretation = frozenset[int]

DEFAULT_CAP = 16


def gl_reduct(p: Program, interp: Interpretation) -> Program:
    """Reduct of a normal program: drop rules with a negative body atom in
    the interpretation, strip negative bodies from the rest."""
    if any(r.kind != BASIC for r in p.rules):
        raise ValueError("gl_reduct is defined for normal programs")
    rules = tuple(
        Rule(BASIC, r.heads, r.pos_body, ())
        for r in p.rules if not (set(r.neg_body) & interp))
    return Program(rules=rules, atoms=dict(p.atoms),
                   models_requested=p.models_requested, choice_aux=dict(p.choice_aux))


def least_model(p: Program) -> Interpretation:
    """Least fixpoint of one-step rule application, starting from the empty set."""
    if any(r.neg_body for r in p.rules):
        raise ValueError("least_model requires a negation-free program")
    if any(r.kind != BASIC for r in p.rules):
        raise ValueError("least_model requires a normal program")
    model: set[int] = set()
    changed = True
    while changed:
        changed = False
        for r in p.rules:
            if r.head not in model and all(b in model for b in r.pos_body):
                model.add(r.head)
                changed = True
    return frozenset(model)


def _check_cap(p: Program, cap: int) -> list[int]:
    ids = p.atom_ids()
    if len(ids) > cap:
        raise TooLarge(f"{len(ids)} atoms exceeds the brute-force cap of {cap}")
    return ids


def brute_force_answer_sets(p: Program, cap: int = DEFAULT_CAP) -> list[Interpretation]:
    """All stable models, filtered by the compute assumptions."""
    ids = _check_cap(p, cap)
    bit = {a: 1 << i for i, a in enumerate(ids)}
    rules = [
        (r.kind,
         bit[r.heads[0]] if r.kind == BASIC else sum(bit[h] for h in set(r.heads)),
         sum(bit[b] for b in r.pos_body),
         sum(bit[b] for b in r.neg_body))
        for r in p.rules
    ]
    must = sum(bit[a] for a in p.assume_true)
    forbid = sum(bit[a] for a in p.assume_false)

    out: list[Interpretation] = []
    for x in range(1 << len(ids)):
        if (x & must) != must or (x & forbid):
            continue
        # least model of the reduct w.r.t. x
        lm = 0
        changed = True
        while changed:
            changed = False
            for kind, heads, pos, neg in rules:
                if neg & x:
                    continue
                if (lm & pos) != pos:
                    continue
                add = heads if kind == BASIC else heads & x
                if add & ~lm:
                    lm |= add
                    changed = True
        if lm == x:
            out.append(frozenset(a for a in ids if x & bit[a]))
    return out


def brute_force_completion_models(p: Program, cap: int = DEFAULT_CAP) -> list[Interpretation]:
    """Assignments over program atoms satisfying the Clark completion, with
    body auxiliaries forced to their defining bodies."""
    ids = _check_cap(p, cap)
    formulas = clark_completion(p)
    sym = {a: atom_symbol(p, a) for a in ids}

    aux_defs: list[tuple[str, fm.Formula]] = []
    for i, r in enumerate(p.rules):
        if len(r.pos_body) + len(r.neg_body) >= 2:
            body = fm.and_(
                [fm.Var(sym[b]) for b in r.pos_body]
                + [fm.not_(fm.Var(sym[b])) for b in r.neg_body])
            aux_defs.append((body_aux_symbol(i), body))

    out: list[Interpretation] = []
    for bits in range(1 << len(ids)):
        env = {sym[a]: bool(bits & (1 << i)) for i, a in enumerate(ids)}
        for aux, body in aux_defs:
            env[aux] = fm.evaluate(body, env)
        if all(fm.evaluate(f, env) for f in formulas):
            out.append(frozenset(a for i, a in enumerate(ids) if bits & (1 << i)))
    return out


def find_level_ranking(p: Program, d: DependencyInfo,
                       interp: Interpretation) -> dict[int, int] | None:
    """Exhaustively search a level ranking witnessing the interpretation,
    with ranks in [1, |SCC|] per recursive component. Returns atom -> rank
    over the true atoms of recursive components, or None."""
    supports: dict[int, list[Rule]] = {}
    for r in p.rules:
        if set(r.neg_body) & interp or not set(r.pos_body) <= interp:
            continue
        supports.setdefault(r.head, []).append(r)

    ranking: dict[int, int] = {}
    for comp in sorted(d.nontrivial_sccs):
        members = d.members[comp]
        true_atoms = [a for a in members if a in interp]
        if not true_atoms:
            continue
        size = len(members)
        found = None
        for values in itertools.product(range(1, size + 1), repeat=len(true_atoms)):
            rank = dict(zip(true_atoms, values))
            ok = True
            for a in true_atoms:
                supported = False
                for r in supports.get(a, []):
                    if all(rank[a] > rank[b] for b in r.pos_body
                           if d.component_of.get(b) == comp):
                        supported = True
                        break
                if not supported:
                    ok = False
                    break
            if ok:
                found = rank
                break
        if found is None:
            return None
        ranking.update(found)
    return ranking
