"""Clark completion of a normal program as Boolean formulas.

Rule bodies with two or more literals get a hidden definitional auxiliary
(bd_<rule index>) so the per-atom equivalence stays flat; shorter bodies are
inlined. Compute assumptions are appended as unit literals.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import formula as fm
from .names import atom_symbol, body_aux_symbol
from .program import BASIC, Program


@dataclass(frozen=True)
class BodyRefs:
    """Per-rule body representation shared by completion and ranking.

    ``ref[i]`` is what stands for rule i's body inside larger formulas:
    the bd_ auxiliary variable, the single inlined literal, or TRUE for
    empty bodies. ``defs[i]`` (present only when an auxiliary was created)
    is the definitional equivalence bd_i <-> body.
    """

    ref: dict[int, fm.Formula]
    defs: dict[int, fm.Formula]


def body_formula(p: Program, rule_index: int) -> fm.Formula:
    r = p.rules[rule_index]
    lits = [fm.Var(atom_symbol(p, b)) for b in r.pos_body]
    lits += [fm.not_(fm.Var(atom_symbol(p, b))) for b in r.neg_body]
    return fm.and_(lits)


def body_refs(p: Program) -> BodyRefs:
    ref: dict[int, fm.Formula] = {}
    defs: dict[int, fm.Formula] = {}
    for i, r in enumerate(p.rules):
        if len(r.pos_body) + len(r.neg_body) >= 2:
            aux = fm.Var(body_aux_symbol(i))
            defs[i] = fm.Iff(aux, body_formula(p, i))
            ref[i] = aux
        else:
            ref[i] = body_formula(p, i)
    return BodyRefs(ref=ref, defs=defs)


def clark_completion(p: Program) -> list[fm.Formula]:
    """One equivalence per atom (ascending id), preceded by the definitional
    formulas of the body auxiliaries its rules use, followed by assumption
    literals. Atoms without rules complete to falsity."""
    if any(r.kind != BASIC for r in p.rules):
        raise ValueError("clark_completion requires a normal program")

    refs = body_refs(p)
    rules_of: dict[int, list[int]] = {}
    for i, r in enumerate(p.rules):
        rules_of.setdefault(r.head, []).append(i)

    out: list[fm.Formula] = []
    for atom_id in p.atom_ids():
        indices = rules_of.get(atom_id, [])
        for i in indices:
            if i in refs.defs:
                out.append(refs.defs[i])
        head = fm.Var(atom_symbol(p, atom_id))
        out.append(fm.iff(head, fm.or_(refs.ref[i] for i in indices)))

    for atom_id in sorted(p.assume_true):
        out.append(fm.Var(atom_symbol(p, atom_id)))
    for atom_id in sorted(p.assume_false):
        out.append(fm.not_(fm.Var(atom_symbol(p, atom_id))))
    return out
