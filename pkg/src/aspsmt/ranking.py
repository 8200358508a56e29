"""Level-ranking formulas for non-tight programs.

Every atom of a recursive component C gets a bounded integer rank in
[1, |C|]; a true atom must be supported by a rule whose body holds and whose
positive body atoms inside C all have strictly smaller ranks. Rules reaching
into C from outside carry no rank comparisons, so they ground the ranking.
Atoms outside recursive components contribute nothing, and tight programs
produce no formulas at all.
"""

from __future__ import annotations

from . import formula as fm
from .completion import body_refs
from .dependency import DependencyInfo, is_tight, ranking_upper_bound
from .names import atom_symbol, ranking_symbol
from .program import Program


def ranked_atoms(p: Program, d: DependencyInfo) -> list[int]:
    """Atoms that carry a ranking variable, ascending id."""
    return sorted(a for a, c in d.component_of.items() if c in d.nontrivial_sccs)


def level_ranking_formulas(p: Program, d: DependencyInfo) -> list[fm.Formula]:
    if is_tight(d):
        return []

    atoms = ranked_atoms(p, d)
    refs = body_refs(p)
    rules_of: dict[int, list[int]] = {}
    for i, r in enumerate(p.rules):
        rules_of.setdefault(r.head, []).append(i)

    out: list[fm.Formula] = []
    for a in atoms:
        rank = fm.lin_var(ranking_symbol(p, a))
        bound = ranking_upper_bound(d, d.component_of[a])
        out.append(fm.And((
            fm.Cmp(fm.lin_const(1), "<=", rank),
            fm.Cmp(rank, "<=", fm.lin_const(bound)),
        )))

    for a in atoms:
        comp = d.component_of[a]
        supports = []
        for i in rules_of.get(a, []):
            r = p.rules[i]
            comparisons = [
                fm.rank_gt(ranking_symbol(p, a), ranking_symbol(p, b))
                for b in r.pos_body if d.component_of.get(b) == comp
            ]
            supports.append(fm.and_([refs.ref[i]] + comparisons))
        support = fm.implies(fm.Var(atom_symbol(p, a)), fm.or_(supports))
        if not isinstance(support, fm.TrueF):
            out.append(support)
    return out
