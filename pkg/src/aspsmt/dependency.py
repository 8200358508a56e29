"""Positive dependency graph, strongly connected components, tightness.

Component indices form a topological numbering of the condensation: for
every edge head -> positive body atom, componentOf(head) >= componentOf(atom).
Numbering is deterministic; ties are broken by the smallest atom id a
component contains.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .program import BASIC, Program


@dataclass(frozen=True)
class DependencyInfo:
    edges: dict[int, tuple[int, ...]]  # rule head -> distinct posBody atoms, ascending
    component_of: dict[int, int]
    component_size: dict[int, int]
    members: dict[int, tuple[int, ...]]  # component -> atoms, ascending
    nontrivial_sccs: frozenset[int]  # size > 1, or size 1 with a self-loop


def _tarjan(vertices: list[int], succ: dict[int, list[int]]) -> list[list[int]]:
    """Iterative Tarjan; components in (reverse topological) pop order."""
    index: dict[int, int] = {}
    lowlink: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    counter = 0
    components: list[list[int]] = []

    for root in vertices:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            children = succ.get(v, [])
            for i in range(pi, len(children)):
                w = children[i]
                if w not in index:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if recurse:
                continue
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    return components


def compute_dependency(p: Program) -> DependencyInfo:
    """Build the positive dependency graph of a normal program and its SCCs."""
    if any(r.kind != BASIC for r in p.rules):
        raise ValueError("compute_dependency requires a normal program; run eliminate_choice_rules first")

    vertices: set[int] = set()
    edge_sets: dict[int, set[int]] = {}
    for r in p.rules:
        vertices.add(r.head)
        vertices.update(r.pos_body)
        vertices.update(r.neg_body)
        if r.pos_body:
            edge_sets.setdefault(r.head, set()).update(r.pos_body)
    ordered = sorted(vertices)
    succ = {v: sorted(edge_sets.get(v, ())) for v in ordered}

    comps = _tarjan(ordered, succ)

    # Renumber: sinks-first topological order over the condensation, ties by
    # smallest contained atom id (gives edges from higher to lower index).
    comp_idx_of = {v: i for i, comp in enumerate(comps) for v in comp}
    out_succ: list[set[int]] = [set() for _ in comps]
    preds: list[set[int]] = [set() for _ in comps]
    for v in ordered:
        cv = comp_idx_of[v]
        for w in succ[v]:
            cw = comp_idx_of[w]
            if cv != cw:
                out_succ[cv].add(cw)
                preds[cw].add(cv)
    outdeg = [len(s) for s in out_succ]
    heap = [(min(comp), i) for i, comp in enumerate(comps) if outdeg[i] == 0]
    heapq.heapify(heap)
    order: dict[int, int] = {}
    next_index = 0
    while heap:
        _, ci = heapq.heappop(heap)
        order[ci] = next_index
        next_index += 1
        for pi in preds[ci]:
            outdeg[pi] -= 1
            if outdeg[pi] == 0:
                heapq.heappush(heap, (min(comps[pi]), pi))
    assert next_index == len(comps), "condensation was not acyclic"

    component_of = {v: order[comp_idx_of[v]] for v in ordered}
    members = {order[i]: tuple(sorted(comp)) for i, comp in enumerate(comps)}
    component_size = {i: len(m) for i, m in members.items()}
    nontrivial = frozenset(
        i for i, m in members.items()
        if len(m) > 1 or m[0] in edge_sets.get(m[0], ()))

    edges = {h: tuple(sorted(s)) for h, s in sorted(edge_sets.items())}
    return DependencyInfo(
        edges=edges,
        component_of=component_of,
        component_size=component_size,
        members=members,
        nontrivial_sccs=nontrivial,
    )


def is_tight(d: DependencyInfo) -> bool:
    """True iff the positive dependency graph has no cycle."""
    return not d.nontrivial_sccs


def ranking_upper_bound(d: DependencyInfo, scc: int) -> int:
    """Upper bound for ranking variables of atoms in a recursive component."""
    if scc not in d.nontrivial_sccs:
        raise ValueError(f"component {scc} is not recursive")
    return d.component_size[scc]
