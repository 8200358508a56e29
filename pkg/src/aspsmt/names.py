"""Emitted symbol names.

Reserved prefixes keep internal symbols apart from user atoms:
``lr_`` ranking variables, ``bd_`` rule-body auxiliaries, ``ch_`` choice
auxiliaries, ``ax_`` unnamed input atoms. A user name starting with any
reserved prefix (or the escape prefix ``u_`` itself) is escaped by
prepending ``u_``, which keeps the name map injective.
"""

from __future__ import annotations

from .program import Program

RESERVED_PREFIXES = ("lr_", "bd_", "ch_", "ax_", "u_")


def escape(name: str) -> str:
    if name.startswith(RESERVED_PREFIXES):
        return "u_" + name
    return name


def atom_symbol(p: Program, atom_id: int) -> str:
    atom = p.atoms[atom_id]
    if atom.name is not None:
        return escape(atom.name)
    if atom_id in p.choice_aux:
        return f"ch_{p.choice_aux[atom_id]}"
    return f"ax_{atom_id}"


def ranking_symbol(p: Program, atom_id: int) -> str:
    return "lr_" + atom_symbol(p, atom_id)


def body_aux_symbol(rule_index: int) -> str:
    return f"bd_{rule_index}"


def numeric_symbol(var_name: str) -> str:
    return escape(var_name)


def visible_name_map(p: Program) -> list[tuple[str, str]]:
    """(user name, emitted symbol) for every visible atom, ascending id."""
    return [(a.name, atom_symbol(p, a.id)) for a in p.visible_atoms()]
