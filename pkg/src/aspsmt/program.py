"""Ground program data model, smodels numeric format I/O, choice-rule elimination.

The smodels numeric format is the classic lparse/gringo intermediate format:
a block of rule lines terminated by ``0``, a symbol table terminated by ``0``,
a ``B+`` and a ``B-`` compute section each terminated by ``0``, and a final
line holding the requested model count (0 = all).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import ContradictoryCompute, MalformedInput, UnsupportedRuleType

BASIC = 1
CHOICE = 3


@dataclass(frozen=True)
class Atom:
    """A ground atom. ``name`` is None for hidden/auxiliary atoms."""

    id: int
    name: str | None = None

    @property
    def visible(self) -> bool:
        return self.name is not None


@dataclass(frozen=True)
class Rule:
    kind: int  # BASIC or CHOICE
    heads: tuple[int, ...]
    pos_body: tuple[int, ...]
    neg_body: tuple[int, ...]

    @property
    def head(self) -> int:
        """Single head of a basic rule."""
        assert self.kind == BASIC
        return self.heads[0]


@dataclass(frozen=True)
class Program:
    """An immutable ground program plus compute-statement assumptions.

    ``atoms`` maps every atom id referenced anywhere to its Atom record.
    ``choice_aux`` maps auxiliary atom ids introduced by choice elimination
    back to the original head atom id; these never appear in symbol tables,
    blocking formulas, or printed answer sets.
    """

    rules: tuple[Rule, ...]
    atoms: dict[int, Atom]
    assume_true: frozenset[int] = frozenset()
    assume_false: frozenset[int] = frozenset()
    models_requested: int = 1
    choice_aux: dict[int, int] = field(default_factory=dict)

    def visible_atoms(self) -> list[Atom]:
        """Named atoms, ascending id."""
        return [a for _, a in sorted(self.atoms.items()) if a.visible]

    def atom_ids(self) -> list[int]:
        return sorted(self.atoms)


def _dedupe(ids: list[int]) -> tuple[int, ...]:
    seen: set[int] = set()
    out = []
    for i in ids:
        if i not in seen:
            seen.add(i)
            out.append(i)
    return tuple(out)


class _Lines:
    """Line cursor with 1-based positions for error messages."""

    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def next(self, what: str) -> str:
        if self.pos >= len(self.lines):
            raise MalformedInput(f"unexpected end of input while reading {what}")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def rest_is_blank(self) -> bool:
        return all(not line.strip() for line in self.lines[self.pos:])

    @property
    def lineno(self) -> int:
        return self.pos


def _int_token(tok: str, what: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MalformedInput(f"line {lineno}: non-numeric token {tok!r} in {what}") from None


def _atom_id(tok: str, what: str, lineno: int) -> int:
    value = _int_token(tok, what, lineno)
    if value < 1:
        raise MalformedInput(f"line {lineno}: atom id must be >= 1, got {value} in {what}")
    return value


def _parse_body(tokens: list[str], start: int, lineno: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Parse ``n m neg... pos...`` starting at tokens[start]."""
    if len(tokens) < start + 2:
        raise MalformedInput(f"line {lineno}: truncated rule body header")
    n = _int_token(tokens[start], "body literal count", lineno)
    m = _int_token(tokens[start + 1], "negative literal count", lineno)
    if n < 0 or m < 0 or m > n:
        raise MalformedInput(f"line {lineno}: inconsistent literal counts n={n} m={m}")
    lits = tokens[start + 2:]
    if len(lits) != n:
        raise MalformedInput(
            f"line {lineno}: rule declares {n} body literals but carries {len(lits)}")
    neg = [_atom_id(t, "negative body", lineno) for t in lits[:m]]
    pos = [_atom_id(t, "positive body", lineno) for t in lits[m:]]
    return _dedupe(pos), _dedupe(neg)


def parse_smodels(text: str | bytes) -> Program:
    """Parse a complete smodels-format document into a Program.

    Only rule types 1 (basic) and 3 (choice) are accepted; anything else
    raises UnsupportedRuleType. Rules whose body mentions an atom both
    positively and negatively are never applicable and are dropped here.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    src = _Lines(text)

    rules: list[Rule] = []
    referenced: set[int] = set()
    while True:
        line = src.next("rule section")
        tokens = line.split()
        if not tokens:
            raise MalformedInput(f"line {src.lineno}: blank line inside rule section")
        if tokens == ["0"]:
            break
        kind = _int_token(tokens[0], "rule type", src.lineno)
        if kind == BASIC:
            if len(tokens) < 2:
                raise MalformedInput(f"line {src.lineno}: basic rule missing head")
            head = _atom_id(tokens[1], "rule head", src.lineno)
            pos, neg = _parse_body(tokens, 2, src.lineno)
            heads = (head,)
        elif kind == CHOICE:
            if len(tokens) < 2:
                raise MalformedInput(f"line {src.lineno}: choice rule missing head count")
            k = _int_token(tokens[1], "choice head count", src.lineno)
            if k < 1:
                raise MalformedInput(f"line {src.lineno}: choice rule needs at least one head")
            if len(tokens) < 2 + k:
                raise MalformedInput(f"line {src.lineno}: choice rule declares {k} heads but line is short")
            heads = _dedupe([_atom_id(t, "choice head", src.lineno) for t in tokens[2:2 + k]])
            pos, neg = _parse_body(tokens, 2 + k, src.lineno)
        else:
            raise UnsupportedRuleType(
                f"line {src.lineno}: rule type {kind} is not supported "
                f"(only 1 = basic and 3 = choice)")
        referenced.update(heads)
        referenced.update(pos)
        referenced.update(neg)
        if set(pos) & set(neg):
            continue  # body requires a and not a: never applicable
        rules.append(Rule(kind, heads, pos, neg))

    names: dict[int, str] = {}
    used_names: set[str] = set()
    while True:
        line = src.next("symbol table")
        if line.strip() == "0":
            break
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise MalformedInput(f"line {src.lineno}: symbol table entry needs 'id name'")
        atom_id = _atom_id(parts[0], "symbol table", src.lineno)
        name = parts[1].strip()
        if not name:
            raise MalformedInput(f"line {src.lineno}: empty atom name")
        if "|" in name or "\\" in name:
            raise MalformedInput(
                f"line {src.lineno}: atom name {name!r} contains a character "
                f"that cannot be represented as an SMT-LIB symbol")
        if atom_id in names:
            raise MalformedInput(f"line {src.lineno}: duplicate symbol table id {atom_id}")
        if name in used_names:
            raise MalformedInput(f"line {src.lineno}: duplicate atom name {name!r}")
        names[atom_id] = name
        used_names.add(name)

    def compute_section(marker: str) -> frozenset[int]:
        header = src.next(f"{marker} section").strip()
        if header != marker:
            raise MalformedInput(f"line {src.lineno}: expected {marker!r}, got {header!r}")
        ids: set[int] = set()
        while True:
            line = src.next(f"{marker} section")
            if line.strip() == "0":
                return frozenset(ids)
            for tok in line.split():
                ids.add(_atom_id(tok, f"{marker} section", src.lineno))

    assume_true = compute_section("B+")
    assume_false = compute_section("B-")
    both = assume_true & assume_false
    if both:
        raise ContradictoryCompute(
            f"atoms {sorted(both)} occur in both B+ and B-")

    footer = src.next("model count").strip()
    models = _int_token(footer, "model count", src.lineno)
    if models < 0:
        raise MalformedInput(f"line {src.lineno}: model count must be >= 0")
    if not src.rest_is_blank():
        raise MalformedInput(f"line {src.lineno + 1}: trailing content after model count")

    referenced |= assume_true | assume_false | set(names)
    atoms = {i: Atom(i, names.get(i)) for i in sorted(referenced)}
    return Program(
        rules=tuple(rules),
        atoms=atoms,
        assume_true=assume_true,
        assume_false=assume_false,
        models_requested=models,
    )


def serialize_smodels(p: Program) -> str:
    """Render a Program back to smodels text (inverse of parse_smodels)."""
    out: list[str] = []
    for r in p.rules:
        body = [str(len(r.pos_body) + len(r.neg_body)), str(len(r.neg_body))]
        body += [str(a) for a in r.neg_body] + [str(a) for a in r.pos_body]
        if r.kind == BASIC:
            out.append(" ".join(["1", str(r.head)] + body))
        else:
            out.append(" ".join(["3", str(len(r.heads))] + [str(h) for h in r.heads] + body))
    out.append("0")
    for atom in p.visible_atoms():
        out.append(f"{atom.id} {atom.name}")
    out.append("0")
    out.append("B+")
    out.extend(str(a) for a in sorted(p.assume_true))
    out.append("0")
    out.append("B-")
    out.extend(str(a) for a in sorted(p.assume_false))
    out.append("0")
    out.append(str(p.models_requested))
    return "\n".join(out) + "\n"


def eliminate_choice_rules(p: Program) -> Program:
    """Rewrite every choice rule into basic rules over fresh hidden atoms.

    ``{a1..ak} :- B`` becomes, for each head ai with auxiliary ai',
    ``ai :- B, not ai'`` and ``ai' :- not ai``. One auxiliary is shared by
    all choice occurrences of the same head atom; its id is allocated
    deterministically from the head's rank among choice heads.
    """
    if all(r.kind == BASIC for r in p.rules):
        return p

    choice_heads = sorted({h for r in p.rules if r.kind == CHOICE for h in r.heads})
    next_id = max(p.atoms) + 1 if p.atoms else 1
    aux_of = {h: next_id + i for i, h in enumerate(choice_heads)}

    rules: list[Rule] = []
    aux_emitted: set[int] = set()
    for r in p.rules:
        if r.kind == BASIC:
            rules.append(r)
            continue
        for h in r.heads:
            aux = aux_of[h]
            rules.append(Rule(BASIC, (h,), r.pos_body, r.neg_body + (aux,)))
            if h not in aux_emitted:
                aux_emitted.add(h)
                rules.append(Rule(BASIC, (aux,), (), (h,)))

    atoms = dict(p.atoms)
    for h, aux in aux_of.items():
        atoms[aux] = Atom(aux)
    choice_aux = dict(p.choice_aux)
    choice_aux.update({aux: h for h, aux in aux_of.items()})
    return replace(p, rules=tuple(rules), atoms=atoms, choice_aux=choice_aux)
