"""External SMT solver invocation and response parsing.

Each solve call is stateless: the SMT-LIB text goes to a temporary file, the
solver command template runs on it, and stdout is parsed for the status token
and the get-value response. Values come back exact: bool, int, or Fraction.
"""

from __future__ import annotations

import re
import shlex
import subprocess
import sys
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import SolverCrashed, SolverNotFound, UnparseableResponse

Value = bool | int | Fraction


@dataclass(frozen=True)
class SatResult:
    verdict: str  # "sat" | "unsat" | "unknown"
    assignment: dict[str, Value] | None  # present iff sat
    stderr: str = ""
    elapsed: float = 0.0
    timed_out: bool = False


def _tokenize(text: str) -> list[str]:
    """Tokens: '(', ')', |quoted symbols| (bars stripped), bare words."""
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()":
            tokens.append(c)
            i += 1
        elif c == "|":
            j = text.find("|", i + 1)
            if j < 0:
                raise UnparseableResponse("unterminated |...| symbol in solver output")
            tokens.append(text[i + 1:j])
            i = j + 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "()|":
                j += 1
            tokens.append(text[i:j])
            i = j
    return tokens


def _parse_sexpr(tokens: list[str], pos: int):
    if pos >= len(tokens):
        raise UnparseableResponse("truncated solver response")
    tok = tokens[pos]
    if tok == "(":
        items = []
        pos += 1
        while pos < len(tokens) and tokens[pos] != ")":
            item, pos = _parse_sexpr(tokens, pos)
            items.append(item)
        if pos >= len(tokens):
            raise UnparseableResponse("unbalanced parentheses in solver response")
        return items, pos + 1
    if tok == ")":
        raise UnparseableResponse("unexpected ')' in solver response")
    return tok, pos + 1


def _to_number(node) -> Fraction:
    if isinstance(node, str):
        text = node
        if text.endswith("."):
            text += "0"
        try:
            return Fraction(text)
        except ValueError:
            raise UnparseableResponse(f"not a numeric literal: {node!r}") from None
    if isinstance(node, list) and len(node) == 2 and node[0] == "-":
        return -_to_number(node[1])
    if isinstance(node, list) and len(node) == 3 and node[0] == "/":
        denom = _to_number(node[2])
        if denom == 0:
            raise UnparseableResponse("zero denominator in solver value")
        return _to_number(node[1]) / denom
    raise UnparseableResponse(f"unrecognized numeric value: {node!r}")


def _to_value(node) -> Value:
    if node == "true":
        return True
    if node == "false":
        return False
    number = _to_number(node)
    return int(number) if number.denominator == 1 else number


def parse_value_response(text: str) -> dict[str, Value]:
    """Parse a get-value response: a parenthesized list of (symbol value)."""
    tokens = _tokenize(text)
    if not tokens:
        raise UnparseableResponse("empty value response")
    tree, _ = _parse_sexpr(tokens, 0)
    if not isinstance(tree, list):
        raise UnparseableResponse(f"value response is not a list: {text!r}")
    out: dict[str, Value] = {}
    for pair in tree:
        if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[0], str)):
            raise UnparseableResponse(f"malformed (symbol value) pair: {pair!r}")
        out[pair[0]] = _to_value(pair[1])
    return out


def default_solver_command() -> str:
    """Invocation template for the bundled reference solver."""
    return f"{shlex.quote(sys.executable)} -m aspsmt.refsolver {{file}}"


def _build_argv(solver_command: str, path: str) -> list[str]:
    parts = shlex.split(solver_command)
    if not parts:
        raise SolverNotFound("empty solver command")
    if any("{file}" in part for part in parts):
        return [part.replace("{file}", path) for part in parts]
    return parts + [path]


def solve(smt_text: str, solver_command: str, timeout: float = 300.0) -> SatResult:
    """Run the solver command on the emitted text and parse its verdict.

    ``solver_command`` is a shell-style template; every ``{file}`` occurrence
    is replaced with the temp-file path (appended if absent). A timeout kills
    the child and yields an Unknown result flagged ``timed_out``.
    """
    with tempfile.NamedTemporaryFile("w", suffix=".smt2", delete=False) as tmp:
        tmp.write(smt_text)
        path = tmp.name
    start = time.perf_counter()
    try:
        argv = _build_argv(solver_command, path)
        try:
            proc = subprocess.run(argv, capture_output=True, text=True, timeout=timeout)
        except FileNotFoundError:
            raise SolverNotFound(f"solver executable not found: {argv[0]!r}") from None
        except PermissionError:
            raise SolverNotFound(f"solver executable not runnable: {argv[0]!r}") from None
        except subprocess.TimeoutExpired as exc:
            stderr = exc.stderr
            if isinstance(stderr, bytes):
                stderr = stderr.decode(errors="replace")
            return SatResult("unknown", None, stderr=stderr or "",
                             elapsed=time.perf_counter() - start, timed_out=True)
    finally:
        Path(path).unlink(missing_ok=True)
    elapsed = time.perf_counter() - start

    verdict = None
    rest = ""
    for match in re.finditer(r"\S+", proc.stdout):
        if match.group() in ("sat", "unsat", "unknown"):
            verdict = match.group()
            rest = proc.stdout[match.end():]
            break
    if verdict is None:
        if proc.returncode != 0:
            raise SolverCrashed(
                f"solver exited with status {proc.returncode} and no verdict; "
                f"stderr: {proc.stderr.strip()[:500]}")
        raise UnparseableResponse(
            f"no sat/unsat/unknown token in solver output: {proc.stdout.strip()[:500]!r}")
    if verdict != "sat":
        return SatResult(verdict, None, stderr=proc.stderr, elapsed=elapsed)

    open_paren = rest.find("(")
    if open_paren < 0:
        # sat with nothing queried
        return SatResult("sat", {}, stderr=proc.stderr, elapsed=elapsed)
    assignment = parse_value_response(rest[open_paren:])
    return SatResult("sat", assignment, stderr=proc.stderr, elapsed=elapsed)
