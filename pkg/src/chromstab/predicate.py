"""Boolean filter expressions over graph invariants.

Grammar::

    expr    := or
    or      := and ("or" and)*
    and     := unary ("and" unary)*
    unary   := "not" unary | "(" expr ")" | atom
    atom    := NAME OP VALUE | BOOLNAME
    OP      := = | != | < | <= | > | >=
    VALUE   := integer | true | false | inf

Operands of ``and``/``or`` are reordered cheapest first, so expensive
invariants are only computed when the cheap ones do not decide the result.
"""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Protocol

# relative evaluation cost of each atom
ATOM_COST = {
    "n": 0,
    "m": 0,
    "regular": 1,
    "connected": 1,
    "girth": 2,
    "omega": 2,
    "chi": 3,
    "bound": 3,
    "cstar": 4,
    "rho": 4,
    "es": 5,
    "tight": 5,
}
BOOLEAN_ATOMS = {"connected", "tight"}

OPS: dict[str, Callable[[float, float], bool]] = {
    "=": operator.eq,
    "!=": operator.ne,
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
}

_TOKEN = re.compile(r"\s*(?:(?P<op><=|>=|!=|=|<|>)|(?P<paren>[()])|(?P<word>[A-Za-z_][A-Za-z0-9_]*)|(?P<num>-?\d+))")


class PredicateError(ValueError):
    def __init__(self, message: str, pos: int) -> None:
        self.pos = pos
        super().__init__(f"{message} at position {pos}")


class InvariantSource(Protocol):
    def get(self, name: str) -> float | int | bool | None: ...


class Expr:
    cost: int

    def evaluate(self, rec: InvariantSource) -> bool:
        raise NotImplementedError

    def atoms(self) -> set[str]:
        raise NotImplementedError


@dataclass
class Atom(Expr):
    name: str
    op: str
    value: float

    def __post_init__(self) -> None:
        self.cost = ATOM_COST[self.name]

    def evaluate(self, rec: InvariantSource) -> bool:
        got = rec.get(self.name)
        # undefined invariants (e.g. rho of an edgeless graph) satisfy no comparison
        if got is None:
            return False
        return OPS[self.op](float(got), self.value)

    def atoms(self) -> set[str]:
        return {self.name}

    def __str__(self) -> str:
        return f"{self.name}{self.op}{_fmt(self.value)}"


@dataclass
class Not(Expr):
    inner: Expr

    def __post_init__(self) -> None:
        self.cost = self.inner.cost

    def evaluate(self, rec: InvariantSource) -> bool:
        return not self.inner.evaluate(rec)

    def atoms(self) -> set[str]:
        return self.inner.atoms()

    def __str__(self) -> str:
        return f"not {self.inner}"


@dataclass
class Junction(Expr):
    kind: str
    parts: list[Expr]

    def __post_init__(self) -> None:
        self.parts = sorted(self.parts, key=lambda e: e.cost)
        self.cost = max(e.cost for e in self.parts)

    def evaluate(self, rec: InvariantSource) -> bool:
        if self.kind == "and":
            return all(e.evaluate(rec) for e in self.parts)
        return any(e.evaluate(rec) for e in self.parts)

    def atoms(self) -> set[str]:
        return set().union(*(e.atoms() for e in self.parts))

    def __str__(self) -> str:
        return "(" + f" {self.kind} ".join(map(str, self.parts)) + ")"


def _fmt(v: float) -> str:
    return "inf" if v == math.inf else str(int(v))


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            mt = _TOKEN.match(text, pos)
            if not mt:
                bad = len(text) - len(text[pos:].lstrip())
                raise PredicateError(f"unexpected character {text[bad]!r}", bad)
            kind = mt.lastgroup or ""
            self.tokens.append((kind, mt.group(kind), mt.start(kind)))
            pos = mt.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise PredicateError("unexpected end of expression", len(self.text))
        self.i += 1
        return tok

    def keyword(self, word: str) -> bool:
        tok = self.peek()
        if tok and tok[0] == "word" and tok[1].lower() == word:
            self.i += 1
            return True
        return False

    def parse(self) -> Expr:
        if not self.tokens:
            raise PredicateError("empty expression", 0)
        expr = self.disjunction()
        tok = self.peek()
        if tok is not None:
            raise PredicateError(f"unexpected {tok[1]!r}", tok[2])
        return expr

    def disjunction(self) -> Expr:
        parts = [self.conjunction()]
        while self.keyword("or"):
            parts.append(self.conjunction())
        return parts[0] if len(parts) == 1 else Junction("or", parts)

    def conjunction(self) -> Expr:
        parts = [self.unary()]
        while self.keyword("and"):
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else Junction("and", parts)

    def unary(self) -> Expr:
        if self.keyword("not"):
            return Not(self.unary())
        kind, text, pos = self.take()
        if kind == "paren" and text == "(":
            inner = self.disjunction()
            kind, text, pos = self.take()
            if text != ")":
                raise PredicateError("expected ')'", pos)
            return inner
        if kind != "word" or text.lower() in ("and", "or", "not"):
            raise PredicateError(f"expected an invariant name, got {text!r}", pos)
        return self.atom(text.lower(), pos)

    def atom(self, name: str, pos: int) -> Atom:
        if name not in ATOM_COST:
            raise PredicateError(f"unknown invariant {name!r}", pos)
        tok = self.peek()
        if tok is None or tok[0] != "op":
            if name in BOOLEAN_ATOMS:
                return Atom(name, "=", 1.0)
            raise PredicateError(f"invariant {name!r} needs a comparison", pos)
        self.i += 1
        kind, text, vpos = self.take()
        if kind == "num":
            value = float(int(text))
        elif kind == "word" and text.lower() in ("true", "false"):
            value = 1.0 if text.lower() == "true" else 0.0
        elif kind == "word" and text.lower() == "inf":
            value = math.inf
        else:
            raise PredicateError(f"expected a value, got {text!r}", vpos)
        return Atom(name, tok[1], value)


@lru_cache(maxsize=64)
def parse_predicate(text: str) -> Expr:
    return _Parser(text).parse()
