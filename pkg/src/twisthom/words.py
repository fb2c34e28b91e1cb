"""Free-group words, relations, presentations and their text format.

A word is stored as a tuple of letters ``(generator_index, sign)`` with
``sign`` in ``{+1, -1}``.  Words are always kept freely reduced.

Presentation files are line oriented::

    # comment
    generators: a1 a2 u
    rel (3): a1 u a1 = u
    rel: (a1 u)^2 = 1

The optional parenthesised tag after ``rel`` names the relation; untagged
relations are named by their 1-based position.  ``1`` denotes the identity.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

__all__ = [
    "ParseError",
    "TrivialRelationWarning",
    "Word",
    "Relation",
    "Presentation",
    "free_reduce",
    "invert",
    "parse_word",
    "format_word",
    "parse_presentation",
    "format_presentation",
]

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<int>[+-]?\d+)|(?P<op>[()^])|(?P<bad>\S))"
)


class ParseError(ValueError):
    """Malformed word or presentation text.

    ``line`` is 1-based (``None`` for a bare word), ``column`` is 1-based.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"col {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


class TrivialRelationWarning(UserWarning):
    """A relation whose two sides are the same reduced word."""


def free_reduce(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Cancel adjacent inverse pairs until none are left."""
    out: list[tuple[int, int]] = []
    for gen, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        if out and out[-1][0] == gen and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((gen, sign))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """Freely reduced element of a free group on indexed generators."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    @classmethod
    def gen(cls, index: int, power: int = 1) -> "Word":
        sign = 1 if power > 0 else -1
        return cls(((index, sign),) * abs(power))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def inverse(self) -> "Word":
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def generators(self) -> set[int]:
        return {g for g, _ in self.letters}

    def exponent_sums(self, ngens: int) -> list[int]:
        sums = [0] * ngens
        for g, s in self.letters:
            sums[g] += s
        return sums

    def substitute(self, images: Sequence["Word"]) -> "Word":
        """Image under the homomorphism sending generator ``j`` to ``images[j]``."""
        out: list[tuple[int, int]] = []
        for g, s in self.letters:
            img = images[g] if s > 0 else images[g].inverse()
            out.extend(img.letters)
        return Word(tuple(out))


def invert(w: Word) -> Word:
    return w.inverse()


@dataclass(frozen=True)
class Relation:
    """Two-sided relation ``lhs = rhs``."""

    lhs: Word
    rhs: Word
    label: str = ""

    def relator(self) -> Word:
        return self.lhs * self.rhs.inverse()

    def swapped(self) -> "Relation":
        return Relation(self.rhs, self.lhs, self.label)

    def as_relator(self) -> "Relation":
        return Relation(self.relator(), Word(), self.label)


@dataclass(frozen=True)
class Presentation:
    """Finite presentation ``<generators | relations>``."""

    generators: tuple[str, ...]
    relations: tuple[Relation, ...] = ()
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple(self.relations))
        seen = set()
        for name in self.generators:
            if not NAME_RE.match(name):
                raise ValueError(f"invalid generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator {name!r}")
            seen.add(name)
        n = len(self.generators)
        for k, rel in enumerate(self.relations):
            for g in rel.lhs.generators() | rel.rhs.generators():
                if not 0 <= g < n:
                    raise ValueError(f"relation {k + 1} uses generator index {g} out of range")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise KeyError(name) from None

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)

    def relation(self, label: str) -> Relation:
        for rel in self.relations:
            if rel.label == label:
                return rel
        raise KeyError(label)

    def format_relation(self, rel: Relation) -> str:
        return f"{format_word(rel.lhs, self.generators)} = {format_word(rel.rhs, self.generators)}"


def _gen_table(gens: Sequence[str] | Mapping[str, int]) -> dict[str, int]:
    if isinstance(gens, Mapping):
        return dict(gens)
    return {name: k for k, name in enumerate(gens)}


def _tokenize(text: str, line: int | None, offset: int):
    pos = 0
    tokens = []
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        col = m.start(m.lastgroup) + 1 + offset
        if m.lastgroup == "bad":
            raise ParseError(f"unexpected character {m.group('bad')!r}", line, col)
        tokens.append((m.lastgroup, m.group(m.lastgroup), col))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1 + offset))
    return tokens


def parse_word(
    text: str,
    gens: Sequence[str] | Mapping[str, int],
    *,
    line: int | None = None,
    offset: int = 0,
) -> Word:
    """Parse ``text`` into a freely reduced word.

    Grammar: ``word := atom+``, ``atom := NAME | NAME^INT | (word)^INT``.
    A side consisting of the single token ``1`` is the identity.  ``offset``
    shifts the reported column, for text cut out of a longer line.
    """
    table = _gen_table(gens)
    if text.strip() == "1":
        return Word()
    tokens = _tokenize(text, line, offset)
    pos = 0

    def peek():
        return tokens[pos]

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def exponent() -> int:
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            kind, val, col = take()
            if kind != "int":
                raise ParseError("expected integer exponent after '^'", line, col)
            n = int(val)
            if n == 0:
                raise ParseError("zero exponent", line, col)
            return n
        return 1

    def word(depth: int) -> list[tuple[int, int]]:
        letters: list[tuple[int, int]] = []
        while True:
            kind, val, col = peek()
            if kind == "name":
                take()
                if val not in table:
                    raise ParseError(f"unknown generator {val!r}", line, col)
                letters.extend(Word.gen(table[val], exponent()).letters)
            elif kind == "op" and val == "(":
                take()
                inner = word(depth + 1)
                kind2, val2, col2 = take()
                if kind2 != "op" or val2 != ")":
                    raise ParseError("unbalanced parenthesis", line, col)
                if not inner:
                    raise ParseError("empty atom", line, col)
                n = exponent()
                block = Word(tuple(inner)) ** n
                letters.extend(block.letters)
            else:
                break
        if not letters:
            kind, val, col = peek()
            if kind == "end" and depth == 0:
                raise ParseError("empty word", line, col)
            if kind == "op" and val == ")":
                if depth > 0:
                    return letters
                raise ParseError("unbalanced parenthesis", line, col)
            if kind == "op" and val == "^":
                raise ParseError("empty atom before '^'", line, col)
            if kind == "int":
                raise ParseError(f"unexpected integer {val!r}", line, col)
            raise ParseError(f"unexpected {val!r}", line, col)
        return letters

    letters = word(0)
    kind, val, col = peek()
    if kind != "end":
        if kind == "op" and val == ")":
            raise ParseError("unbalanced parenthesis", line, col)
        raise ParseError(f"unexpected {val!r}", line, col)
    return Word(tuple(letters))


def format_word(w: Word, names: Sequence[str]) -> str:
    """Print ``w`` with runs collapsed to powers; the identity prints as ``1``."""
    if not w:
        return "1"
    parts = []
    letters = list(w)
    k = 0
    while k < len(letters):
        g, s = letters[k]
        run = 1
        while k + run < len(letters) and letters[k + run] == (g, s):
            run += 1
        power = s * run
        parts.append(names[g] if power == 1 else f"{names[g]}^{power}")
        k += run
    return " ".join(parts)


_REL_RE = re.compile(r"rel\s*(?:\((?P<label>[^()]*)\))?\s*:(?P<body>.*)\Z")


def parse_presentation(text: str) -> Presentation:
    """Parse a presentation file; see the module docstring for the format."""
    generators: list[str] | None = None
    raw_relations: list[tuple[int, str | None, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        if stripped.startswith("generators"):
            head, sep, rest = stripped.partition(":")
            if not sep or head.strip() != "generators":
                raise ParseError("malformed generators line", lineno, indent + 1)
            if generators is not None:
                raise ParseError("second generators line", lineno, indent + 1)
            generators = rest.split()
            seen = set()
            for name in generators:
                if not NAME_RE.match(name):
                    raise ParseError(f"invalid generator name {name!r}", lineno)
                if name in seen:
                    raise ParseError(f"duplicate generator {name!r}", lineno)
                seen.add(name)
            continue
        m = _REL_RE.match(stripped)
        if m is None:
            raise ParseError("expected 'generators:' or 'rel:' line", lineno, indent + 1)
        label = m.group("label")
        if label is not None:
            label = label.strip()
            if not label:
                raise ParseError("empty relation label", lineno, indent + 1)
        raw_relations.append((lineno, label, m.group("body"), indent + m.start("body")))

    if generators is None:
        raise ParseError("missing 'generators:' line")

    relations = []
    notes = []
    for k, (lineno, label, body, offset) in enumerate(raw_relations):
        if body.count("=") != 1:
            raise ParseError("relation needs exactly one '='", lineno, offset + 1)
        left, right = body.split("=")
        lhs = parse_word(left, generators, line=lineno, offset=offset)
        rhs = parse_word(right, generators, line=lineno, offset=offset + len(left) + 1)
        rel = Relation(lhs, rhs, label if label is not None else str(k + 1))
        if lhs == rhs:
            msg = f"line {lineno}: relation ({rel.label}) has identical sides"
            warnings.warn(msg, TrivialRelationWarning, stacklevel=2)
            notes.append(msg)
        relations.append(rel)
    return Presentation(tuple(generators), tuple(relations), tuple(notes))


def format_presentation(pres: Presentation) -> str:
    lines = ["generators: " + " ".join(pres.generators)]
    for rel in pres.relations:
        lines.append(f"rel ({rel.label}): {pres.format_relation(rel)}")
    return "\n".join(lines) + "\n"
