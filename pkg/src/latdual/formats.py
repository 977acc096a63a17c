"""Line-oriented text formats.

Bases::

    # comment
    elements 1 2 3 4          (optional; otherwise names in order of appearance)
    imp 1 3 -> 2
    imp 4 -> 3

Families (antichains, hypergraphs, command output) use one ``set`` line per
member; a bare ``set`` is the empty set.  Hypergraph files may carry their
own ``elements`` header.  Formulas use ``p oit <n> <m>`` followed by one line
of three positive variable numbers per clause.
"""
from __future__ import annotations

import warnings
from typing import Iterable

from . import bitset
from .base import NAME_RE, ImplicationalBase, Implication
from .dualization import Antichain, validate_antichain
from .errors import ParseError
from .hypergraph import Hypergraph
from .generators import PositiveFormula


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


class _Names:
    """Name -> index table, either fixed by a header or grown on first use."""

    def __init__(self, fixed=None):
        self.names: list[str] = list(fixed) if fixed is not None else []
        self.index = {name: i for i, name in enumerate(self.names)}
        self.fixed = fixed is not None

    def declare(self, tokens, line):
        if self.names:
            raise ParseError("elements header must come first and only once", line)
        for name in tokens:
            self._check(name, line)
            if name in self.index:
                raise ParseError(f"duplicate element {name!r}", line)
            self.index[name] = len(self.names)
            self.names.append(name)
        self.fixed = True

    def get(self, name, line):
        self._check(name, line)
        i = self.index.get(name)
        if i is None:
            if self.fixed:
                raise ParseError(f"unknown element {name!r}", line)
            i = self.index[name] = len(self.names)
            self.names.append(name)
        return i

    @staticmethod
    def _check(name, line):
        if not NAME_RE.match(name):
            raise ParseError(f"invalid element name {name!r}", line)


def parse_base(text: str) -> ImplicationalBase:
    names = _Names()
    imps: list[Implication] = []
    seen_imp = False
    for line, tokens in _lines(text):
        head, rest = tokens[0], tokens[1:]
        if head == "elements":
            if seen_imp:
                raise ParseError("elements header must precede implications", line)
            names.declare(rest, line)
        elif head == "imp":
            seen_imp = True
            if rest.count("->") != 1:
                raise ParseError("implication needs exactly one '->'", line)
            cut = rest.index("->")
            premise = bitset.make(names.get(t, line) for t in rest[:cut])
            conclusions = [names.get(t, line) for t in rest[cut + 1:]]
            if not conclusions:
                raise ParseError("empty conclusion", line)
            for b in conclusions:
                imp = Implication(premise, b)
                if imp.is_inert():
                    warnings.warn(f"line {line}: conclusion already in premise", stacklevel=2)
                elif imp in imps:
                    warnings.warn(f"line {line}: duplicate implication", stacklevel=2)
                imps.append(imp)
        else:
            raise ParseError(f"unexpected keyword {head!r}", line)
    return ImplicationalBase(tuple(names.names), tuple(imps))


def serialize_base(base: ImplicationalBase) -> str:
    out = ["elements " + " ".join(base.names) if base.names else "elements"]
    for a, b in base.implications:
        premise = " ".join(base.names_of(a))
        out.append(f"imp {premise} -> {base.names[b]}" if premise else f"imp -> {base.names[b]}")
    return "\n".join(out) + "\n"


def _parse_sets(text: str, names: _Names, allow_header: bool) -> list[int]:
    family = []
    for line, tokens in _lines(text):
        head, rest = tokens[0], tokens[1:]
        if head == "set":
            family.append(bitset.make(names.get(t, line) for t in rest))
        elif head == "elements" and allow_header:
            if family:
                raise ParseError("elements header must precede sets", line)
            names.declare(rest, line)
        else:
            raise ParseError(f"unexpected keyword {head!r}", line)
    return family


def parse_family(text: str, base: ImplicationalBase) -> list[int]:
    """``set`` lines over the ground set of ``base``, without validation."""
    return _parse_sets(text, _Names(base.names), allow_header=False)


def parse_antichain(text: str, base: ImplicationalBase) -> Antichain:
    return validate_antichain(base, parse_family(text, base))


def parse_hypergraph(text: str, names: Iterable[str] | None = None) -> Hypergraph:
    """Parse a hypergraph; the ground set comes from ``names``, a header, or first use."""
    table = _Names(tuple(names) if names is not None else None)
    edges = _parse_sets(text, table, allow_header=names is None)
    return Hypergraph(len(table.names), tuple(edges), tuple(table.names))


def format_set(names, s: int) -> str:
    members = " ".join(names[i] for i in bitset.iter_bits(s))
    return f"set {members}" if members else "set"


def serialize_family(names, family: Iterable[int]) -> str:
    return "".join(format_set(names, s) + "\n" for s in family)


def serialize_antichain(base: ImplicationalBase, family: Iterable[int]) -> str:
    return serialize_family(base.names, family)


def serialize_hypergraph(h: Hypergraph) -> str:
    names = h.names if h.names is not None else tuple(str(i) for i in range(h.n))
    header = "elements " + " ".join(names) if names else "elements"
    return header + "\n" + serialize_family(names, h.edges)


def parse_formula(text: str) -> PositiveFormula:
    n = m = None
    clauses = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] != "oit":
                raise ParseError("header must read 'p oit <n> <m>'", number)
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError("non-integer header field", number) from None
            continue
        if n is None:
            raise ParseError("clause before 'p oit' header", number)
        if tokens[-1] == "0":
            tokens = tokens[:-1]
        try:
            lits = [int(t) for t in tokens]
        except ValueError:
            raise ParseError("clause entries must be integers", number) from None
        if len(lits) != 3 or any(v < 1 or v > n for v in lits):
            raise ParseError(f"clause must list three variables in 1..{n}", number)
        clauses.append(tuple(v - 1 for v in lits))
    if n is None:
        raise ParseError("missing 'p oit' header")
    if len(clauses) != m:
        raise ParseError(f"header announces {m} clauses, found {len(clauses)}")
    return PositiveFormula(n, tuple(clauses))


def serialize_formula(f: PositiveFormula) -> str:
    out = [f"p oit {f.n} {len(f.clauses)}"]
    out += [" ".join(str(v + 1) for v in c) for c in f.clauses]
    return "\n".join(out) + "\n"
