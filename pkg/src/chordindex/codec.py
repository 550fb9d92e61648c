"""Text formats: diagram files, class vectors, and result records.

Diagram file::

    genus 2
    walk O1+ a1+ U2- b1- U1+ O2-
    class 1 0 0 -2

``#`` starts a comment. Walk tokens may continue over several lines until
the optional ``class`` line.
"""

from __future__ import annotations

import re

from .diagram import Passage, SurfaceDiagram, side
from .errors import (
    MalformedToken,
    MissingGenusHeader,
    NonInteger,
    WrongLength,
)
from .homology import HomologyClass

_TOKEN = re.compile(r"^([OUab])(\d+)([+-])$")


def parse_passage(tok: str) -> Passage:
    m = _TOKEN.match(tok)
    if not m or m.group(1) not in "OU" or int(m.group(2)) < 1:
        raise MalformedToken(f"bad passage token {tok!r}")
    return Passage(int(m.group(2)), m.group(1) == "O", 1 if m.group(3) == "+" else -1)


def parse_event(tok: str):
    m = _TOKEN.match(tok)
    if not m or int(m.group(2)) < 1:
        raise MalformedToken(f"unknown token {tok!r}")
    letter, num, s = m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1
    if letter in "OU":
        return Passage(num, letter == "O", s)
    return side(letter, num, s)


def format_event(ev) -> str:
    return str(ev)


def _lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_file(text: str) -> tuple[SurfaceDiagram, HomologyClass | None]:
    """Parse a diagram file; returns the diagram and the ``class`` line, if any."""
    lines = list(_lines(text))
    if not lines or lines[0].split()[0] != "genus":
        raise MissingGenusHeader("first line must be 'genus <g>'")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedToken(f"bad genus line {lines[0]!r}")
    try:
        genus = int(head[1])
    except ValueError:
        raise MalformedToken(f"bad genus {head[1]!r}") from None
    if genus < 0:
        raise MalformedToken("genus must be non-negative")

    body = lines[1:]
    if not body or body[0].split()[0] != "walk":
        raise MalformedToken("second line must start with 'walk'")
    tokens: list[str] = body[0].split()[1:]
    alpha_text = None
    for line in body[1:]:
        first = line.split()[0]
        if first == "genus":
            raise MalformedToken("genus declared twice")
        if first == "walk":
            raise MalformedToken("only one walk per file")
        if first == "class":
            if alpha_text is not None:
                raise MalformedToken("class declared twice")
            alpha_text = line[len("class"):]
        elif alpha_text is not None:
            raise MalformedToken(f"unexpected line after class: {line!r}")
        else:
            tokens.extend(line.split())
    d = SurfaceDiagram(genus, [parse_event(t) for t in tokens])
    alpha = parse_class(alpha_text, genus) if alpha_text is not None else None
    return d, alpha


def parse_diagram(text: str) -> SurfaceDiagram:
    return parse_file(text)[0]


def serialize_diagram(d: SurfaceDiagram, alpha=None) -> str:
    walk = " ".join(["walk"] + [format_event(e) for e in d.events])
    out = f"genus {d.genus}\n{walk}"
    if alpha is not None:
        out += "\nclass " + " ".join(str(x) for x in alpha)
    return out


def parse_class(text: str, genus: int) -> HomologyClass:
    parts = text.split()
    if len(parts) != 2 * genus:
        raise WrongLength(f"expected {2 * genus} integers, got {len(parts)}")
    try:
        return HomologyClass(int(p) for p in parts)
    except ValueError:
        raise NonInteger(f"class entries must be integers: {text!r}") from None


def class_to_text(alpha) -> str:
    return " ".join(str(x) for x in alpha)


__all__ = [
    "parse_diagram",
    "parse_file",
    "serialize_diagram",
    "parse_class",
    "parse_event",
    "parse_passage",
]
