"""Knot diagrams on a closed surface, encoded as one closed walk.

The surface of genus ``g`` is cut open along ``2g`` curves. Walking along the
knot we record two kinds of events:

* a :class:`Passage` through a crossing, on the over or under strand;
* a :class:`SideCrossing` through the cut curve dual to basis vector
  ``e_index`` (``1 <= index <= 2g``), contributing ``direction * e_index`` to
  the homology class of the walk.

The event sequence is cyclic; positions index into ``events`` and every
operation here treats position ``len(events)`` as position ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

from .errors import (
    DuplicatePassage,
    GenusMismatch,
    MalformedToken,
    SideIndexOutOfRange,
    SignMismatch,
    UnknownChord,
    UnknownCrossing,
    UnpairedPassage,
)
from .homology import HomologyClass


@dataclass(frozen=True, slots=True)
class Passage:
    crossing: int
    over: bool
    sign: int

    def __str__(self):
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True, slots=True)
class SideCrossing:
    index: int  # basis vector e_index; odd -> a_i, even -> b_i
    direction: int

    @property
    def handle(self) -> int:
        return (self.index + 1) // 2

    def __str__(self):
        letter = "a" if self.index % 2 else "b"
        return f"{letter}{self.handle}{'+' if self.direction > 0 else '-'}"


Event = Union[Passage, SideCrossing]


def side(letter: str, handle: int, direction: int) -> SideCrossing:
    """``side('a', 2, -1)`` is the event ``a2-``."""
    return SideCrossing(2 * handle - (letter == "a"), direction)


@dataclass(frozen=True)
class SurfaceDiagram:
    genus: int
    events: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        _validate(self)

    # -- crossing bookkeeping ------------------------------------------------

    @cached_property
    def _table(self) -> dict[int, list]:
        table: dict[int, list] = {}
        for pos, ev in enumerate(self.events):
            if isinstance(ev, Passage):
                slot = table.setdefault(ev.crossing, [None, None, ev.sign])
                slot[0 if ev.over else 1] = pos
        return table

    @property
    def crossings(self) -> dict[int, int]:
        """``{crossing id: sign}`` in order of first appearance."""
        return {c: v[2] for c, v in self._table.items()}

    def __len__(self):
        return len(self.events)

    @property
    def n_crossings(self) -> int:
        return len(self._table)

    def sign(self, c: int) -> int:
        return self._entry(c)[2]

    def positions(self, c: int) -> tuple[int, int]:
        """``(over position, under position)`` of crossing ``c``."""
        e = self._entry(c)
        return e[0], e[1]

    def _entry(self, c):
        try:
            return self._table[c]
        except KeyError:
            raise UnknownCrossing(f"no crossing {c}") from None

    # -- homology ------------------------------------------------------------

    @cached_property
    def _prefix(self) -> list[tuple[int, ...]]:
        acc = [0] * (2 * self.genus)
        out = [tuple(acc)]
        for ev in self.events:
            if isinstance(ev, SideCrossing):
                acc[ev.index - 1] += ev.direction
            out.append(tuple(acc))
        return out

    def homology_class(self) -> HomologyClass:
        return HomologyClass(self._prefix[-1])

    def segment_class(self, start: int, end: int) -> HomologyClass:
        """Class of the events strictly between positions ``start`` and ``end``,
        walking forward (cyclically) from ``start``."""
        p = self._prefix
        if start < end:
            return HomologyClass(b - a for a, b in zip(p[start + 1], p[end]))
        tot = p[-1]
        return HomologyClass(t - a + b for t, a, b in zip(tot, p[start + 1], p[end]))

    def over_under_class(self, c: int) -> HomologyClass:
        """Class of the loop running from the over-passage to the under-passage."""
        o, u = self.positions(c)
        return self.segment_class(o, u)

    def under_over_class(self, c: int) -> HomologyClass:
        o, u = self.positions(c)
        return self.segment_class(u, o)

    # -- misc ----------------------------------------------------------------

    def rotate(self, k: int) -> SurfaceDiagram:
        """Same cyclic walk, basepoint moved forward by ``k`` events."""
        n = len(self.events)
        if not n:
            return self
        k %= n
        return SurfaceDiagram(self.genus, self.events[k:] + self.events[:k])

    def relabel(self, mapping: dict[int, int]) -> SurfaceDiagram:
        evs = [
            Passage(mapping.get(e.crossing, e.crossing), e.over, e.sign)
            if isinstance(e, Passage)
            else e
            for e in self.events
        ]
        return SurfaceDiagram(self.genus, evs)

    def __str__(self):
        from .codec import serialize_diagram

        return serialize_diagram(self)


def _validate(d: SurfaceDiagram) -> None:
    if not isinstance(d.genus, int) or d.genus < 0:
        raise MalformedToken(f"genus must be a non-negative integer, got {d.genus!r}")
    seen: dict[tuple[int, bool], int] = {}
    signs: dict[int, int] = {}
    for ev in d.events:
        if isinstance(ev, Passage):
            if ev.sign not in (1, -1) or ev.crossing < 1:
                raise MalformedToken(f"bad passage {ev!r}")
            key = (ev.crossing, ev.over)
            if key in seen:
                layer = "over" if ev.over else "under"
                raise DuplicatePassage(f"crossing {ev.crossing} has two {layer}-passages")
            seen[key] = 1
            if signs.setdefault(ev.crossing, ev.sign) != ev.sign:
                raise SignMismatch(f"crossing {ev.crossing} has passages of opposite sign")
        elif isinstance(ev, SideCrossing):
            if ev.direction not in (1, -1):
                raise MalformedToken(f"bad side event {ev!r}")
            if not 1 <= ev.index <= 2 * d.genus:
                raise SideIndexOutOfRange(
                    f"side event {ev} needs handle {ev.handle} but genus is {d.genus}"
                )
        else:
            raise MalformedToken(f"not an event: {ev!r}")
    for c in signs:
        if (c, True) not in seen or (c, False) not in seen:
            raise UnpairedPassage(f"crossing {c} lacks its {'under' if (c, True) in seen else 'over'}-passage")


@dataclass(frozen=True)
class ClosedWalk:
    """A cyclic event sequence, e.g. one half of an oriented smoothing."""

    events: tuple = ()

    def homology_class(self, genus: int) -> HomologyClass:
        from .homology import walk_class

        return walk_class(self.events, genus)

    def side_events(self) -> list[SideCrossing]:
        return [e for e in self.events if isinstance(e, SideCrossing)]


@dataclass(frozen=True)
class SmoothingPair:
    left: ClosedWalk
    right: ClosedWalk


# -- Gauss diagrams ------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Chord:
    id: int
    sign: int
    over: int
    under: int


@dataclass(frozen=True)
class GaussDiagram:
    """Signed chords directed from over-endpoint to under-endpoint.

    Endpoints are positions ``0..2n-1`` read counterclockwise.
    """

    chords: tuple = ()
    size: int = field(default=-1)

    def __post_init__(self):
        chords = tuple(sorted(self.chords, key=lambda ch: ch.id))
        object.__setattr__(self, "chords", chords)
        n = 2 * len(chords)
        if self.size == -1:
            object.__setattr__(self, "size", n)
        used = sorted(p for ch in chords for p in (ch.over, ch.under))
        if used != list(range(self.size)) or self.size != n:
            raise MalformedToken("chord endpoints must use every position exactly once")

    @cached_property
    def _by_id(self) -> dict[int, Chord]:
        return {ch.id: ch for ch in self.chords}

    def chord(self, c: int) -> Chord:
        try:
            return self._by_id[c]
        except KeyError:
            raise UnknownChord(f"no chord {c}") from None

    def __len__(self):
        return len(self.chords)

    def word(self) -> list[tuple[str, int, int]]:
        """Endpoints in circle order as ``(layer, id, sign)``."""
        slots: list = [None] * self.size
        for ch in self.chords:
            slots[ch.over] = ("O", ch.id, ch.sign)
            slots[ch.under] = ("U", ch.id, ch.sign)
        return slots

    def mirror(self) -> GaussDiagram:
        return GaussDiagram(tuple(Chord(ch.id, -ch.sign, ch.under, ch.over) for ch in self.chords))

    def __str__(self):
        return " ".join(f"{l}{i}{'+' if s > 0 else '-'}" for l, i, s in self.word())


def interleaved(a: Chord, b: Chord) -> bool:
    lo, hi = sorted((a.over, a.under))
    return (lo < b.over < hi) != (lo < b.under < hi)


def gauss_diagram(d: SurfaceDiagram) -> GaussDiagram:
    pos = {}
    k = 0
    for ev in d.events:
        if isinstance(ev, Passage):
            pos[(ev.crossing, ev.over)] = k
            k += 1
    return GaussDiagram(
        tuple(Chord(c, s, pos[(c, True)], pos[(c, False)]) for c, s in d.crossings.items())
    )


def parse_gauss_code(text: str) -> GaussDiagram:
    """Read a plain signed Gauss code such as ``"O1+ O2+ U1+ U2+"``."""
    from .codec import parse_passage

    passages = [parse_passage(tok) for tok in text.split()]
    d = SurfaceDiagram(0, passages)
    return gauss_diagram(d)


def realize_virtual(text: str) -> SurfaceDiagram:
    """Surface realization of a virtual knot diagram drawn in the plane.

    Tokens are ``O<id><s>``/``U<id><s>`` for classical crossings and
    ``X<k><s>``/``Y<k><s>`` for the two strands through virtual crossing
    ``k``; for virtual crossings ``<s>`` is the sign of the planar crossing
    of the X strand with the Y strand (same handedness rule as a classical
    crossing with X on top). Each virtual crossing is replaced by a handle:
    the X strand runs across it (event ``a_h+``), the Y strand through it
    (event ``b_h`` with direction opposite to ``<s>``). The handles are
    numbered in order of first appearance, so the genus equals the number of
    virtual crossings.

    The result is a genuine diagram on the surface only when the input is a
    planar curve; that is not checked here.
    """
    from .codec import parse_passage

    toks = text.split()
    handles: dict[int, int] = {}
    vsigns: dict[int, int] = {}
    seen = set()
    for tok in toks:
        if tok[0] in "XY":
            k, s = _virtual_token(tok)
            if (k, tok[0]) in seen:
                raise DuplicatePassage(f"virtual crossing {k} has two {tok[0]} strands")
            seen.add((k, tok[0]))
            if vsigns.setdefault(k, s) != s:
                raise SignMismatch(f"virtual crossing {k} has strands of opposite sign")
            handles.setdefault(k, len(handles) + 1)
    for k in handles:
        if (k, "X") not in seen or (k, "Y") not in seen:
            raise UnpairedPassage(f"virtual crossing {k} is missing a strand")
    events: list = []
    for tok in toks:
        if tok[0] in "XY":
            k, s = _virtual_token(tok)
            h = handles[k]
            events.append(side("a", h, 1) if tok[0] == "X" else side("b", h, -s))
        else:
            events.append(parse_passage(tok))
    return SurfaceDiagram(len(handles), events)


def _virtual_token(tok: str) -> tuple[int, int]:
    body, s = tok[1:-1], tok[-1]
    if not body.isdigit() or s not in "+-" or int(body) < 1:
        raise MalformedToken(f"bad virtual token {tok!r}")
    return int(body), 1 if s == "+" else -1


# -- operations ---------------------------------------------------------------


def writhe(d: SurfaceDiagram) -> int:
    return sum(d.crossings.values())


def smooth(d: SurfaceDiagram, c: int) -> SmoothingPair:
    """Oriented smoothing at ``c``.

    The loop leaving along the over-strand and returning on the under-strand
    is the right-hand loop at a positive crossing and the left-hand loop at a
    negative one.
    """
    o, u = d.positions(c)
    n = len(d.events)
    evs = d.events

    def between(a, b):
        if a < b:
            return evs[a + 1 : b]
        return evs[a + 1 :] + evs[:b]

    ou = ClosedWalk(between(o, u))
    uo = ClosedWalk(between(u, o))
    assert len(ou.events) + len(uo.events) == n - 2
    if d.sign(c) > 0:
        return SmoothingPair(left=uo, right=ou)
    return SmoothingPair(left=ou, right=uo)


def smoothing_classes(d: SurfaceDiagram, c: int) -> tuple[HomologyClass, HomologyClass]:
    """``(left class, right class)`` without materialising the walks."""
    ou, uo = d.over_under_class(c), d.under_over_class(c)
    return (uo, ou) if d.sign(c) > 0 else (ou, uo)


def reverse_orientation(d: SurfaceDiagram) -> SurfaceDiagram:
    evs = [
        SideCrossing(e.index, -e.direction) if isinstance(e, SideCrossing) else e
        for e in reversed(d.events)
    ]
    return SurfaceDiagram(d.genus, evs)


def mirror(d: SurfaceDiagram) -> SurfaceDiagram:
    evs = [
        Passage(e.crossing, not e.over, -e.sign) if isinstance(e, Passage) else e
        for e in d.events
    ]
    return SurfaceDiagram(d.genus, evs)


def band_sum(
    d1: SurfaceDiagram, d2: SurfaceDiagram, site1: int = 0, site2: int = 0
) -> SurfaceDiagram:
    """Splice the walk of ``d2`` (read from gap ``site2``) into gap ``site1`` of ``d1``.

    Gap ``i`` is the slot just before event ``i``. Crossing ids of ``d2`` that
    clash with ``d1`` are shifted past the largest id of ``d1``. The band
    itself contributes no crossings.
    """
    if d1.genus != d2.genus:
        raise GenusMismatch(f"genus {d1.genus} vs {d2.genus}")
    clash = set(d1.crossings) & set(d2.crossings)
    if clash:
        shift = max(d1.crossings)
        d2 = d2.relabel({c: c + shift for c in d2.crossings})
    if not 0 <= site1 <= len(d1.events) or not 0 <= site2 <= len(d2.events):
        raise IndexError("band site outside the walk")
    inner = d2.events[site2:] + d2.events[:site2]
    return SurfaceDiagram(d1.genus, d1.events[:site1] + inner + d1.events[site1:])

