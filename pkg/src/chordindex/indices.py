"""Chord indices attached to the crossings of a surface diagram.

Sign conventions (fixed once, used everywhere):

* the right smoothing loop ``D_c^r`` at a positive crossing is the walk from
  the over-passage to the under-passage; at a negative crossing it is the
  walk from the under-passage to the over-passage;
* the integer index of ``c`` for a class ``alpha`` is
  ``w(c) * (alpha . [D_c^r])``, which equals ``alpha . [over -> under loop]``
  for either sign;
* in a Gauss diagram, a chord ``d`` crosses chord ``c`` from left to right
  when the tail (over-endpoint) of ``d`` lies on the arc running
  counterclockwise from the head of ``c`` back to its tail.

With these choices the homological index for ``alpha = [K]`` coincides with
the Gauss diagram index on every diagram that actually lives on the surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import CyclicPoly, GroupRingElement
from .diagram import (
    GaussDiagram,
    SideCrossing,
    SurfaceDiagram,
    gauss_diagram,
    smoothing_classes,
)
from .errors import LengthMismatch, NotAdmissible, NotMod2Admissible
from .homology import HomologyClass, intersection


def _require_admissible(d: SurfaceDiagram, alpha: Sequence[int]) -> int:
    k = intersection(alpha, d.homology_class())
    if k:
        raise NotAdmissible(f"class {tuple(alpha)} meets the knot with intersection {k}", k)
    return k


def chord_index(d: SurfaceDiagram, alpha: Sequence[int], c: int) -> int:
    _require_admissible(d, alpha)
    _, right = smoothing_classes(d, c)
    return d.sign(c) * intersection(alpha, right)


def chord_indices(d: SurfaceDiagram, alpha: Sequence[int]) -> dict[int, int]:
    """Index of every crossing, keyed by crossing id."""
    _require_admissible(d, alpha)
    return {c: intersection(alpha, d.over_under_class(c)) for c in d.crossings}


# -- coloring route ------------------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    """Integer labels along the walk.

    ``at[i]`` is the label carried by the walk while it passes event ``i``
    (for a side event: the label just before it). ``arcs`` lists one label
    per arc between consecutive side events, starting with the arc that
    contains position 0. ``monodromy`` is the total change once around.
    """

    at: tuple
    arcs: tuple
    monodromy: int

    @property
    def closes(self) -> bool:
        return self.monodromy == 0


def _step(ev: SideCrossing, alpha: Sequence[int]) -> int:
    # e_k . alpha: e_{2i-1} pairs with the b_i coordinate, e_{2i} with minus a_i
    k = ev.index - 1
    pairing = alpha[k + 1] if k % 2 == 0 else -alpha[k - 1]
    return ev.direction * pairing


def coloring(d: SurfaceDiagram, alpha: Sequence[int], strict: bool = True) -> Coloring:
    """Label arcs by walking once around, starting from 0.

    Crossing a cut curve changes the label by the intersection of that
    side event with ``alpha``. With ``strict`` a walk that does not close up
    raises :class:`NotAdmissible`.
    """
    if len(alpha) != 2 * d.genus:
        raise LengthMismatch(f"class of rank {len(alpha)} on genus {d.genus}")
    color = 0
    at = []
    arcs = [0]
    for ev in d.events:
        at.append(color)
        if isinstance(ev, SideCrossing):
            color += _step(ev, alpha)
            arcs.append(color)
    if len(arcs) > 1:
        arcs.pop()  # the last arc is the first one again
    col = Coloring(tuple(at), tuple(arcs), color)
    if strict and color:
        raise NotAdmissible(f"coloring does not close up (monodromy {color})", color)
    return col


def chord_index_by_coloring(d: SurfaceDiagram, alpha: Sequence[int], c: int) -> int:
    """Over-arc label minus under-arc label."""
    col = coloring(d, alpha)
    o, u = d.positions(c)
    return col.at[o] - col.at[u]


def parity(d: SurfaceDiagram, alpha: Sequence[int], c: int) -> int:
    """Mod-2 index from a 0/1 coloring; needs only ``alpha . [D]`` even."""
    k = intersection(alpha, d.homology_class())
    if k % 2:
        raise NotMod2Admissible(f"class meets the knot an odd number of times ({k})", k)
    color = 0
    at = []
    for ev in d.events:
        at.append(color)
        if isinstance(ev, SideCrossing):
            color ^= _step(ev, alpha) & 1
    o, u = d.positions(c)
    return at[o] ^ at[u]


# -- Gauss diagram index -------------------------------------------------------


def _crossers(g: GaussDiagram, c: int):
    """Yield ``(chord, left_to_right)`` for every chord interleaving ``c``."""
    ch = g.chord(c)
    o, u = ch.over, ch.under

    def on_ou_arc(p):  # strictly inside the arc from tail o to head u
        return (o < p < u) if o < u else (p > o or p < u)

    for other in g.chords:
        if other.id == c:
            continue
        tail_in = on_ou_arc(other.over)
        if tail_in != on_ou_arc(other.under):
            yield other, not tail_in


def ind(g: GaussDiagram, c: int) -> int:
    total = 0
    for other, ltr in _crossers(g, c):
        total += other.sign if ltr else -other.sign
    return total


# -- group ring indices ---------------------------------------------------------


def group_index(d: SurfaceDiagram, c: int) -> GroupRingElement:
    left, right = smoothing_classes(d, c)
    return GroupRingElement([(left, 1), (right, 1)])


def fiedler_index(d: SurfaceDiagram, c: int) -> HomologyClass:
    left, right = smoothing_classes(d, c)
    return left if d.sign(c) > 0 else right


@dataclass(frozen=True)
class RegularIndex:
    """``x * [x_class] + y * [y_class]`` with commuting indeterminates ``x, y``."""

    x_class: HomologyClass
    y_class: HomologyClass

    def specialize(self) -> GroupRingElement:
        """Set ``x = y = 1``."""
        return GroupRingElement([(self.x_class, 1), (self.y_class, 1)])


def regular_index(d: SurfaceDiagram, c: int) -> RegularIndex:
    left, right = smoothing_classes(d, c)
    if d.sign(c) > 0:
        return RegularIndex(x_class=left, y_class=right)
    return RegularIndex(x_class=right, y_class=left)


# -- index function ---------------------------------------------------------------


def index_function(d: SurfaceDiagram, alpha: Sequence[int], c: int) -> CyclicPoly:
    return index_functions(d, alpha, [c])[c]


def index_functions(d: SurfaceDiagram, alpha: Sequence[int], which=None) -> dict[int, CyclicPoly]:
    """``g_c(s)`` in ``Z[s^{+-1}] / (s^{f(c)} - 1)`` for each requested crossing."""
    f = chord_indices(d, alpha)
    g = gauss_diagram(d)
    out = {}
    for c in d.crossings if which is None else which:
        terms = []
        for other, ltr in _crossers(g, c):
            if ltr:
                terms.append((f[other.id], other.sign))
            else:
                terms.append((-f[other.id], -other.sign))
        out[c] = CyclicPoly(f[c], terms)
    return out


__all__ = [
    "Coloring",
    "RegularIndex",
    "chord_index",
    "chord_indices",
    "chord_index_by_coloring",
    "coloring",
    "fiedler_index",
    "group_index",
    "ind",
    "index_function",
    "index_functions",
    "parity",
]
