"""Reidemeister rewrites on walk encodings.

Every move happens inside a small disk that no cut curve meets, so a move
window never contains a side event. Gaps are numbered like list insertion
points: gap ``i`` is the slot just before event ``i``.

Move kinds: ``"r1-insert"``, ``"r1-remove"``, ``"r2-insert"``,
``"r2-remove"``, ``"r3"``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .diagram import Passage, SideCrossing, SurfaceDiagram
from .errors import SiteNotEligible
from .homology import HomologyClass

KINDS = ("r1-insert", "r1-remove", "r2-insert", "r2-remove", "r3")


@dataclass(frozen=True)
class MoveSite:
    """Where and how to apply a move.

    ``positions`` are gaps for insertions and event positions otherwise.
    ``crossings`` names the crossings removed or rearranged. ``variant``
    depends on the kind:

    * r1-insert: ``(layers, sign)`` with ``layers`` ``"OU"`` or ``"UO"``;
    * r2-insert: ``(parallel, first_over, sign)``: whether the second strand
      runs the same way as the first, whether the first strand is on top,
      and the sign of the first new crossing;
    * r3: ``(case,)``, ``"TMB"`` or ``"TBM"``, the cyclic order in which the
      walk visits the top, middle and bottom strands.
    """

    kind: str
    positions: tuple
    crossings: tuple = ()
    variant: tuple = ()


def _fresh(d: SurfaceDiagram, k: int = 1) -> list[int]:
    top = max(d.crossings, default=0)
    return list(range(top + 1, top + 1 + k))


def _gaps(d: SurfaceDiagram) -> range:
    return range(max(len(d.events), 1))


def _is_passage(ev) -> bool:
    return isinstance(ev, Passage)


# -- R1 --------------------------------------------------------------------------


def _r1_insert_sites(d):
    for gap in _gaps(d):
        for layers in ("OU", "UO"):
            for sign in (1, -1):
                yield MoveSite("r1-insert", (gap,), (), (layers, sign))


def _r1_remove_sites(d):
    n = len(d.events)
    for c in d.crossings:
        o, u = d.positions(c)
        if (o + 1) % n == u:
            yield MoveSite("r1-remove", (o, u), (c,))
        elif (u + 1) % n == o:
            yield MoveSite("r1-remove", (u, o), (c,))


def r1(d: SurfaceDiagram, site: MoveSite) -> SurfaceDiagram:
    if site.kind == "r1-insert":
        (gap,) = site.positions
        layers, sign = site.variant
        if not 0 <= gap < max(len(d.events), 1) or layers not in ("OU", "UO") or sign not in (1, -1):
            raise SiteNotEligible(f"bad kink site {site}")
        (c,) = _fresh(d)
        pair = [Passage(c, layer == "O", sign) for layer in layers]
        return SurfaceDiagram(d.genus, d.events[:gap] + tuple(pair) + d.events[gap:])
    if site.kind == "r1-remove":
        if site not in list(_r1_remove_sites(d)):
            raise SiteNotEligible(f"no removable kink at {site}")
        (c,) = site.crossings
        return _drop(d, {c})
    raise SiteNotEligible(f"{site.kind} is not a first move")


def _drop(d: SurfaceDiagram, crossings: set) -> SurfaceDiagram:
    return SurfaceDiagram(
        d.genus, [e for e in d.events if not (_is_passage(e) and e.crossing in crossings)]
    )


# -- R2 --------------------------------------------------------------------------


def _r2_insert_sites(d):
    gaps = _gaps(d)
    for i in gaps:
        for j in gaps:
            if j < i:
                continue
            # a strand folded back onto itself can only meet itself antiparallel
            for parallel in ((False,) if i == j else (True, False)):
                for first_over in (True, False):
                    for sign in (1, -1):
                        yield MoveSite("r2-insert", (i, j), (), (parallel, first_over, sign))


def _strand(d, p):
    """The two-passage window starting at position ``p``, if there is one."""
    n = len(d.events)
    q = (p + 1) % n
    a, b = d.events[p], d.events[q]
    if n >= 2 and p != q and _is_passage(a) and _is_passage(b) and a.crossing != b.crossing:
        return a, b, q
    return None


def _r2_remove_sites(d):
    n = len(d.events)
    seen = set()
    for p in range(n):
        s = _strand(d, p)
        if s is None:
            continue
        a, b, q = s
        if a.over != b.over or a.sign != -b.sign:
            continue
        key = frozenset((a.crossing, b.crossing))
        if key in seen:
            continue
        pa = d.positions(a.crossing)[0 if not a.over else 1]
        pb = d.positions(b.crossing)[0 if not b.over else 1]
        if (pa + 1) % n == pb:
            parallel = True
            second = (pa, pb)
        elif (pb + 1) % n == pa:
            parallel = False
            second = (pb, pa)
        else:
            continue
        if parallel and ((q + 1) % n == second[0] or (second[1] + 1) % n == p):
            # O1 O2 U1 U2 with nothing between the strands is not a bigon
            continue
        seen.add(key)
        yield MoveSite("r2-remove", (p, q) + second, (a.crossing, b.crossing), (parallel, a.over))


def r2(d: SurfaceDiagram, site: MoveSite) -> SurfaceDiagram:
    if site.kind == "r2-insert":
        i, j = site.positions
        parallel, first_over, sign = site.variant
        n = max(len(d.events), 1)
        if not (0 <= i <= j < n) or sign not in (1, -1) or (i == j and parallel):
            raise SiteNotEligible(f"bad bigon site {site}")
        a, b = _fresh(d, 2)
        first = (Passage(a, first_over, sign), Passage(b, first_over, -sign))
        second = (Passage(a, not first_over, sign), Passage(b, not first_over, -sign))
        if not parallel:
            second = second[::-1]
        ev = d.events
        return SurfaceDiagram(d.genus, ev[:i] + first + ev[i:j] + second + ev[j:])
    if site.kind == "r2-remove":
        if not site.crossings or set(site.crossings) not in [
            set(s.crossings) for s in _r2_remove_sites(d)
        ]:
            raise SiteNotEligible(f"no cancelling pair at {site}")
        return _drop(d, set(site.crossings))
    raise SiteNotEligible(f"{site.kind} is not a second move")


# -- R3 --------------------------------------------------------------------------


@lru_cache(maxsize=1)
def r3_patterns() -> frozenset:
    """Allowed ``(top, middle, bottom, w_TM, w_TB, w_MB)`` configurations.

    ``top`` etc. list the roles of the two crossings met by that strand, in
    walk order.
    """
    text = resources.files("chordindex").joinpath("data/r3_patterns.json").read_text()
    rows = json.loads(text)["patterns"]
    return frozenset(
        (
            tuple(r["top"]),
            tuple(r["middle"]),
            tuple(r["bottom"]),
            r["signs"]["TM"],
            r["signs"]["TB"],
            r["signs"]["MB"],
        )
        for r in rows
    )


@dataclass(frozen=True)
class Triangle:
    """Three crossings ready for a third move, by role."""

    tm: int
    tb: int
    mb: int
    top: tuple  # start positions of the three two-passage windows
    middle: tuple
    bottom: tuple
    case: str

    @property
    def ids(self) -> tuple:
        return (self.tm, self.tb, self.mb)


def _triangles(d: SurfaceDiagram):
    n = len(d.events)
    if n < 6:
        return
    windows = {}
    for p in range(n):
        s = _strand(d, p)
        if s is not None:
            a, b, q = s
            windows[p] = (a, b, q)
    at = {}
    for p, (a, b, q) in windows.items():
        at.setdefault((a.crossing, a.over), []).append(p)
        at.setdefault((b.crossing, b.over), []).append(p)
    table = r3_patterns()
    found = set()
    for p, (a, b, _) in windows.items():
        if not (a.over and b.over):
            continue
        for tm, tb in ((a.crossing, b.crossing), (b.crossing, a.crossing)):
            for pm in at.get((tm, False), ()):
                ma, mb_, _ = windows[pm]
                other = mb_ if ma.crossing == tm else ma
                if not other.over or other.crossing == tb:
                    continue
                mb = other.crossing
                for pb in at.get((tb, False), ()):
                    ba, bb, _ = windows[pb]
                    if {ba.crossing, bb.crossing} != {tb, mb} or ba.over or bb.over:
                        continue
                    role = {tm: "TM", tb: "TB", mb: "MB"}
                    key = (
                        (role[a.crossing], role[b.crossing]),
                        (role[ma.crossing], role[mb_.crossing]),
                        (role[ba.crossing], role[bb.crossing]),
                        d.sign(tm),
                        d.sign(tb),
                        d.sign(mb),
                    )
                    if key not in table or (tm, tb, mb) in found:
                        continue
                    found.add((tm, tb, mb))
                    # cyclic order of the strands along the walk
                    case = "TMB" if (pm - p) % n < (pb - p) % n else "TBM"
                    yield Triangle(tm, tb, mb, (p,), (pm,), (pb,), case)


def find_triangles(d: SurfaceDiagram) -> list[Triangle]:
    return sorted(_triangles(d), key=lambda t: (t.top, t.middle, t.bottom))


def _r3_sites(d):
    for t in find_triangles(d):
        pos = t.top + t.middle + t.bottom
        yield MoveSite("r3", pos, t.ids, (t.case,))


def r3(d: SurfaceDiagram, site: MoveSite) -> SurfaceDiagram:
    if site.kind != "r3" or site not in list(_r3_sites(d)):
        raise SiteNotEligible(f"no third-move triangle at {site}")
    n = len(d.events)
    ev = list(d.events)
    for p in site.positions:
        q = (p + 1) % n
        ev[p], ev[q] = d.events[q], d.events[p]
    return SurfaceDiagram(d.genus, ev)


def triangle_identity(d: SurfaceDiagram, t: Triangle) -> tuple[HomologyClass, HomologyClass]:
    """Both sides of the loop identity at a triangle.

    With ``A_c`` the loop from the over- to the under-passage of ``c``:
    ``A_TM + A_MB = A_TB`` when the walk visits the strands in the order top,
    middle, bottom, and ``A_TM + A_MB = A_TB + [D]`` in the other cyclic
    order. Returns ``(lhs, rhs)``.
    """
    lhs = d.over_under_class(t.tm) + d.over_under_class(t.mb)
    rhs = d.over_under_class(t.tb)
    if t.case == "TBM":
        rhs = rhs + d.homology_class()
    return lhs, rhs


# -- dispatch --------------------------------------------------------------------

_FINDERS = {
    "r1-insert": _r1_insert_sites,
    "r1-remove": _r1_remove_sites,
    "r2-insert": _r2_insert_sites,
    "r2-remove": _r2_remove_sites,
    "r3": _r3_sites,
}


def find_sites(d: SurfaceDiagram, kind: str) -> list[MoveSite]:
    """All eligible sites of one kind, in a fixed order."""
    try:
        finder = _FINDERS[kind]
    except KeyError:
        raise ValueError(f"unknown move kind {kind!r}; expected one of {KINDS}") from None
    sites = list(finder(d))
    if kind in ("r1-remove", "r2-remove"):
        sites.sort(key=lambda s: s.positions)
    return sites


def apply(d: SurfaceDiagram, site: MoveSite) -> SurfaceDiagram:
    if site.kind.startswith("r1"):
        return r1(d, site)
    if site.kind.startswith("r2"):
        return r2(d, site)
    return r3(d, site)


# -- random input ----------------------------------------------------------------


def random_diagram(genus: int, n: int, m: int, seed) -> SurfaceDiagram:
    """Shuffle ``n`` signed crossings and ``m`` side events into one walk.

    Not geometrically realizable in general. On genus 0 there are no cut
    curves, so ``m`` must be 0.
    """
    if n < 0 or m < 0:
        raise ValueError("counts must be non-negative")
    if genus == 0 and m:
        raise ValueError("genus 0 has no side events")
    rng = random.Random(seed)
    events: list = []
    for c in range(1, n + 1):
        s = rng.choice((1, -1))
        events += [Passage(c, True, s), Passage(c, False, s)]
    for _ in range(m):
        events.append(SideCrossing(rng.randrange(1, 2 * genus + 1), rng.choice((1, -1))))
    rng.shuffle(events)
    return SurfaceDiagram(genus, events)


def insert_triangle(d: SurfaceDiagram, gaps, pattern, case: str = "TMB") -> SurfaceDiagram:
    """Insert three fresh crossings in a third-move configuration.

    ``pattern`` is an entry of :func:`r3_patterns`. The three strands go into
    the given gaps (distinct or not), visited in the cyclic order ``case``.
    """
    top, middle, bottom, w_tm, w_tb, w_mb = pattern
    ids = dict(zip(("TM", "TB", "MB"), _fresh(d, 3)))
    sign = {"TM": w_tm, "TB": w_tb, "MB": w_mb}
    over = {"T": {"TM": True, "TB": True}, "M": {"TM": False, "MB": True}, "B": {"TB": False, "MB": False}}
    strands = {"T": top, "M": middle, "B": bottom}

    def strand(name):
        return [Passage(ids[r], over[name][r], sign[r]) for r in strands[name]]

    order = list(case)
    chunks = list(zip(sorted(gaps), order))
    ev = list(d.events)
    for gap, name in reversed(chunks):
        ev[gap:gap] = strand(name)
    return SurfaceDiagram(d.genus, ev)


__all__ = [
    "KINDS",
    "MoveSite",
    "Triangle",
    "apply",
    "find_sites",
    "find_triangles",
    "insert_triangle",
    "r1",
    "r2",
    "r3",
    "r3_patterns",
    "random_diagram",
    "triangle_identity",
]
