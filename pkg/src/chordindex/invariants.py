"""Knot invariants assembled from chord indices."""

from __future__ import annotations

import itertools
from typing import Sequence

from .algebra import CyclicPoly, FormalSum, GroupRingElement, LaurentPoly
from .diagram import GaussDiagram, SurfaceDiagram, smoothing_classes, writhe
from .homology import HomologyClass, QuotientMap, admissible_subgroup_basis
from .indices import (
    chord_indices,
    fiedler_index,
    ind,
    index_functions,
    regular_index,
)


def writhe_polynomial(d: SurfaceDiagram, alpha: Sequence[int]) -> LaurentPoly:
    f = chord_indices(d, alpha)
    return LaurentPoly((f[c], w) for c, w in d.crossings.items() if f[c])


def virtual_writhe_polynomial(g: GaussDiagram, normalized: bool = False) -> LaurentPoly:
    """Writhe polynomial of the virtual knot carried by ``g``.

    ``normalized=True`` keeps index-zero chords and subtracts the writhe,
    i.e. returns ``W(t) - W(1)``.
    """
    terms = [(ind(g, ch.id), ch.sign) for ch in g.chords]
    if normalized:
        return LaurentPoly(terms + [(0, -sum(ch.sign for ch in g.chords))])
    return LaurentPoly((e, w) for e, w in terms if e)


def group_ring_invariant(d: SurfaceDiagram, normalized: bool = True) -> GroupRingElement:
    """``sum w(c) ([D_c^l] + [D_c^r]) - w(D) [K]``.

    A kink contributes ``w ([K] + [0])``, so the literal sum still moves by
    ``w [0]`` under the first move. ``normalized`` also subtracts
    ``w(D) [0]``, which makes the result a knot invariant; pass ``False``
    for the literal sum.
    """
    terms = []
    for c, w in d.crossings.items():
        left, right = smoothing_classes(d, c)
        terms += [(left, w), (right, w)]
    terms.append((d.homology_class(), -writhe(d)))
    if normalized:
        terms.append((HomologyClass.zero(d.genus), -writhe(d)))
    return GroupRingElement(terms)


def small_state_sum(d: SurfaceDiagram) -> GroupRingElement:
    """Sum over crossings in the group ring of ``H_1 / <[K]>``.

    Keys are canonical quotient coordinates (see :class:`QuotientMap`).
    """
    q = QuotientMap(d.homology_class())
    terms = [(q(fiedler_index(d, c)), w) for c, w in d.crossings.items()]
    terms.append((q(HomologyClass.zero(d.genus)), -writhe(d)))
    return GroupRingElement(terms)


def regular_invariant(d: SurfaceDiagram) -> GroupRingElement:
    """Keys are ``("x", class)`` and ``("y", class)``: coefficients are linear in x, y."""
    terms = []
    for c, w in d.crossings.items():
        r = regular_index(d, c)
        terms += [(("x", r.x_class), w), (("y", r.y_class), w)]
    return GroupRingElement(terms)


def specialize_regular(elem: GroupRingElement, x: int = 1, y: int = 1) -> GroupRingElement:
    weight = {"x": x, "y": y}
    return GroupRingElement((cls, weight[m] * c) for (m, cls), c in elem.items())


def transcendental_invariant(d: SurfaceDiagram, alpha: Sequence[int]) -> FormalSum:
    f = chord_indices(d, alpha)
    g = index_functions(d, alpha)
    terms = [((f[c], g[c]), w) for c, w in d.crossings.items()]
    terms.append(((0, CyclicPoly(0)), -writhe(d)))
    return FormalSum(terms)


def zero_class_scan(d: SurfaceDiagram, bound: int, jobs: int = 1) -> list[HomologyClass]:
    """Nonzero admissible classes, with subgroup-basis coefficients in
    ``[-bound, bound]``, whose writhe polynomial vanishes.

    Enumeration is lexicographic in the coefficient vectors. An empty answer
    only means no witness was found inside the box.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    basis = admissible_subgroup_basis(d)
    if not basis:
        return []
    zero = HomologyClass.zero(d.genus)
    candidates = []
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(basis)):
        if any(coeffs):
            alpha = zero
            for a, b in zip(coeffs, basis):
                if a:
                    alpha = alpha + b * a
            candidates.append(alpha)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as pool:
            flags = list(pool.map(_vanishes, itertools.repeat(d), candidates, chunksize=64))
    else:
        flags = [_vanishes(d, a) for a in candidates]
    return [a for a, hit in zip(candidates, flags) if hit]


def _vanishes(d, alpha) -> bool:
    return writhe_polynomial(d, alpha).is_zero()
