"""First homology of a closed oriented surface in a fixed symplectic basis.

Classes are integer vectors of length ``2g`` in the basis ``e_1, ..., e_2g``.
The intersection form pairs ``e_{2i-1}`` with ``e_{2i}`` to ``+1`` and is zero on
all other basis pairs.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import LengthMismatch, SideIndexOutOfRange


class HomologyClass(tuple):
    """An integer vector with componentwise arithmetic.

    Subclasses ``tuple`` so classes hash, compare and serialize like plain
    tuples; ``+`` is vector addition, not concatenation.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable[int] = ()):
        return super().__new__(cls, (int(c) for c in coords))

    @classmethod
    def zero(cls, genus: int) -> HomologyClass:
        return cls((0,) * (2 * genus))

    @property
    def genus(self) -> int:
        return len(self) // 2

    def _check(self, other):
        if len(self) != len(other):
            raise LengthMismatch(f"classes of rank {len(self)} and {len(other)}")

    def __add__(self, other):
        self._check(other)
        return HomologyClass(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check(other)
        return HomologyClass(a - b for a, b in zip(self, other))

    def __neg__(self):
        return HomologyClass(-a for a in self)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return HomologyClass(n * a for a in self)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self)

    def dot(self, other) -> int:
        return intersection(self, other)

    def __repr__(self):
        return f"HomologyClass({tuple(self)!r})"


def intersection(x: Sequence[int], y: Sequence[int]) -> int:
    """Algebraic intersection number ``x . y``."""
    if len(x) != len(y):
        raise LengthMismatch(f"classes of rank {len(x)} and {len(y)}")
    total = 0
    for i in range(0, len(x), 2):
        total += x[i] * y[i + 1] - x[i + 1] * y[i]
    return total


def basis_vector(index: int, genus: int) -> HomologyClass:
    """``e_index`` for ``1 <= index <= 2*genus``."""
    if not 1 <= index <= 2 * genus:
        raise SideIndexOutOfRange(f"basis index {index} outside 1..{2 * genus}")
    v = [0] * (2 * genus)
    v[index - 1] = 1
    return HomologyClass(v)


def walk_class(events, genus: int) -> HomologyClass:
    """Net signed count of side-crossing events, one coordinate per basis vector."""
    from .diagram import SideCrossing

    coords = [0] * (2 * genus)
    for ev in events:
        if isinstance(ev, SideCrossing):
            if not 1 <= ev.index <= 2 * genus:
                raise SideIndexOutOfRange(
                    f"side event {ev} outside genus {genus}"
                )
            coords[ev.index - 1] += ev.direction
    return HomologyClass(coords)


# -- exact integer lattice helpers -------------------------------------------


def unimodular_reduce(vec: Sequence[int]) -> tuple[int, list[list[int]]]:
    """Return ``(d, U)`` with ``U`` unimodular and ``U @ vec = d * e_0``.

    ``d = gcd(vec) >= 0``. Row operations only, so ``U`` is an integer matrix
    with integer inverse.
    """
    m = len(vec)
    a = list(vec)
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    while True:
        nz = [i for i in range(m) if a[i]]
        if len(nz) <= 1:
            break
        p = min(nz, key=lambda i: abs(a[i]))
        for j in nz:
            if j == p:
                continue
            q = a[j] // a[p]
            if q:
                a[j] -= q * a[p]
                U[j] = [uj - q * up for uj, up in zip(U[j], U[p])]
    nz = [i for i in range(m) if a[i]]
    if not nz:
        return 0, U
    p = nz[0]
    if p != 0:
        a[0], a[p] = a[p], a[0]
        U[0], U[p] = U[p], U[0]
    if a[0] < 0:
        a[0] = -a[0]
        U[0] = [-x for x in U[0]]
    return a[0], U


def hermite_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix (zero rows dropped).

    Pivots are positive and entries above each pivot lie in ``[0, pivot)``,
    which makes the row space representation canonical.
    """
    M = [list(r) for r in rows]
    if not M:
        return []
    ncols = len(M[0])
    out: list[list[int]] = []
    for col in range(ncols):
        live = [r for r in M if r[col]]
        rest = [r for r in M if not r[col]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                (nxt if r[col] else rest).append(r)
            live = nxt
        if live:
            piv = live[0]
            if piv[col] < 0:
                piv = [-x for x in piv]
            out.append(piv)
        M = rest
    for i, piv in enumerate(out):
        col = next(c for c, x in enumerate(piv) if x)
        for j in range(i):
            q = out[j][col] // piv[col]
            if q:
                out[j] = [x - q * y for x, y in zip(out[j], piv)]
    return out


def kernel_basis(functional: Sequence[int]) -> list[HomologyClass]:
    """A canonical Z-basis of ``{x : functional . x = 0}`` (ordinary dot product)."""
    d, U = unimodular_reduce(functional)
    rows = U if d == 0 else U[1:]
    return [HomologyClass(r) for r in hermite_rows(rows)]


def admissible_subgroup_basis(diagram) -> list[HomologyClass]:
    """Z-basis of the classes with zero intersection against the knot."""
    k = diagram.homology_class()
    # alpha . k = sum alpha_{2i-1} k_{2i} - alpha_{2i} k_{2i-1}
    functional = []
    for i in range(0, len(k), 2):
        functional += [k[i + 1], -k[i]]
    return kernel_basis(functional)


def is_admissible(alpha: Sequence[int], diagram) -> bool:
    return intersection(alpha, diagram.homology_class()) == 0


class QuotientMap:
    """Canonical coordinates on ``H_1 / <k>`` for a fixed class ``k``.

    A unimodular change of basis moves ``k`` to ``d * e_1`` with
    ``d = gcd(k)``; the first new coordinate is then reduced modulo ``d``.
    For ``k = 0`` the map is the identity.
    """

    def __init__(self, k: Sequence[int]):
        self.k = HomologyClass(k)
        self.modulus, self._U = unimodular_reduce(self.k)

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        y = [sum(u * xi for u, xi in zip(row, x)) for row in self._U]
        if self.modulus and y:
            y[0] %= self.modulus
        return tuple(y)
