"""Exact sparse algebra: Laurent polynomials, cyclic quotients, group rings.

Every type here is immutable, hashable and keeps no zero coefficients, so
``==`` is mathematical equality.
"""

from __future__ import annotations

import re
from typing import Hashable, Iterable, Mapping


def _clean(items: Iterable[tuple[Hashable, int]]) -> dict:
    out: dict = {}
    for k, c in items:
        if c:
            out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


class LaurentPoly:
    """Element of Z[t, 1/t] stored as ``{exponent: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms = _clean((int(e), int(c)) for e, c in items)
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    def terms(self) -> list[tuple[int, int]]:
        """``(exponent, coefficient)`` pairs sorted by exponent."""
        return sorted(self._terms.items())

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        merged = list(self._terms.items()) + list(other._terms.items())
        return LaurentPoly(merged)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, LaurentPoly) else -other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: other * c for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly(
            (e1 + e2, c1 * c2)
            for e1, c1 in self._terms.items()
            for e2, c2 in other._terms.items()
        )

    __rmul__ = __mul__

    def at_one(self) -> int:
        return sum(self._terms.values())

    def invert(self) -> LaurentPoly:
        """Substitute ``t -> 1/t``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*t^{e}" for e, c in self.terms())

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(r"^\s*([+-]?\d+)\s*\*\s*t\s*\^\s*([+-]?\d+)\s*$")

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``: ``"c1*t^e1 + c2*t^e2 + ..."`` or ``"0"``."""
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for chunk in text.split(" + "):
            m = cls._TERM.match(chunk)
            if not m:
                raise ValueError(f"bad Laurent term {chunk!r}")
            terms.append((int(m.group(2)), int(m.group(1))))
        return cls(terms)


class CyclicPoly:
    """Element of Z[s, 1/s] / (s^k - 1) in reduced form.

    ``modulus = 0`` means no reduction (the full Laurent ring); otherwise
    exponents live in ``0..modulus-1``. A negative modulus is normalised to
    its absolute value.
    """

    __slots__ = ("modulus", "_terms", "_hash")

    def __init__(self, modulus: int, terms: Mapping[int, int] | Iterable = ()):
        k = abs(int(modulus))
        items = terms.items() if isinstance(terms, Mapping) else terms
        if k:
            items = ((int(e) % k, c) for e, c in items)
        self.modulus = k
        self._terms = _clean(items)
        self._hash = None

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def at_one(self) -> int:
        return sum(self._terms.values())

    def __add__(self, other):
        if other.modulus != self.modulus:
            raise ValueError("cyclic polynomials over different moduli")
        return CyclicPoly(self.modulus, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return CyclicPoly(self.modulus, {e: -c for e, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, CyclicPoly):
            return NotImplemented
        return self.modulus == other.modulus and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.modulus, frozenset(self._terms.items())))
        return self._hash

    def __lt__(self, other):
        return (self.modulus, self.terms()) < (other.modulus, other.terms())

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*s^{e}" for e, c in self.terms())

    def __repr__(self):
        return f"CyclicPoly({self.modulus}, {str(self)!r})"


class FormalSum:
    """Integer combination of symbols ``t_k ^ g`` with ``g`` a :class:`CyclicPoly`.

    Symbols with different ``k`` never combine, and ``t_k ^ 0`` is a symbol
    in its own right, not the constant 1.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, CyclicPoly], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        checked = []
        for (k, g), c in items:
            if g.modulus != abs(k):
                raise ValueError(f"exponent ring mismatch: t_{k} with modulus {g.modulus}")
            checked.append(((k, g), c))
        self._terms = _clean(checked)

    def __add__(self, other):
        return FormalSum(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return FormalSum({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0], kv[0][1].terms()))

    def collapse(self) -> LaurentPoly:
        """Forget the exponent polynomials: ``t_k ^ g -> t^k``."""
        return LaurentPoly(((k, c) for (k, _), c in self._terms.items()))

    def records(self) -> list[dict]:
        return [
            {"k": k, "poly": [[e, a] for e, a in g.terms()], "coeff": c}
            for (k, g), c in self.items()
        ]

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*t_{k}^({g})" for (k, g), c in self.items())

    def __repr__(self):
        return f"FormalSum({str(self)!r})"


class GroupRingElement:
    """Finitely supported ``{key: int}`` with keys from an abelian group.

    Keys are usually homology class tuples; any hashable, sortable key works.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms = _clean((tuple(k) if isinstance(k, list) else k, c) for k, c in items)

    def __add__(self, other):
        return GroupRingElement(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return GroupRingElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return GroupRingElement({k: n * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def coeff(self, key) -> int:
        return self._terms.get(key, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    def map_keys(self, fn) -> GroupRingElement:
        return GroupRingElement((fn(k), c) for k, c in self._terms.items())

    def records(self) -> list[dict]:
        return [{"key": _jsonable(k), "coeff": c} for k, c in self.items()]

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*[{_fmt_key(k)}]" for k, c in self.items())

    def __repr__(self):
        return f"GroupRingElement({str(self)!r})"


def _sort_key(k):
    if isinstance(k, tuple):
        return (0, tuple(_sort_key(x) for x in k))
    if isinstance(k, int):
        return (1, k)
    return (2, str(k))


def _fmt_key(k):
    if isinstance(k, tuple):
        return ",".join(_fmt_key(x) if isinstance(x, tuple) else str(x) for x in k)
    return str(k)


def _jsonable(k):
    if isinstance(k, tuple):
        return [_jsonable(x) for x in k]
    return k
