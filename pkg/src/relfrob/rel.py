"""Finite binary relations as packed bit rows.

Objects are finite index sets given by their size n and read as
{0, 1, ..., n-1}.  A relation r from A to B stores one Python int per
domain element; bit b of row a is set exactly when a relates to b.  With
this layout composition is a cascade of bitwise ORs, which is where the
exhaustive searches in this package spend nearly all of their time.

Product sets are flattened to a single index set via (x, y) -> x*|Y| + y,
so the tensor is associative on the nose and relations between products
are plain relations.  The unit object is the one-element set; subsets of
a carrier travel as relations from it.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MONO_DOMAIN_LIMIT = 20


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Rel:
    """A binary relation between {0..dom-1} and {0..cod-1}."""

    __slots__ = ("dom", "cod", "rows")

    def __init__(self, dom: int, cod: int, rows: Iterable[int]):
        rows = tuple(rows)
        if dom < 0 or cod < 0:
            raise ValueError(f"negative carrier size: dom={dom}, cod={cod}")
        if len(rows) != dom:
            raise ValueError(f"expected {dom} rows, got {len(rows)}")
        full = (1 << cod) - 1
        for a, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {a} has bits outside 0..{cod - 1}")
        self.dom = dom
        self.cod = cod
        self.rows = rows

    @classmethod
    def from_pairs(cls, dom: int, cod: int, pairs: Iterable[tuple[int, int]]) -> "Rel":
        rows = [0] * dom
        for a, b in pairs:
            if not (0 <= a < dom and 0 <= b < cod):
                raise ValueError(f"pair ({a}, {b}) outside {dom} x {cod}")
            rows[a] |= 1 << b
        return cls(dom, cod, rows)

    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((a, b) for a, row in enumerate(self.rows) for b in bits(row))

    def row(self, a: int) -> int:
        return self.rows[a]

    def then(self, other: "Rel") -> "Rel":
        """Relational composition, self first: a (self;other) c."""
        if self.cod != other.dom:
            raise ValueError(
                f"composition mismatch: {self.dom}x{self.cod} then {other.dom}x{other.cod}")
        orows = other.rows
        out = []
        for row in self.rows:
            acc = 0
            for b in bits(row):
                acc |= orows[b]
            out.append(acc)
        return Rel(self.dom, other.cod, out)

    __rshift__ = then

    def converse(self) -> "Rel":
        out = [0] * self.cod
        for a, row in enumerate(self.rows):
            bit = 1 << a
            for b in bits(row):
                out[b] |= bit
        return Rel(self.cod, self.dom, out)

    def tensor(self, other: "Rel") -> "Rel":
        """Parallel pairing on flattened products."""
        out = []
        for row in self.rows:
            for orow in other.rows:
                acc = 0
                for b in bits(row):
                    acc |= orow << (b * other.cod)
                out.append(acc)
        return Rel(self.dom * other.dom, self.cod * other.cod, out)

    def is_mono(self) -> bool:
        """Whether the direct-image map on subsets is injective.

        Enumerates all 2^dom subsets incrementally, so the domain is capped.
        """
        if self.dom > MONO_DOMAIN_LIMIT:
            raise ValueError(
                f"is_mono domain {self.dom} exceeds limit {MONO_DOMAIN_LIMIT}")
        images = [0] * (1 << self.dom)
        seen = {0}
        for mask in range(1, 1 << self.dom):
            low = mask & -mask
            img = images[mask ^ low] | self.rows[low.bit_length() - 1]
            images[mask] = img
            seen.add(img)
            if len(seen) != mask + 1:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Rel):
            return NotImplemented
        return (self.dom, self.cod, self.rows) == (other.dom, other.cod, other.rows)

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, self.rows))

    def __repr__(self) -> str:
        return f"Rel({self.dom}, {self.cod}, {sorted(self.pairs())})"


def identity(n: int) -> Rel:
    return Rel(n, n, (1 << a for a in range(n)))


def swap(m: int, n: int) -> Rel:
    """The symmetry m*n -> n*m sending (a, b) to (b, a)."""
    return Rel(m * n, n * m, (1 << (b * m + a) for a in range(m) for b in range(n)))


def vector(n: int, elems: Iterable[int]) -> Rel:
    """A subset of {0..n-1} as a relation from the one-element set."""
    mask = 0
    for e in elems:
        if not 0 <= e < n:
            raise ValueError(f"element {e} outside 0..{n - 1}")
        mask |= 1 << e
    return Rel(1, n, (mask,))
