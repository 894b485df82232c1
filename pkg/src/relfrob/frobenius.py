"""Axiom checks for candidate multiplication structures over finite relations.

A candidate is a relational multiplication nabla: X*X -> X together with a
unit subset bot of X.  The copying side is fixed by taking converses:
delta = nabla converse, top = bot converse.  ``verify_structure`` evaluates
the monoid laws, commutativity, the normalization law (copy-then-multiply
is the identity) and the interchange law relating multiplication to
copying, and returns witnessed verdicts for each.

The interchange law is checked twice, by independent routes: once by
composing the three relation diagrams and comparing them row by row, and
once pointwise from the partial-operation reading of the multiplication.
The two verdicts must be structurally identical; a discrepancy indicates a
bug in one of the routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .rel import Rel, bits, identity, swap, vector


class FrobeniusCandidate:
    """A multiplication relation and unit subset over carrier {0..n-1}."""

    __slots__ = ("n", "nabla", "bot", "delta", "top", "bot_vec")

    def __init__(self, n: int, nabla: Rel, bot: Iterable[int]):
        if nabla.dom != n * n or nabla.cod != n:
            raise ValueError(
                f"multiplication must be {n * n}x{n}, got {nabla.dom}x{nabla.cod}")
        self.n = n
        self.nabla = nabla
        self.bot = frozenset(bot)
        self.bot_vec = vector(n, self.bot)
        self.delta = nabla.converse()
        self.top = self.bot_vec.converse()

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[tuple[int, int, int]],
                     bot: Iterable[int]) -> "FrobeniusCandidate":
        """Build from triples (x, y, z) meaning z is a value of x*y."""
        nabla = Rel.from_pairs(n * n, n, ((x * n + y, z) for x, y, z in triples))
        return cls(n, nabla, bot)

    def triples(self) -> tuple[tuple[int, int, int], ...]:
        n = self.n
        return tuple(sorted((p // n, p % n, z) for p, z in self.nabla.pairs()))

    def product(self, x: int, y: int) -> frozenset[int]:
        """All values of x*y (empty when undefined)."""
        return frozenset(bits(self.nabla.row(x * self.n + y)))

    def is_single_valued(self) -> bool:
        return all(row & (row - 1) == 0 for row in self.nabla.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FrobeniusCandidate):
            return NotImplemented
        return (self.n, self.nabla, self.bot) == (other.n, other.nabla, other.bot)

    def __hash__(self) -> int:
        return hash((self.n, self.nabla, self.bot))

    def __repr__(self) -> str:
        return (f"FrobeniusCandidate(n={self.n}, triples={list(self.triples())}, "
                f"bot={sorted(self.bot)})")


@dataclass(frozen=True)
class Verdict:
    """Outcome of one axiom check.

    ``witness`` is None on a pass; on failure it holds the first violation
    in scan order.  Checks that enumerate every violating input also fill
    ``violations`` with the offending indices, in ascending order.
    """

    ok: bool
    witness: object = None
    violations: tuple = ()


@dataclass(frozen=True)
class FroWitness:
    """The three interchange-law sets at one input pair (i, j).

    fiber        pairs whose product agrees with i*j
    split_left   pairs (x, y'*j) over splittings x*y' of i
    split_right  pairs (i*x', y) over splittings x'*y of j
    """

    i: int
    j: int
    fiber: frozenset
    split_left: frozenset
    split_right: frozenset


@dataclass(frozen=True)
class AxiomReport:
    """Witnessed verdicts for one candidate.

    ``frobenius_pointwise`` is None when the multiplication is not
    single-valued, since the pointwise reading of the interchange law is
    only defined for partial operations.
    """

    n: int
    associativity: Verdict
    left_unit: Verdict
    right_unit: Verdict
    commutativity: Verdict
    special: Verdict
    frobenius: Verdict
    frobenius_pointwise: Verdict | None
    empty_carrier: bool

    @property
    def is_classical(self) -> bool:
        return (self.associativity.ok and self.left_unit.ok and self.right_unit.ok
                and self.commutativity.ok and self.special.ok and self.frobenius.ok)

    @property
    def is_special_frobenius(self) -> bool:
        return (self.associativity.ok and self.left_unit.ok and self.right_unit.ok
                and self.special.ok and self.frobenius.ok)

    def axioms(self) -> Iterator[tuple[str, Verdict | None]]:
        yield "associativity", self.associativity
        yield "left-unit", self.left_unit
        yield "right-unit", self.right_unit
        yield "commutativity", self.commutativity
        yield "special", self.special
        yield "frobenius", self.frobenius
        yield "frobenius-pointwise", self.frobenius_pointwise


def _decode_pairs(row: int, n: int) -> frozenset[tuple[int, int]]:
    return frozenset(divmod(b, n) for b in bits(row))


def _check_identity(got: Rel, n: int) -> Verdict:
    for x in range(n):
        if got.row(x) != 1 << x:
            return Verdict(False, (x, frozenset(bits(got.row(x)))))
    return Verdict(True)


def verify_structure(c: FrobeniusCandidate) -> AxiomReport:
    """Check every axiom, each with a witness on failure.

    Witness shapes: associativity (a, b, c, lhs, rhs); unit laws
    (x, got-set); commutativity (i, j, swapped, straight); special
    (x, got-set); frobenius a FroWitness plus the full tuple of violating
    (i, j) pairs.
    """
    n = c.n
    idn = identity(n)
    nab, delta = c.nabla, c.delta

    lhs = nab.tensor(idn) >> nab
    rhs = idn.tensor(nab) >> nab
    assoc = Verdict(True)
    for p in range(n * n * n):
        if lhs.row(p) != rhs.row(p):
            a, bc = divmod(p, n * n)
            b, cc = divmod(bc, n)
            assoc = Verdict(False, (a, b, cc,
                                    frozenset(bits(lhs.row(p))),
                                    frozenset(bits(rhs.row(p)))))
            break

    left_unit = _check_identity(c.bot_vec.tensor(idn) >> nab, n)
    right_unit = _check_identity(idn.tensor(c.bot_vec) >> nab, n)

    swapped = swap(n, n) >> nab
    comm = Verdict(True)
    for p in range(n * n):
        if swapped.row(p) != nab.row(p):
            i, j = divmod(p, n)
            comm = Verdict(False, (i, j,
                                   frozenset(bits(swapped.row(p))),
                                   frozenset(bits(nab.row(p)))))
            break

    special = _check_identity(delta >> nab, n)

    fro = _check_fro_composite(c)
    fro_pointwise = check_fro_pointwise(c) if c.is_single_valued() else None

    return AxiomReport(
        n=n,
        associativity=assoc,
        left_unit=left_unit,
        right_unit=right_unit,
        commutativity=comm,
        special=special,
        frobenius=fro,
        frobenius_pointwise=fro_pointwise,
        empty_carrier=(n == 0),
    )


def _check_fro_composite(c: FrobeniusCandidate) -> Verdict:
    """Interchange law via relation composition of the three diagrams."""
    n = c.n
    idn = identity(n)
    nab, delta = c.nabla, c.delta
    fiber_route = nab >> delta
    split_left_route = delta.tensor(idn) >> idn.tensor(nab)
    split_right_route = idn.tensor(delta) >> nab.tensor(idn)

    violations = []
    witness = None
    for p in range(n * n):
        rf = fiber_route.row(p)
        rl = split_left_route.row(p)
        rr = split_right_route.row(p)
        if not (rf == rl == rr):
            i, j = divmod(p, n)
            violations.append((i, j))
            if witness is None:
                witness = FroWitness(i, j, _decode_pairs(rf, n),
                                     _decode_pairs(rl, n), _decode_pairs(rr, n))
    if witness is None:
        return Verdict(True)
    return Verdict(False, witness, tuple(violations))


def _partial_products(c: FrobeniusCandidate) -> dict[tuple[int, int], int]:
    n = c.n
    prods = {}
    for p, row in enumerate(c.nabla.rows):
        if row == 0:
            continue
        if row & (row - 1):
            x, y = divmod(p, n)
            raise ValueError(
                f"multiplication is not single-valued at ({x}, {y}): "
                f"values {sorted(bits(row))}")
        prods[divmod(p, n)] = row.bit_length() - 1
    return prods


def _sets_at(prods: dict[tuple[int, int], int], i: int, j: int) -> FroWitness:
    fiber: set = set()
    if (i, j) in prods:
        v = prods[(i, j)]
        fiber = {pair for pair, z in prods.items() if z == v}
    split_left = {(x, prods[(yp, j)])
                  for (x, yp), z in prods.items() if z == i and (yp, j) in prods}
    split_right = {(prods[(i, xp)], y)
                   for (xp, y), z in prods.items() if z == j and (i, xp) in prods}
    return FroWitness(i, j, frozenset(fiber), frozenset(split_left),
                      frozenset(split_right))


def frobenius_sets_at(c: FrobeniusCandidate, i: int, j: int) -> FroWitness:
    """Evaluate the three pointwise interchange sets at one input pair.

    Requires a single-valued multiplication.  Entries with undefined
    products are dropped, mirroring what the relational composites do.
    """
    return _sets_at(_partial_products(c), i, j)


def check_fro_pointwise(c: FrobeniusCandidate) -> Verdict:
    """Interchange law evaluated pointwise on the partial operation.

    Raises ValueError when the multiplication is not single-valued, naming
    the offending input pair.  The verdict mirrors the composite check
    exactly: same witness, same violation tuple.
    """
    prods = _partial_products(c)  # raises, naming the pair, when multi-valued
    n = c.n
    violations = []
    witness = None
    for i in range(n):
        for j in range(n):
            w = _sets_at(prods, i, j)
            if not (w.fiber == w.split_left == w.split_right):
                violations.append((i, j))
                if witness is None:
                    witness = w
    if witness is None:
        return Verdict(True)
    return Verdict(False, witness, tuple(violations))
