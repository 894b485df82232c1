"""Derived data of a verified structure: elements, self-duality, blocks.

The copyable subsets of a structure (its classical elements) are found by
plain brute force over all subsets rather than by trusting any theorem;
``decompose`` then recovers the block partition from the unit subset and
checks, with assertions, that the blocks really are groups.  Internal
assertion failures here mean a bug, not bad input: every candidate is run
through the axiom checker first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .frobenius import FrobeniusCandidate, Verdict, verify_structure
from .groups import (AbelianGroupSpec, GroupSpec, StructureSpec, identify_group,
                     invariant_factors_of_table)
from .rel import Rel, bits, identity, vector

ELEMENTS_CARRIER_LIMIT = 20
SUBOBJECT_BIT_LIMIT = 24


class PreconditionError(ValueError):
    """The input structure fails an axiom the operation relies on."""


@dataclass(frozen=True)
class QuantumStructure:
    """A self-duality pairing: eta relates the unit object to matched pairs."""

    n: int
    eta: Rel

    @property
    def epsilon(self) -> Rel:
        return self.eta.converse()

    def eta_pairs(self) -> tuple[tuple[int, int], ...]:
        n = self.n
        return tuple(sorted(divmod(q, n) for _, q in self.eta.pairs()))


@dataclass(frozen=True)
class DecompositionResult:
    """Block partition of a structure, with one group per block."""

    blocks: tuple  # (frozenset of elements, AbelianGroupSpec | GroupSpec) pairs
    spec: StructureSpec


def _require(c: FrobeniusCandidate, commutative: bool, what: str):
    report = verify_structure(c)
    ok = report.is_classical if commutative else report.is_special_frobenius
    if not ok:
        failing = [name for name, v in report.axioms()
                   if v is not None and not v.ok
                   and (commutative or name != "commutativity")]
        raise PreconditionError(f"{what} needs a verified structure; failing: {failing}")


def classical_elements(c: FrobeniusCandidate) -> list[frozenset[int]]:
    """All copyable subsets, by brute force over the 2^n subsets.

    A subset passes when copying it yields exactly its square and it meets
    the unit subset.  For a verified commutative structure these are
    exactly the carriers of the group blocks, but nothing here assumes so.
    """
    n = c.n
    if n > ELEMENTS_CARRIER_LIMIT:
        raise ValueError(
            f"carrier size {n} exceeds the subset search limit {ELEMENTS_CARRIER_LIMIT}")
    _require(c, commutative=True, what="classical_elements")
    # fiber[z]: the pairs multiplying to z, as one n*n-bit mask
    fibers = c.delta.rows
    bot_mask = c.bot_vec.row(0)
    out = []
    for phi in range(1, 1 << n):
        copied = 0
        square = 0
        rest = phi
        while rest:
            low = rest & -rest
            a = low.bit_length() - 1
            rest ^= low
            copied |= fibers[a]
            square |= phi << (a * n)
        if copied == square and phi & bot_mask:
            out.append(frozenset(bits(phi)))
    return sorted(out, key=sorted)


def quantum_structure(c: FrobeniusCandidate) -> QuantumStructure:
    """The pairing obtained by copying the unit subset."""
    _require(c, commutative=True, what="quantum_structure")
    return QuantumStructure(c.n, c.bot_vec >> c.delta)


def check_duality(q: QuantumStructure) -> Verdict:
    """Both triangle identities for the pairing; witnessed on failure.

    The witness is (side, x, got-set) for the first row differing from the
    identity, sides scanned left then right.
    """
    n = q.n
    idn = identity(n)
    left = idn.tensor(q.eta) >> q.epsilon.tensor(idn)
    right = q.eta.tensor(idn) >> idn.tensor(q.epsilon)
    for side, composite in (("left", left), ("right", right)):
        for x in range(n):
            if composite.row(x) != 1 << x:
                return Verdict(False, (side, x, frozenset(bits(composite.row(x)))))
    return Verdict(True)


def represent(c: FrobeniusCandidate, phi: Iterable[int]) -> Rel:
    """The action of a subset: x relates to every value of a*x with a in phi."""
    return vector(c.n, phi).tensor(identity(c.n)) >> c.nabla


def is_partial_bijection(r: Rel) -> bool:
    """Single-valued with single-valued converse."""
    forward = all(row & (row - 1) == 0 for row in r.rows)
    return forward and all(row & (row - 1) == 0 for row in r.converse().rows)


def star(c: FrobeniusCandidate, phi: Iterable[int]) -> frozenset[int]:
    """The dual subset under the pairing; inversion on group blocks.

    Assumes a verified commutative structure; like ``represent`` this is a
    formula evaluator and performs no axiom checking of its own.
    """
    eta = c.bot_vec >> c.delta
    phi_op = vector(c.n, phi).converse()
    return frozenset(bits((eta >> phi_op.tensor(identity(c.n))).row(0)))


def decompose(c: FrobeniusCandidate) -> DecompositionResult:
    """Split a verified structure into its group blocks.

    Accepts non-commutative structures; commutativity is the one axiom not
    required.  Each unit element spans the block on which it acts as
    identity; the blocks must partition the carrier and each restricted
    multiplication must be a total group operation, else an assertion
    fires (that would be a bug, not bad input).
    """
    _require(c, commutative=False, what="decompose")
    n = c.n
    seen: set[int] = set()
    blocks = []
    for e in sorted(c.bot):
        action = represent(c, frozenset({e}))
        members = sorted(x for x in range(n) if action.row(x) == 1 << x)
        assert members, f"unit {e} spans no block"
        assert e in members, f"unit {e} outside its own block"
        assert not seen & set(members), f"block of unit {e} overlaps an earlier block"
        seen.update(members)
        blocks.append((e, members))
    assert seen == set(range(n)), "blocks do not cover the carrier"

    out = []
    spec_blocks = []
    for e, members in blocks:
        index = {x: k for k, x in enumerate(members)}
        m = len(members)
        table = []
        for x in members:
            row = []
            for y in members:
                vals = c.product(x, y)
                assert len(vals) == 1, f"product {x}*{y} not single-valued in block"
                (z,) = vals
                assert z in index, f"product {x}*{y} leaves its block"
                row.append(index[z])
            table.append(tuple(row))
        for x in members:
            for y in range(n):
                if y not in index:
                    assert not c.product(x, y), f"cross-block product {x}*{y} defined"
                    assert not c.product(y, x), f"cross-block product {y}*{x} defined"
        table = tuple(table)
        group: AbelianGroupSpec | GroupSpec
        if all(table[a][b] == table[b][a] for a in range(m) for b in range(a + 1, m)):
            group = AbelianGroupSpec(invariant_factors_of_table(table))
        else:
            group = identify_group(table)
        out.append((frozenset(members), group))
        spec_blocks.append(group)
    return DecompositionResult(tuple(out), StructureSpec(tuple(spec_blocks)))


def comonoid_subobjects(c: FrobeniusCandidate, m: int) -> list[Rel]:
    """All monic comonoid maps into the structure from a standard m-carrier.

    Exhausts every relation from m to the carrier, so m*n is capped at
    24 bits.  The source comonoid copies points diagonally and deletes
    everything, i.e. it is the standard structure on m points.
    """
    n = c.n
    if m < 0:
        raise ValueError(f"source size {m} is negative")
    if m * n > SUBOBJECT_BIT_LIMIT:
        raise ValueError(
            f"search space {m}x{n} exceeds {SUBOBJECT_BIT_LIMIT} bits")
    _require(c, commutative=True, what="comonoid_subobjects")
    delta_m = Rel.from_pairs(m, m * m, ((i, i * m + i) for i in range(m)))
    top_m = Rel.from_pairs(m, 1, ((i, 0) for i in range(m)))
    out = []
    for mask in range(1 << (m * n)):
        rows = [(mask >> (i * n)) & ((1 << n) - 1) for i in range(m)]
        r = Rel(m, n, rows)
        if not r.is_mono():
            continue
        if r >> c.delta != delta_m >> r.tensor(r):
            continue
        if r >> c.top != top_m:
            continue
        out.append(r)
    return sorted(out, key=lambda r: sorted(r.pairs()))
