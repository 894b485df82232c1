"""Group specs, tables, classification, and the block grammar."""

from __future__ import annotations

import doctest
import itertools
import math

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

import relfrob.groups
from relfrob import (AbelianGroupSpec, BUILTIN_NONABELIAN, GroupSpec,
                     StructureSpec, abelian_table, are_isomorphic,
                     build_biproduct, build_group_structure, element_orders,
                     enumerate_abelian_groups, identify_group,
                     invariant_factors_of_table, normalize_invariant_factors,
                     parse_structure_spec, verify_structure)


def count_partitions(m: int) -> int:
    # independent of the package's partition generator
    table = [1] + [0] * m
    for part in range(1, m + 1):
        for total in range(part, m + 1):
            table[total] += table[total - part]
    return table[m]


def abelian_group_count(m: int) -> int:
    # multiplicative over prime powers: one abelian group per partition
    # of each prime exponent
    count = 1
    rest = m
    for p in range(2, m + 1):
        if p * p > rest:
            break
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        count *= count_partitions(e)
    if rest > 1:
        count *= count_partitions(1)
    return count


def test_module_doctests():
    result = doctest.testmod(relfrob.groups)
    assert result.failed == 0
    assert result.attempted > 0


def test_abelian_spec_validation():
    with pytest.raises(ValueError):
        AbelianGroupSpec((1,))
    with pytest.raises(ValueError):
        AbelianGroupSpec((3, 4))
    assert AbelianGroupSpec(()).order == 1
    assert AbelianGroupSpec(()).label == "Z1"
    assert AbelianGroupSpec((2, 4)).label == "Z2xZ4"
    assert AbelianGroupSpec((2, 4)).order == 8


def test_abelian_table_is_componentwise_sum():
    t = abelian_table((2, 3))
    # element a*3+b acts like (a mod 2, b mod 3)
    for a, b, c, d in itertools.product(range(2), range(3), range(2), range(3)):
        assert t[a * 3 + b][c * 3 + d] == ((a + c) % 2) * 3 + (b + d) % 3


def test_group_spec_validates_table():
    with pytest.raises(ValueError, match="unit"):
        GroupSpec(((1, 1), (1, 1)))
    with pytest.raises(ValueError, match="inverse"):
        GroupSpec(((0, 1), (1, 1)))
    with pytest.raises(ValueError, match="associative"):
        # unit and inverses fine, but (2*2)*1 != 2*(2*1)
        GroupSpec(((0, 1, 2), (1, 0, 2), (2, 2, 0)))
    with pytest.raises(ValueError, match="length"):
        GroupSpec(((0,), (1, 0)))


def test_builtin_tables_are_nonabelian_groups():
    assert set(BUILTIN_NONABELIAN) == {"S3", "D4", "Q8"}
    for name, g in BUILTIN_NONABELIAN.items():
        assert g.name == name and g.label == name
        assert not g.is_abelian
        assert g.order == (6 if name == "S3" else 8)


def test_builtin_element_orders():
    assert sorted(element_orders(BUILTIN_NONABELIAN["S3"].table)) == [1, 2, 2, 2, 3, 3]
    assert sorted(element_orders(BUILTIN_NONABELIAN["D4"].table)) == [1, 2, 2, 2, 2, 2, 4, 4]
    assert sorted(element_orders(BUILTIN_NONABELIAN["Q8"].table)) == [1, 2, 4, 4, 4, 4, 4, 4]


def test_nonabelian_structures_fail_only_commutativity():
    for g in BUILTIN_NONABELIAN.values():
        rep = verify_structure(build_group_structure(g))
        assert rep.is_special_frobenius
        assert not rep.commutativity.ok
        assert not rep.is_classical


@given(st.lists(st.sampled_from([2, 2, 2, 3, 4, 5, 6]), max_size=3).filter(
    lambda fs: math.prod(fs) <= 12))
def test_abelian_structures_are_classical(factors):
    spec = normalize_invariant_factors(factors)
    rep = verify_structure(build_group_structure(spec))
    assert rep.is_classical


def test_enumerate_abelian_groups_known_orders():
    assert [g.invariant_factors for g in enumerate_abelian_groups(1)] == [()]
    assert [g.invariant_factors for g in enumerate_abelian_groups(8)] == [
        (2, 2, 2), (2, 4), (8,)]
    assert [g.invariant_factors for g in enumerate_abelian_groups(12)] == [
        (2, 6), (12,)]
    assert len(enumerate_abelian_groups(16)) == 5
    with pytest.raises(ValueError):
        enumerate_abelian_groups(0)


@pytest.mark.parametrize("m", range(1, 25))
def test_enumerate_abelian_groups_count_formula(m):
    assert len(enumerate_abelian_groups(m)) == abelian_group_count(m)


@pytest.mark.parametrize("m", range(1, 17))
def test_enumerated_groups_pairwise_distinct(m):
    # element-order multisets separate abelian groups of equal order
    seen = set()
    for g in enumerate_abelian_groups(m):
        orders = tuple(sorted(element_orders(g.table())))
        assert orders not in seen
        seen.add(orders)


def test_normalize_invariant_factors():
    assert normalize_invariant_factors([4, 6]).invariant_factors == (2, 12)
    assert normalize_invariant_factors([2, 3]).invariant_factors == (6,)
    assert normalize_invariant_factors([1, 1, 5]).invariant_factors == (5,)
    assert normalize_invariant_factors([]).invariant_factors == ()
    with pytest.raises(ValueError):
        normalize_invariant_factors([0])


def test_normalization_preserves_isomorphism_type():
    spec = normalize_invariant_factors([4, 6])
    assert are_isomorphic(abelian_table((4, 6)), spec.table())
    assert not are_isomorphic(abelian_table((4, 6)), abelian_table((24,)))


@settings(deadline=None)
@given(st.lists(st.integers(1, 6), min_size=0, max_size=3).filter(
    lambda fs: math.prod(fs) <= 30))
def test_invariant_factors_of_table_inverts_construction(orders):
    spec = normalize_invariant_factors(orders)
    assert invariant_factors_of_table(spec.table()) == spec.invariant_factors
    # also from the unnormalized direct-product table
    assert invariant_factors_of_table(
        abelian_table(tuple(orders))) == spec.invariant_factors


def test_invariant_factors_rejects_nonabelian():
    with pytest.raises(ValueError, match="abelian"):
        invariant_factors_of_table(BUILTIN_NONABELIAN["S3"].table)


def test_are_isomorphic_under_relabeling():
    t = abelian_table((2, 2))
    perm = (2, 0, 3, 1)
    inv = [perm.index(i) for i in range(4)]
    relabeled = tuple(tuple(perm[t[inv[a]][inv[b]]] for b in range(4))
                      for a in range(4))
    assert are_isomorphic(t, relabeled)


def test_are_isomorphic_negative_cases():
    assert not are_isomorphic(abelian_table((4,)), abelian_table((2, 2)))
    assert not are_isomorphic(BUILTIN_NONABELIAN["S3"].table, abelian_table((6,)))
    assert not are_isomorphic(BUILTIN_NONABELIAN["D4"].table,
                              BUILTIN_NONABELIAN["Q8"].table)
    assert not are_isomorphic(BUILTIN_NONABELIAN["D4"].table, abelian_table((2, 4)))


def dihedral_table(k: int):
    # element f*k + r: rotation r with optional flip f
    n = 2 * k
    table = [[0] * n for _ in range(n)]
    for f1, r1, f2, r2 in itertools.product(range(2), range(k), range(2), range(k)):
        r = (r2 + (r1 if f2 == 0 else -r1)) % k
        table[f1 * k + r1][f2 * k + r2] = ((f1 ^ f2) * k + r)
    return tuple(tuple(row) for row in table)


def test_identify_group_builtin_and_fallback():
    relabel = (3, 4, 5, 0, 1, 2)
    s3 = BUILTIN_NONABELIAN["S3"].table
    inv = [relabel.index(i) for i in range(6)]
    shuffled = tuple(tuple(relabel[s3[inv[a]][inv[b]]] for b in range(6))
                     for a in range(6))
    assert identify_group(shuffled).name == "S3"
    d5 = identify_group(dihedral_table(5))
    assert d5.name is None
    assert d5.label == "unidentified group of order 10"


def test_dihedral_table_matches_builtin_d4():
    assert are_isomorphic(dihedral_table(4), BUILTIN_NONABELIAN["D4"].table)


def test_structure_spec_canonical_order_and_label():
    s = parse_structure_spec("3;2;S3;1")
    assert s.label == "Z1 + Z2 + Z3 + S3"
    assert s.n == 12
    assert not s.is_abelian
    assert parse_structure_spec("2;3").label == "Z2 + Z3"
    assert parse_structure_spec("2,2").label == "Z2xZ2"
    assert parse_structure_spec("4,6").label == "Z2xZ12"
    assert parse_structure_spec("s3").label == "S3"
    assert parse_structure_spec("1").is_abelian


def test_structure_spec_equality_ignores_block_order():
    assert parse_structure_spec("2;3") == parse_structure_spec("3;2")
    assert StructureSpec((AbelianGroupSpec((2,)), AbelianGroupSpec((3,)))) == \
        parse_structure_spec("3;2")


def test_parse_structure_spec_errors():
    with pytest.raises(ValueError, match="'frobnitz'"):
        parse_structure_spec("frobnitz")
    with pytest.raises(ValueError, match="empty block"):
        parse_structure_spec("2;;3")
    with pytest.raises(ValueError, match="at least 1"):
        parse_structure_spec("0")
    with pytest.raises(ValueError, match="'2x3'"):
        parse_structure_spec("2x3")


def test_build_group_structure_lookup():
    z6 = build_group_structure(AbelianGroupSpec((6,)))
    assert z6.n == 6 and z6.bot == frozenset({0})
    assert z6.product(4, 5) == frozenset({3})


def test_build_biproduct_layout():
    c = build_biproduct(parse_structure_spec("2;3"))
    assert c.n == 5
    assert c.bot == frozenset({0, 2})
    # blocks are contiguous: {0,1} then {2,3,4}
    assert c.product(1, 1) == frozenset({0})
    assert c.product(3, 4) == frozenset({2})
    assert c.product(1, 3) == frozenset()


def test_build_biproduct_empty_spec():
    c = build_biproduct(StructureSpec(()))
    assert c.n == 0 and verify_structure(c).is_classical
