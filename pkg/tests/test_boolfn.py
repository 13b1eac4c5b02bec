from fractions import Fraction
from itertools import permutations

import pytest

from booldeg import boolfn as bf
from booldeg.boolfn import (
    BooleanFunction,
    EmptyLevelError,
    PartialBooleanFunction,
    block_sensitivity_at,
    decision_tree_complexity,
    depends_on,
    family,
    influence,
    min_block_sensitivity,
    negate,
    parse_bf,
    parse_pbf,
    restrict_fn,
    total_influence,
)
from booldeg.degrees import deg


def test_negate_examples():
    and2 = family("AND", 2)
    assert negate(and2).table == (1, 1, 1, 0)
    const0 = BooleanFunction.make(2, [0, 0, 0, 0])
    assert negate(const0).table == (1, 1, 1, 1)
    assert negate(negate(and2)) == and2


def test_restrict_examples():
    and2 = family("AND", 2)
    assert restrict_fn(and2, {1: 1}).table == (0, 1)  # identity on x2
    assert restrict_fn(and2, {1: 0}).table == (0, 0)
    par3 = family("PARITY", 3)
    r = restrict_fn(par3, {2: 1})
    assert r == negate(family("PARITY", 2))


def test_depends_on():
    assert depends_on(family("AND", 2), 1)
    assert not depends_on(BooleanFunction.make(1, [1, 1]), 1)
    addr = family("ADDRESS", 2)  # 2 address bits, 6 variables
    for i in range(3, 7):
        assert depends_on(addr, i)


def test_block_sensitivity_examples():
    or3 = family("OR", 3)
    val, packing = block_sensitivity_at(or3, 0)
    assert val == 3
    assert packing.blocks == (0b001, 0b010, 0b100)
    eq4 = family("EQUATOR", 4)
    val, _ = block_sensitivity_at(eq4, 0b0011)
    assert val >= 4
    const = BooleanFunction.make(3, [0] * 8)
    assert block_sensitivity_at(const, 5)[0] == 0


def test_block_packing_is_disjoint_and_sensitive():
    maj = family("MAJ", 3)
    for x in range(8):
        val, packing = block_sensitivity_at(maj, x)
        assert len(packing.blocks) == val
        used = 0
        for b in packing.blocks:
            assert b & used == 0
            used |= b
            assert maj.table[x ^ b] != maj.table[x]


def test_min_block_sensitivity_examples():
    assert min_block_sensitivity(family("AND", 3), 1) == 3
    assert min_block_sensitivity(family("OR", 3), 1) == 1
    with pytest.raises(EmptyLevelError):
        min_block_sensitivity(BooleanFunction.make(2, [0, 0, 0, 0]), 1)


def test_influence_examples():
    par4 = family("PARITY", 4)
    assert total_influence(par4) == 4
    assert influence(family("AND", 2), 1) == Fraction(1, 2)
    assert total_influence(BooleanFunction.make(3, [1] * 8)) == 0


def test_influence_invariance():
    f = family("MAJ", 3)
    assert total_influence(f) == total_influence(negate(f))
    # permutation of variables: permute the truth table index bits
    for perm in permutations(range(3)):
        table = [0] * 8
        for x in range(8):
            y = sum(((x >> i) & 1) << perm[i] for i in range(3))
            table[y] = f.table[x]
        assert total_influence(BooleanFunction.make(3, table)) == total_influence(f)


def test_influence_bounded_by_degree_exhaustive_n3():
    for k in range(1 << 8):
        f = BooleanFunction.from_int(3, k)
        assert total_influence(f) <= deg(f)[0]


def test_decision_tree_complexity_examples():
    assert decision_tree_complexity(BooleanFunction.make(2, [1, 1, 1, 1])) == 0
    assert decision_tree_complexity(family("AND", 2)) == 2
    assert decision_tree_complexity(family("PARITY", 2)) == 2


def test_decision_tree_complexity_properties_exhaustive_n3():
    for k in range(1 << 8):
        f = BooleanFunction.from_int(3, k)
        d = decision_tree_complexity(f)
        assert d == decision_tree_complexity(negate(f))
        assert d <= 3
        assert (d == 0) == f.is_constant()


def test_block_sensitivity_singleton_case_exhaustive_n3():
    for k in range(1 << 8):
        f = BooleanFunction.from_int(3, k)
        for x in range(8):
            sensitive = [b for b in range(1, 8) if f.table[x ^ b] != f.table[x]]
            val, _ = block_sensitivity_at(f, x)
            assert val <= 3
            if all(b.bit_count() == 1 for b in sensitive):
                assert val == len(sensitive)


def test_family_maj3_table():
    assert family("MAJ", 3).table == (0, 0, 0, 1, 0, 1, 1, 1)


def test_family_andor():
    f = family("ANDOR", m=2)
    for x in range(16):
        expected = int((x & 0b0011 != 0) and (x & 0b1100 != 0))
        assert f.table[x] == expected


def test_family_counterexample_n2():
    pf = family("COUNTEREXAMPLE", 2)
    assert isinstance(pf, PartialBooleanFunction)
    assert pf.arity == 4
    for point, value in pf.values.items():
        xpart = point & 0b11
        if value == 0:
            assert xpart == 0
        else:
            assert point.bit_count() == 3 and xpart != 0
    # D0 is exactly the 4 points with x-part 00
    assert sum(1 for v in pf.values.values() if v == 0) == 4


def test_family_validation():
    with pytest.raises(ValueError):
        family("EQUATOR", 3)
    with pytest.raises(ValueError):
        family("MAJ", 4)
    with pytest.raises(ValueError):
        family("NOPE", 3)


def test_bf_round_trip():
    f = family("MAJ", 3)
    assert parse_bf(bf.format_bf(f)) == f


def test_pbf_round_trip():
    pf = family("COUNTEREXAMPLE", 2)
    assert parse_pbf(bf.format_pbf(pf)) == pf
