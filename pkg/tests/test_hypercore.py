from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlep.hypercore import (
    Carrier,
    CarrierMismatchError,
    EmptyOperandError,
    HyperError,
    HyperTable,
    NAryHyperOp,
    SubsetMask,
    conjugation_map,
    lift_to_powerset,
    merge_carriers,
    nary_subset_extension,
    permute_mask,
    restrict_to_singletons,
    subset_product,
)

import oracles

N = 12
masks = st.integers(min_value=1, max_value=(1 << N) - 1).map(lambda b: SubsetMask(b, N))


def _oracle(table):
    return {
        (x, y): frozenset(table.carrier.names(table.cell(x, y)))
        for x, y in product(table.carrier, repeat=2)
    }


class TestCarrier:
    def test_duplicate_names_rejected(self):
        with pytest.raises(HyperError):
            Carrier(["a", "b", "a"])

    def test_empty_rejected(self):
        with pytest.raises(HyperError):
            Carrier([])

    def test_mask_and_names(self):
        c = Carrier("abc")
        m = c.mask(["c", "a"])
        assert m.bits == 0b101
        assert c.names(m) == ["a", "c"]
        with pytest.raises(HyperError, match="unknown element"):
            c.mask(["z"])

    def test_full_and_singleton(self):
        c = Carrier("abcd")
        assert len(c.full()) == 4
        assert list(c.singleton(2)) == [2]
        with pytest.raises(HyperError):
            c.singleton(4)


class TestSubsetMask:
    def test_set_algebra(self):
        a = SubsetMask(0b0110, 4)
        b = SubsetMask(0b0011, 4)
        assert (a | b).bits == 0b0111
        assert (a & b).bits == 0b0010
        assert (a - b).bits == 0b0100
        assert SubsetMask(0b0010, 4) < a
        assert not a <= b
        assert 1 in a and 0 not in a
        assert len(a) == 2 and list(a) == [1, 2]

    def test_immutable(self):
        m = SubsetMask(1, 3)
        with pytest.raises(AttributeError):
            m.bits = 2

    def test_bits_outside_carrier(self):
        with pytest.raises(HyperError):
            SubsetMask(0b1000, 3)

    def test_mixed_carrier_sizes(self):
        with pytest.raises(CarrierMismatchError):
            SubsetMask(1, 3) | SubsetMask(1, 4)

    def test_hashable_and_equal(self):
        assert {SubsetMask(5, 4), SubsetMask(5, 4)} == {SubsetMask(5, 4)}
        assert SubsetMask(5, 4) != SubsetMask(5, 5)

    @given(masks, masks)
    def test_matches_python_sets(self, a, b):
        sa, sb = set(a), set(b)
        assert set(a | b) == sa | sb
        assert set(a & b) == sa & sb
        assert set(a - b) == sa - sb
        assert (a <= b) == (sa <= sb)


class TestHyperTable:
    def test_empty_cell_rejected(self):
        c = Carrier("ab")
        with pytest.raises(HyperError, match="empty"):
            HyperTable(c, [[1, 2], [0, 3]])

    def test_wrong_shape(self):
        with pytest.raises(HyperError):
            HyperTable(Carrier("ab"), [[1, 2]])

    def test_cell_by_name(self, table):
        assert table.cell("nu_e", "nu_e") == table.carrier.mask(["nu_e"])

    def test_with_cell_is_a_copy(self, table):
        c = table.carrier
        other = table.with_cell(0, 0, c.full())
        assert other.cells[0][0] == c.full()
        assert table.cells[0][0] == c.mask(["e"])
        assert other != table


class TestSubsetProduct:
    def test_empty_operand(self, table):
        with pytest.raises(EmptyOperandError):
            subset_product(table, SubsetMask(0, N), SubsetMask(1, N))

    def test_carrier_mismatch(self, table):
        with pytest.raises(CarrierMismatchError):
            subset_product(table, SubsetMask(1, 3), SubsetMask(1, N))

    @given(masks, masks)
    @settings(max_examples=200)
    def test_agrees_with_set_oracle(self, table, a, b):
        c = table.carrier
        got = set(c.names(subset_product(table, a, b)))
        assert got == oracles.set_product(_oracle(table), c.names(a), c.names(b))

    @given(masks, masks, masks)
    def test_monotone(self, table, a, b, extra):
        assert subset_product(table, a, b) <= subset_product(table, a | extra, b)
        assert subset_product(table, a, b) <= subset_product(table, a, b | extra)

    @given(masks, masks, masks)
    def test_distributes_over_union(self, table, a, b, d):
        assert subset_product(table, a, b | d) == subset_product(table, a, b) | subset_product(table, a, d)


class TestPowersetRoundTrip:
    def test_restrict_lift(self, table):
        assert restrict_to_singletons(table.carrier, lift_to_powerset(table)) == table

    def test_lift_is_subset_product(self, table):
        lifted = lift_to_powerset(table)
        c = table.carrier
        a, b = c.mask(["e", "mu"]), c.mask(["nu_tau"])
        assert lifted(a, b) == subset_product(table, a, b)


class TestConjugation:
    def test_fixed_points_and_pairs(self):
        c = Carrier("abcd")
        assert conjugation_map(c, [(0, 1), (3, 3)]) == (1, 0, 2, 3)

    def test_not_involution(self):
        with pytest.raises(HyperError, match="involution"):
            conjugation_map(Carrier("abc"), [(0, 1), (0, 2)])

    def test_lepton_pairing(self, ps):
        assert ps.conjugation == (2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9)

    @given(masks)
    def test_permute_is_involution(self, ps, m):
        perm = ps.conjugation
        assert permute_mask(perm, permute_mask(perm, m)) == m
        assert len(permute_mask(perm, m)) == len(m)


class TestNAry:
    def test_merge_by_name(self):
        merged = merge_carriers([Carrier("ab"), Carrier("bc")])
        assert merged.elements == ("a", "b", "c")

    def test_must_be_total(self):
        c = Carrier("ab")
        with pytest.raises(HyperError, match="undefined"):
            NAryHyperOp([c, c], {(0, 0): c.full()})

    def test_mixed_carriers(self):
        a, b = Carrier(["x"]), Carrier(["y", "z"])
        u = merge_carriers([a, b])
        op = NAryHyperOp([a, b], {(0, 0): u.mask(["x", "y"]), (0, 1): u.mask(["z"])})
        assert op.arity == 2
        assert nary_subset_extension(op, [a.full(), b.full()]) == u.full()

    def test_arity_mismatch(self, table):
        op = NAryHyperOp.from_table(table)
        with pytest.raises(HyperError, match="arity"):
            nary_subset_extension(op, [table.carrier.full()])

    def test_empty_operand(self, table):
        op = NAryHyperOp.from_table(table)
        with pytest.raises(EmptyOperandError):
            nary_subset_extension(op, [SubsetMask(0, N), table.carrier.full()])

    @given(masks, masks)
    def test_binary_agrees_with_subset_product(self, table, a, b):
        op = NAryHyperOp.from_table(table)
        assert nary_subset_extension(op, [a, b]) == subset_product(table, a, b)
