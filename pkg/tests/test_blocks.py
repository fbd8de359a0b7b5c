import pytest

from spinbars.barcomb import BarPartition, bar_core_quotient
from spinbars.blocks import (
    SIDE_G,
    SIDE_H,
    BlockId,
    LocalLabel,
    basic_set,
    block_of,
    block_partition,
    brauer_count,
    local_basic_labels,
    quotient_tuples,
)
from spinbars.spinchar import ALT, MINUS, PLUS, SELF, SYM, SpinLabel, epsilon_twist, labels


class TestBlockOf:
    def test_defect_zero(self):
        b = block_of(SpinLabel(SYM, BarPartition((5, 2)), PLUS), 3)
        assert b.core.parts == (5, 2) and b.weight == 0 and b.is_defect_zero()

    def test_seven(self):
        b = block_of(SpinLabel(SYM, BarPartition((7,)), SELF), 3)
        assert b.core.parts == (1,) and b.weight == 2 and b.sign == 1

    def test_21(self):
        b = block_of(SpinLabel(SYM, BarPartition((2, 1)), PLUS), 3)
        assert b.core.parts == () and b.weight == 1 and b.sign == 1

    def test_invalid_p(self):
        with pytest.raises(ValueError):
            BlockId(SYM, 4, BarPartition(()), 1)


class TestBlockPartition:
    def test_n7_p3(self):
        found = dict(block_partition(SYM, 7, 3))
        big = BlockId(SYM, 3, BarPartition((1,)), 2)
        assert {(x.lam.parts, x.tag) for x in found[big]} == {
            ((7,), SELF),
            ((6, 1), PLUS),
            ((6, 1), MINUS),
            ((4, 3), PLUS),
            ((4, 3), MINUS),
            ((4, 2, 1), SELF),
        }
        single = BlockId(SYM, 3, BarPartition((5, 2)), 0)
        assert len(found[single]) == 2  # the associate pair shares the core

    def test_n3_p3(self):
        found = block_partition(SYM, 3, 3)
        assert len(found) == 1
        b, members = found[0]
        assert b.core.parts == () and b.weight == 1
        assert len(members) == 3

    def test_small_n_all_defect_zero(self):
        for p in (5, 7):
            for n in range(1, p):
                for b, _ in block_partition(SYM, n, p):
                    assert b.is_defect_zero()

    @pytest.mark.parametrize("group", [SYM, ALT])
    def test_is_partition_and_twist_stable(self, group):
        for p in (3, 5):
            for n in range(1, 11):
                all_labels = list(labels(group, n))
                seen = []
                for b, members in block_partition(group, n, p):
                    seen.extend(members)
                    assert {epsilon_twist(x) for x in members} == set(members)
                assert sorted(map(repr, seen)) == sorted(map(repr, all_labels))


class TestBasicSet:
    def test_core1_w2(self):
        b = BlockId(SYM, 3, BarPartition((1,)), 2)
        assert {x.lam.parts for x in basic_set(b)} == {(7,), (4, 2, 1)}

    def test_core_empty_w1(self):
        b = BlockId(SYM, 3, BarPartition(()), 1)
        assert [(x.lam.parts, x.tag) for x in basic_set(b)] == [
            ((2, 1), PLUS),
            ((2, 1), MINUS),
        ]

    def test_defect_zero_is_whole_block(self):
        for group in (SYM, ALT):
            for p in (3, 5):
                for n in range(1, 10):
                    for b, members in block_partition(group, n, p):
                        if b.is_defect_zero():
                            assert basic_set(b) == members

    def test_members_have_empty_strict_component(self):
        for p in (3, 5):
            for n in range(1, 12):
                for b, _ in block_partition(SYM, n, p):
                    for x in basic_set(b):
                        _, q = bar_core_quotient(x.lam, p)
                        assert q.lambda0.n == 0

    def test_all_or_none_self_associate(self):
        for group in (SYM, ALT):
            for p in (3, 5, 7):
                for n in range(1, 12):
                    for b, _ in block_partition(group, n, p):
                        tags = {x.tag == SELF for x in basic_set(b)}
                        assert len(tags) == 1


class TestLocalLabels:
    def test_weight2_g_side(self):
        got = local_basic_labels(2, 3, SIDE_G)
        assert [(tuple(c.parts for c in l.quotient.components), l.tag) for l in got] == [
            (((2,),), SELF),
            (((1, 1),), SELF),
        ]

    def test_weight1_g_side(self):
        got = local_basic_labels(1, 3, SIDE_G)
        assert [(l.quotient.components[0].parts, l.tag) for l in got] == [
            ((1,), PLUS),
            ((1,), MINUS),
        ]

    def test_weight3_p5_count(self):
        assert len(quotient_tuples(3, 2)) == 10
        got = local_basic_labels(3, 5, SIDE_G)
        assert len(got) == 20  # odd weight on the G side doubles every tuple

    def test_h_side_duality(self):
        for w in range(5):
            g = local_basic_labels(w, 3, SIDE_G)
            h = local_basic_labels(w, 3, SIDE_H)
            if w % 2:
                assert all(l.tag != SELF for l in g) and all(l.tag == SELF for l in h)
            else:
                assert all(l.tag == SELF for l in g) and all(l.tag != SELF for l in h)

    def test_tag_consistency_enforced(self):
        from spinbars.barcomb import BarQuotient, Partition

        q = BarQuotient(BarPartition(()), (Partition((1,)),), 3)  # sign -1
        with pytest.raises(ValueError):
            LocalLabel(SIDE_G, q, SELF)
        LocalLabel(SIDE_G, q, PLUS)
        LocalLabel(SIDE_H, q, SELF)


class TestBrauerCount:
    def test_examples(self):
        assert brauer_count(BlockId(SYM, 3, BarPartition(()), 1)) == 2
        assert brauer_count(BlockId(SYM, 3, BarPartition((1,)), 2)) == 2
        # a defect-zero pair shares its block group and contributes two
        assert brauer_count(BlockId(SYM, 3, BarPartition((5, 2)), 0)) == 2
        assert brauer_count(BlockId(SYM, 3, BarPartition((1,)), 0)) == 1

    def test_invalid_core(self):
        with pytest.raises(ValueError):
            BlockId(SYM, 3, BarPartition((4, 2, 1)), 0)

    @pytest.mark.parametrize("group", [SYM, ALT])
    def test_matches_basic_set_size(self, group):
        for p in (3, 5, 7):
            for n in range(1, 12):
                for b, _ in block_partition(group, n, p):
                    assert brauer_count(b) == len(basic_set(b)), b
