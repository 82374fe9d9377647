"""Tests for the canonical set engine.

Derived expectations are computed by independent oracles (itertools
enumeration, direct definition scans) rather than by the functions under
test.
"""

import itertools

import pytest
from hypothesis import given, strategies as st

from mklab.errors import (
    EmptyInput,
    EmptyIntersection,
    NonCanonical,
    NotAFunction,
    NotAPair,
    NotARelation,
    OutsideDomain,
    ParseError,
    RankTooLarge,
)
from mklab.hfs import (
    EMPTY,
    HfSet,
    as_int,
    big_intersection,
    big_union,
    canon,
    cartesian,
    decode_pair,
    difference,
    fn_domain,
    fn_range,
    fn_value,
    from_int,
    from_json,
    from_obj,
    fst,
    hfs,
    intersection,
    is_function,
    is_pair,
    iter_subsets,
    member,
    ordered_pair,
    power_set,
    rank_universe,
    regularity_witness,
    singleton,
    snd,
    subclass,
    to_json,
    to_obj,
    union,
    unordered_pair,
)


def nums(*ns):
    return [from_int(n) for n in ns]


# nested python lists, to feed canon
nested = st.recursive(st.just([]), lambda kids: st.lists(kids, max_size=4), max_leaves=12)


class TestCanon:
    def test_dedups_extensionally_equal_members(self):
        assert canon([[], []]) == from_int(1)

    def test_sorts_members(self):
        assert canon([[[]], []]) == from_int(2)

    def test_idempotent(self):
        x = canon([[[]], [], [[], [[]]]])
        assert canon(x) == x

    @given(nested)
    def test_extensional_equality_under_shuffle_and_duplication(self, raw):
        v = canon(raw)
        doubled = canon(list(raw) + list(raw))
        reversed_ = canon(list(reversed(raw)))
        assert doubled == v
        assert reversed_ == v
        assert hash(doubled) == hash(v)

    def test_rejects_strings(self):
        with pytest.raises(TypeError):
            canon("ab")

    def test_distinct_extensions_differ(self):
        assert canon([[]]) != canon([[[]]])


class TestOrderAndMembership:
    def test_membership_examples(self):
        zero, one, two = nums(0, 1, 2)
        assert member(zero, one)
        assert not member(zero, zero)
        assert member(one, two)

    def test_subclass_examples(self):
        one, two = nums(1, 2)
        assert subclass(one, two)
        assert subclass(two, two)
        assert not subclass(two, two, proper=True)
        for x in rank_universe(3):
            assert subclass(EMPTY, x)

    def test_canonical_order_is_total_on_v3(self):
        vals = sorted(rank_universe(3))
        for a, b in itertools.combinations(vals, 2):
            assert (a < b) != (b < a)
            assert not (a < b and b < a)
        # cardinality dominates
        assert from_int(1) < hfs(from_int(1))  # |1| = 1 vs |{1}| = 1 -> lexicographic
        assert EMPTY < from_int(1)


class TestAlgebra:
    def test_examples(self):
        one, two = nums(1, 2)
        assert union(one, hfs(one)) == two
        assert intersection(two, one) == one
        assert difference(two, one) == hfs(one)

    def test_laws_exhaustive_over_pow_v2(self):
        pool = list(power_set(rank_universe(2)))
        for x, y, z in itertools.product(pool, repeat=3):
            assert union(x, y) == union(y, x)
            assert intersection(x, y) == intersection(y, x)
            assert union(union(x, y), z) == union(x, union(y, z))
            assert intersection(intersection(x, y), z) == intersection(x, intersection(y, z))
            assert difference(x, x) == EMPTY
            assert intersection(x, union(y, z)) == union(intersection(x, y), intersection(x, z))


class TestPowerSet:
    def oracle_subsets(self, x):
        ms = list(x)
        out = set()
        for k in range(len(ms) + 1):
            for combo in itertools.combinations(ms, k):
                out.add(canon(combo))
        return out

    def test_examples(self):
        assert power_set(EMPTY) == hfs(EMPTY)
        assert power_set(from_int(1)) == from_int(2)
        assert len(power_set(from_int(2))) == 4

    def test_cardinality_and_extension_up_to_six(self):
        for n in range(7):
            x = from_int(n)
            p = power_set(x)
            assert len(p) == 2 ** n
            assert set(p) == self.oracle_subsets(x)
            assert big_union(p) == x

    def test_iter_subsets_matches_power_set(self):
        x = rank_universe(3)
        assert set(iter_subsets(x)) == set(power_set(x))
        assert EMPTY not in set(iter_subsets(x, nonempty=True))
        assert x not in set(iter_subsets(x, proper=True))


class TestPairs:
    def test_pairing_examples(self):
        zero, one, two = nums(0, 1, 2)
        assert singleton(zero) == one
        assert unordered_pair(zero, one) == two
        assert ordered_pair(zero, one) == hfs(one, two)

    def test_projections(self):
        zero, one, two = nums(0, 1, 2)
        assert fst(ordered_pair(zero, one)) == zero
        assert snd(ordered_pair(two, two)) == two
        with pytest.raises(NotAPair):
            fst(from_int(3))

    def test_projection_identities_over_v3(self):
        v3 = list(rank_universe(3))
        for x in v3:
            for y in v3:
                p = ordered_pair(x, y)
                assert fst(p) == x
                assert snd(p) == y

    def test_injectivity_over_v3_squared(self):
        v3 = list(rank_universe(3))
        codes = {}
        for x in v3:
            for y in v3:
                codes[ordered_pair(x, y)] = (x, y)
        assert len(codes) == len(v3) ** 2

    def test_non_pairs_rejected(self):
        assert not is_pair(from_int(3))
        assert not is_pair(EMPTY)
        assert not is_pair(hfs(from_int(1), hfs(from_int(2))))  # {{0},{2}} has no shared coord
        with pytest.raises(NotAPair):
            decode_pair(hfs(from_int(2), hfs(from_int(1), from_int(2))))  # {x,y} twice


class TestAggregates:
    def test_examples(self):
        assert big_union(from_int(2)) == from_int(1)
        assert big_union(power_set(from_int(2))) == from_int(2)
        assert big_intersection(hfs(from_int(1), from_int(2))) == from_int(1)

    def test_empty_intersection_is_an_error(self):
        with pytest.raises(EmptyIntersection):
            big_intersection(EMPTY)

    def test_amalgamation_over_v3_subsets(self):
        for x in iter_subsets(rank_universe(3)):
            assert big_union(power_set(x)) == x


class TestCartesian:
    def test_examples(self):
        one, two, three = nums(1, 2, 3)
        assert cartesian(one, one) == hfs(ordered_pair(EMPTY, EMPTY))
        assert cartesian(EMPTY, two) == EMPTY
        assert len(cartesian(two, three)) == 6

    def test_extension_oracle(self):
        x, y = from_int(2), rank_universe(2)
        expected = {ordered_pair(a, b) for a in x for b in y}
        assert set(cartesian(x, y)) == expected


class TestFunctions:
    def test_function_views(self):
        zero, one, two = nums(0, 1, 2)
        f = hfs(ordered_pair(zero, one), ordered_pair(one, one))
        assert is_function(f)
        assert fn_domain(f) == two
        assert fn_range(f) == hfs(one)
        assert fn_value(f, zero) == one

    def test_not_a_function(self):
        zero, one = nums(0, 1)
        g = hfs(ordered_pair(zero, zero), ordered_pair(zero, one))
        assert not is_function(g)
        with pytest.raises(NotAFunction):
            fn_value(g, zero)

    def test_outside_domain(self):
        zero, one, two = nums(0, 1, 2)
        f = hfs(ordered_pair(zero, one), ordered_pair(one, one))
        with pytest.raises(OutsideDomain):
            fn_value(f, two)

    def test_not_a_relation(self):
        junk = hfs(from_int(3))
        assert not is_function(junk)
        with pytest.raises(NotARelation):
            fn_domain(junk)
        with pytest.raises(NotARelation):
            fn_value(junk, EMPTY)


class TestRegularity:
    def test_examples(self):
        assert regularity_witness(from_int(2)) == EMPTY
        one = from_int(1)
        assert regularity_witness(hfs(one)) == one
        with pytest.raises(EmptyInput):
            regularity_witness(EMPTY)

    def test_witness_for_every_nonempty_subset_of_v3(self):
        for x in iter_subsets(rank_universe(3), nonempty=True):
            y = regularity_witness(x)
            assert y in x
            assert intersection(x, y) == EMPTY


class TestRankUniverse:
    def test_sizes(self):
        assert rank_universe(0) == EMPTY
        assert rank_universe(1) == from_int(1)
        assert rank_universe(2) == from_int(2)
        assert len(rank_universe(3)) == 4
        assert len(rank_universe(4)) == 16

    def test_cap(self):
        with pytest.raises(RankTooLarge):
            rank_universe(5)
        assert len(rank_universe(5, cap=5)) == 2 ** 16


class TestNumerals:
    def test_round_trip(self):
        for n in range(6):
            assert as_int(from_int(n)) == n

    def test_non_numerals(self):
        assert as_int(hfs(from_int(1))) is None
        assert as_int(hfs(EMPTY, hfs(from_int(1)))) is None


class TestJson:
    def test_encoding_example(self):
        assert to_json(from_int(2)) == "[[],[[]]]"
        assert from_json("[[],[[]]]") == from_int(2)

    def test_round_trip_over_v3(self):
        for x in iter_subsets(rank_universe(3)):
            assert from_json(to_json(x)) == x

    @given(nested)
    def test_round_trip_random(self, raw):
        v = canon(raw)
        assert from_json(to_json(v)) == v

    def test_default_mode_normalizes(self):
        assert from_json("[[],[]]") == from_int(1)

    def test_strict_mode_rejects_non_canonical(self):
        with pytest.raises(NonCanonical):
            from_json("[[],[]]", strict=True)
        with pytest.raises(NonCanonical):
            from_json("[[[]],[]]", strict=True)  # out of order
        assert from_json("[[],[[]]]", strict=True) == from_int(2)

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            from_json("[")
        with pytest.raises(ParseError):
            from_json('{"a": 1}')
        with pytest.raises(ParseError):
            from_obj([3])
