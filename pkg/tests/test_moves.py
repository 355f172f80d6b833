from __future__ import annotations

import pytest

from onefaced import exceptions
from onefaced.moves import VertexType
from onefaced.moves import barred_surgery
from onefaced.moves import block_frame
from onefaced.moves import census_counts
from onefaced.moves import connected_sum
from onefaced.moves import connected_sum_map
from onefaced.moves import curve_decomposition
from onefaced.moves import find_simplification
from onefaced.moves import find_torus_blocks
from onefaced.moves import flip_marked_side
from onefaced.moves import intertwined_pairs
from onefaced.moves import is_intertwined
from onefaced.moves import next_on_curve
from onefaced.moves import one_simple_count
from onefaced.moves import order_index
from onefaced.moves import simplification_gain
from onefaced.moves import simplify_cascade
from onefaced.moves import split_torus_summand
from onefaced.moves import sum_with_torus
from onefaced.moves import surgery
from onefaced.moves import surgery_images
from onefaced.moves import vertex_census
from onefaced.pattern import CanonicalClass
from onefaced.pattern import GluingPattern
from onefaced.pattern import TORUS
from onefaced.pattern import canonical_word

SURGERED_DOUBLE_TORUS = (1, 2, -1, 3, 4, -3, 5, -4, -5, 6, -2, -6)


def test_order_index_wraps() -> None:
    assert order_index(TORUS, 3, 1) == 2
    assert order_index(TORUS, 0, 3) == 3


def test_torus_has_no_intertwined_pairs() -> None:
    assert not is_intertwined(TORUS, 0, 1)
    assert list(intertwined_pairs(TORUS)) == []
    with pytest.raises(exceptions.NotIntertwined):
        surgery(TORUS, 0, 1)


def test_same_edge_is_rejected(double_torus: GluingPattern) -> None:
    with pytest.raises(exceptions.SameEdge):
        is_intertwined(double_torus, 0, 2)
    with pytest.raises(exceptions.SameEdge):
        is_intertwined(double_torus, 4, 4)


def test_intertwined_pairs_are_ordered(double_torus: GluingPattern) -> None:
    pairs = list(intertwined_pairs(double_torus))
    assert (0, 3) in pairs
    assert pairs == sorted(pairs)
    assert all(i < j for i, j in pairs)


def test_surgery_rewrites_the_word(double_torus: GluingPattern) -> None:
    result, image_i, image_j = surgery_images(double_torus, 0, 3)
    assert result.word == SURGERED_DOUBLE_TORUS
    assert result.genus == 2
    assert (image_i, image_j) == (0, 9)


def test_surgery_is_an_involution(double_torus: GluingPattern) -> None:
    result, image_i, image_j = surgery_images(double_torus, 0, 3)
    assert surgery(result, image_i, image_j) == double_torus


def test_barred_surgery_agrees_with_surgery(double_torus: GluingPattern) -> None:
    assert barred_surgery(double_torus, 0, 3) == double_torus
    assert canonical_word(barred_surgery(double_torus, 0, 3)) == canonical_word(GluingPattern(SURGERED_DOUBLE_TORUS))


def test_barred_surgery_over_the_genus2_atlas(genus2_classes: list[CanonicalClass]) -> None:
    for canonical_class in genus2_classes:
        pattern = canonical_class.pattern()
        for i, j in intertwined_pairs(pattern):
            assert canonical_word(barred_surgery(pattern, i, j)) == canonical_word(surgery(pattern, i, j))


def test_surgery_preserves_genus_over_the_genus2_atlas(genus2_classes: list[CanonicalClass]) -> None:
    for canonical_class in genus2_classes:
        pattern = canonical_class.pattern()
        s_value = one_simple_count(pattern)
        for i, j in intertwined_pairs(pattern):
            result = surgery(pattern, i, j)
            assert result.genus == 2
            assert abs(one_simple_count(result) - s_value) <= 2


def test_next_on_curve(double_torus: GluingPattern) -> None:
    assert next_on_curve(double_torus, 1) == 1
    assert next_on_curve(double_torus, 0) == 5
    with pytest.raises(exceptions.PositionOutOfRange):
        next_on_curve(double_torus, -1)


def test_torus_curves() -> None:
    decomposition = curve_decomposition(TORUS)
    assert decomposition.count == 2
    assert decomposition.one_simple == (True, True)
    assert decomposition.self_intersections == (0, 0)
    assert one_simple_count(TORUS) == 2


def test_double_torus_curves(double_torus: GluingPattern) -> None:
    decomposition = curve_decomposition(double_torus)
    assert decomposition.count == 3
    assert decomposition.one_simple_count == 2 == one_simple_count(double_torus)
    assert sorted(decomposition.lengths) == [1, 1, 4]
    assert sorted(decomposition.self_intersections) == [0, 0, 1]


def test_curve_lengths_cover_every_edge(triple_torus: GluingPattern) -> None:
    decomposition = curve_decomposition(triple_torus)
    assert sum(decomposition.lengths) == triple_torus.edge_count
    assert decomposition.count == 4
    assert one_simple_count(triple_torus) == 3


def test_torus_census() -> None:
    census = vertex_census(TORUS, 0)
    assert len(census) == 1
    assert census[0].vtype == VertexType.TYPE2
    assert census[0].trisections == 2


def test_double_torus_census(double_torus: GluingPattern) -> None:
    census = vertex_census(double_torus, 0)
    assert [vertex.vtype for vertex in census] == [VertexType.TYPE1, VertexType.TYPE2, VertexType.TYPE2]
    assert [vertex.cycle for vertex in census] == [(0, 3, 6, 9), (1, 5, 4, 2), (7, 11, 10, 8)]
    assert sum(vertex.trisections for vertex in census) == 4


def test_trisections_count_2g_for_every_root(triple_torus: GluingPattern) -> None:
    for root in range(triple_torus.size):
        assert sum(vertex.trisections for vertex in vertex_census(triple_torus, root)) == 6


def test_non_simplifiable_census_holds_for_every_root(genus2_classes: list[CanonicalClass]) -> None:
    for canonical_class in genus2_classes:
        pattern, _ = simplify_cascade(canonical_class.pattern())
        assert find_simplification(pattern) is None
        for root in range(pattern.size):
            counts = census_counts(vertex_census(pattern, root))
            assert counts == {VertexType.TYPE1: 1, VertexType.TYPE2: 2, VertexType.TYPE3: 0}


def test_double_torus_is_not_simplifiable(double_torus: GluingPattern) -> None:
    assert find_simplification(double_torus) is None
    result, trace = simplify_cascade(double_torus)
    assert result == double_torus
    assert len(trace) == 0


def test_every_simplification_follows_the_gain_law(genus2_classes: list[CanonicalClass]) -> None:
    for canonical_class in genus2_classes:
        _, trace = simplify_cascade(canonical_class.pattern())
        for step in trace.steps:
            gain = simplification_gain(GluingPattern(step.before), step.args[0])
            assert step.s_after == step.s_before + gain
            assert step.op == 'simplify'


def test_simplification_on_a_two_edge_curve_adds_two_curves() -> None:
    pattern = GluingPattern((1, 2, 3, -1, 4, -2, 5, 6, -4, -5, -3, -6))
    assert (next_on_curve(pattern, 0), next_on_curve(pattern, 6)) == (6, 0)
    assert one_simple_count(pattern) == 0
    assert find_simplification(pattern) == 0
    assert simplification_gain(pattern, 0) == 2
    assert one_simple_count(surgery(pattern, 0, 6)) == 2
    _, trace = simplify_cascade(pattern)
    assert (trace.steps[0].args, trace.steps[0].s_before, trace.steps[0].s_after) == ((0, 6), 0, 2)


def test_sum_of_two_tori() -> None:
    result, first_map, second_map = connected_sum_map(TORUS, 0, TORUS, 0)
    assert result.word == (1, 2, -1, 3, -2, -3, 4, 5, -4, 6, -5, -6)
    assert first_map == {0: 0, 1: 1, 2: 2, 3: 4}
    assert second_map == {0: 6, 1: 7, 2: 8, 3: 10}


def test_sum_adds_genera(double_torus: GluingPattern, triple_torus: GluingPattern) -> None:
    assert sum_with_torus(double_torus, 0) == triple_torus
    for i in range(double_torus.size):
        assert connected_sum(double_torus, i, TORUS, 0).genus == 3
    with pytest.raises(exceptions.PositionOutOfRange):
        connected_sum(TORUS, 4, TORUS, 0)


def test_find_torus_blocks(double_torus: GluingPattern) -> None:
    assert find_torus_blocks(double_torus) == [0, 6]
    assert find_torus_blocks(TORUS) == []


def test_block_frame(double_torus: GluingPattern) -> None:
    assert block_frame(double_torus, 0) == (6, 8, 9, 11)
    with pytest.raises(exceptions.NotABlock):
        block_frame(double_torus, 1)


def test_split_inverts_sum(double_torus: GluingPattern, triple_torus: GluingPattern) -> None:
    assert split_torus_summand(double_torus, 0) == (TORUS, 0)
    for block in find_torus_blocks(triple_torus):
        summand, marked = split_torus_summand(triple_torus, block)
        assert summand.genus == 2
        assert canonical_word(sum_with_torus(summand, marked)) == canonical_word(triple_torus)


def test_split_round_trip_over_marked_edges(genus2_classes: list[CanonicalClass]) -> None:
    for canonical_class in genus2_classes:
        pattern = canonical_class.pattern()
        for position in range(pattern.size):
            summed = sum_with_torus(pattern, position)
            blocks = find_torus_blocks(summed)
            assert blocks
            summand, marked = split_torus_summand(summed, blocks[-1])
            assert summand.genus == 2


def test_flip_marked_side(double_torus: GluingPattern) -> None:
    flipped = flip_marked_side(double_torus, 0)
    assert flipped.genus == 2
    assert canonical_word(flipped) == canonical_word(sum_with_torus(TORUS, 2))



def test_flip_marked_side_over_the_genus2_atlas(genus2_classes: list[CanonicalClass]) -> None:
    flipped_blocks = 0
    for canonical_class in genus2_classes:
        pattern = canonical_class.pattern()
        for block in find_torus_blocks(pattern):
            summand, marked = split_torus_summand(pattern, block)
            expected = sum_with_torus(summand, summand.alpha[marked])
            assert canonical_word(flip_marked_side(pattern, block)) == canonical_word(expected)
            flipped_blocks += 1
    assert flipped_blocks
