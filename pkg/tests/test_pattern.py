from __future__ import annotations

import pytest

from onefaced import converter
from onefaced import exceptions
from onefaced.pattern import GluingPattern
from onefaced.pattern import TORUS
from onefaced.pattern import canonical_word
from onefaced.pattern import canonicalize
from onefaced.pattern import genus
from onefaced.pattern import rotate
from onefaced.pattern import vertex_cycles


def test_parse_word_accepts_brackets_and_commas() -> None:
    assert converter.parse_word("[1, 2, -1, -2]") == TORUS
    assert converter.parse_word("  1,2 -1   -2 ") == TORUS


def test_parse_word_renormalizes_labels() -> None:
    assert converter.parse_word("7 -3 -7 3").word == (1, 2, -1, -2)


@pytest.mark.parametrize(
    ('text', 'error'),
    [
        ("", exceptions.EmptyWord),
        ("[]", exceptions.EmptyWord),
        ("1 x -1", exceptions.MisformattedArgument),
        ("1 0 -1", exceptions.MisformattedArgument),
        ("1 2 -1", exceptions.UnpairedLabel),
        ("1 1 -1 -1", exceptions.UnpairedLabel),
        ("1 -1 2 -2", exceptions.NotFourValent),
    ],
)
def test_parse_word_rejects_invalid_words(text: str, error: type) -> None:
    with pytest.raises(error):
        converter.parse_word(text)


def test_torus_structure() -> None:
    assert genus(TORUS) == 1
    assert TORUS.edge_count == 2
    assert vertex_cycles(TORUS) == [(0, 3, 2, 1)]


def test_double_torus_structure(double_torus: GluingPattern) -> None:
    assert double_torus.genus == 2
    assert double_torus.vertex_count == 3
    assert double_torus.alpha == (2, 4, 0, 5, 1, 3, 8, 10, 6, 11, 7, 9)
    assert vertex_cycles(double_torus) == [(0, 3, 6, 9), (1, 5, 4, 2), (7, 11, 10, 8)]


def test_euler_counts(triple_torus: GluingPattern) -> None:
    assert triple_torus.genus == 3
    assert triple_torus.vertex_count == 2 * 3 - 1
    assert triple_torus.edge_count == 4 * 3 - 2


def test_serialize_round_trips_normalized_words(double_torus: GluingPattern) -> None:
    assert converter.serialize(double_torus) == "1 2 -1 3 -2 -3 4 5 -4 6 -5 -6"
    assert converter.parse_word(converter.serialize(double_torus)) == double_torus


def test_check_position(double_torus: GluingPattern) -> None:
    assert double_torus.check_position(11) == 11
    with pytest.raises(exceptions.PositionOutOfRange):
        double_torus.check_position(12)


def test_canonical_word_is_rotation_invariant(double_torus: GluingPattern) -> None:
    expected = canonical_word(double_torus)
    for shift in range(double_torus.size):
        assert canonical_word(rotate(double_torus, shift)) == expected


def test_canonicalize_is_idempotent(triple_torus: GluingPattern) -> None:
    canonical_class = canonicalize(triple_torus)
    assert canonicalize(canonical_class.pattern()) == canonical_class


def test_canonicalize_torus() -> None:
    canonical_class = canonicalize(TORUS)
    assert canonical_class.canonical_word == (1, 2, -1, -2)
    assert (canonical_class.orbit_size, canonical_class.aut_size, canonical_class.genus) == (1, 4, 1)


def test_orbit_and_automorphisms_multiply_to_word_length(double_torus: GluingPattern) -> None:
    canonical_class = canonicalize(double_torus)
    assert canonical_class.orbit_size * canonical_class.aut_size == double_torus.size
    assert canonical_class.orbit_size <= 6  # Swapping the two tori is a symmetry


def test_reflection_never_enlarges_the_canonical_word(triple_torus: GluingPattern) -> None:
    assert canonical_word(triple_torus, reflect=True) <= canonical_word(triple_torus)
    reflected = canonicalize(triple_torus, reflect=True)
    assert reflected.orbit_size * reflected.aut_size == 2 * triple_torus.size


def test_class_json_round_trip(double_torus: GluingPattern) -> None:
    canonical_class = canonicalize(double_torus)
    assert converter.class_from_dict(converter.class_to_dict(canonical_class)) == canonical_class
