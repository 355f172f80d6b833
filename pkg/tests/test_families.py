from __future__ import annotations

import fractions

import pytest

from onefaced import exceptions
from onefaced import families
from onefaced.moves import one_simple_count
from onefaced.pattern import CanonicalClass
from onefaced.pattern import GluingPattern
from onefaced.pattern import TORUS
from onefaced.pattern import canonical_word


def test_small_necklaces(double_torus: GluingPattern) -> None:
    assert families.necklace(1) == TORUS
    assert families.necklace(2) == double_torus
    with pytest.raises(exceptions.GenusOutOfRange):
        families.necklace(0)


def test_necklace_signature(double_torus: GluingPattern) -> None:
    assert families.necklace_signature(double_torus) == families.NecklaceSignature(
        s=2, curve_count=3, max_self_intersections=1, non_simple_curves=1
    )
    assert families.has_necklace_signature(double_torus)
    assert families.is_necklace(double_torus)
    assert families.is_necklace(TORUS)


@pytest.mark.parametrize('genus', [3, 4])
def test_necklace_has_its_signature(genus: int) -> None:
    pattern = families.necklace(genus)
    assert pattern.genus == genus
    assert families.has_necklace_signature(pattern)
    assert families.is_necklace(pattern)
    assert one_simple_count(pattern) == genus


def test_necklace_is_unique_in_the_genus2_atlas(genus2_classes: list[CanonicalClass]) -> None:
    matching = [canonical_class for canonical_class in genus2_classes if families.is_necklace(canonical_class.pattern())]
    assert len(matching) == 1
    assert matching[0].pattern().genus == 2


@pytest.mark.slow
def test_necklace_is_unique_in_the_genus3_atlas(genus3_classes: list[CanonicalClass]) -> None:
    built = canonical_word(families.necklace(3))
    matching = [
        canonical_class.canonical_word for canonical_class in genus3_classes
        if families.is_necklace(canonical_class.pattern())
    ]
    assert matching == [built]
    sharing = [
        canonical_class.canonical_word for canonical_class in genus3_classes
        if families.has_necklace_signature(canonical_class.pattern())
    ]
    assert len(sharing) == 6
    assert built in sharing


def test_chains_of_genus2_are_the_necklace(double_torus: GluingPattern) -> None:
    assert families.chain_x(1) == double_torus
    assert families.chain_y(1) == double_torus


def test_genus4_chains() -> None:
    chain_x, chain_y = families.chain_x(2), families.chain_y(2)
    assert (chain_x.genus, chain_y.genus) == (4, 4)
    assert one_simple_count(chain_x) == 4
    assert one_simple_count(chain_y) == 3


def test_chain_x_keeps_the_necklace_curves() -> None:
    assert one_simple_count(families.glue_tori_keeping_curves(families.necklace(2), 1, 3)) == 3
    with pytest.raises(exceptions.SignatureMismatch):
        families.glue_tori_keeping_curves(TORUS, 1, 5)


def test_glue_tori_needs_enough_one_simple_curves() -> None:
    assert families.glue_tori(TORUS, 0) == TORUS
    with pytest.raises(exceptions.SignatureMismatch):
        families.glue_tori(TORUS, 3)


def test_s_lower_bound(double_torus: GluingPattern, triple_torus: GluingPattern) -> None:
    assert families.s_lower_bound(double_torus, double_torus) == 0
    assert families.s_lower_bound(TORUS, triple_torus) == fractions.Fraction(1, 2)
    assert families.s_lower_bound(families.chain_x(2), families.chain_y(2)) == fractions.Fraction(1, 2)
