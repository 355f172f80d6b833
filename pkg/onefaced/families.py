import dataclasses
import fractions
import functools
import typing

from . import exceptions
from . import logger
from .moves import connected_sum_map
from .moves import curve_decomposition
from .moves import one_simple_count
from .moves import sum_with_torus
from .pattern import GluingPattern
from .pattern import TORUS
from .pattern import canonical_word


@dataclasses.dataclass(frozen=True)
class NecklaceSignature:
    s: int
    curve_count: int
    max_self_intersections: int
    non_simple_curves: int


def necklace_signature(pattern: GluingPattern) -> NecklaceSignature:
    decomposition = curve_decomposition(pattern)
    return NecklaceSignature(
        s=decomposition.one_simple_count,
        curve_count=decomposition.count,
        max_self_intersections=max(decomposition.self_intersections),
        non_simple_curves=decomposition.count - decomposition.one_simple_count,
    )


def has_necklace_signature(pattern: GluingPattern) -> bool:
    """
    g 1-simple curves and one curve with g-1 self-intersections (g >= 2).
    Several classes share it from genus 3 on, the necklace itself is the one `necklace` builds.
    """
    genus = pattern.genus
    if genus == 1:
        return pattern == TORUS
    return necklace_signature(pattern) == NecklaceSignature(
        s=genus, curve_count=genus + 1, max_self_intersections=genus - 1, non_simple_curves=1
    )


def is_necklace(pattern: GluingPattern) -> bool:
    return canonical_word(pattern) == canonical_word(necklace(pattern.genus))


@functools.lru_cache(maxsize=None)
def necklace(genus: int) -> GluingPattern:
    """Thread one torus at a time on the spiraling curve, at the first position keeping the signature."""
    if genus < 1:
        raise exceptions.GenusOutOfRange(genus, 1)
    current = TORUS
    for level in range(2, genus + 1):
        for position in range(current.size):
            candidate = sum_with_torus(current, position)
            if has_necklace_signature(candidate):
                current = candidate
                break
        else:
            raise exceptions.SignatureMismatch(level)
    return current


def _one_simple_sites(pattern: GluingPattern) -> typing.List[int]:
    """First position of the edge of every 1-simple curve."""
    return [
        position for position in range(pattern.size)
        if position < pattern.alpha[position] and pattern.next_on_curve(position) == position
    ]


def glue_tori(base: GluingPattern, copies: int) -> GluingPattern:
    """Glue `copies` tori on edges of distinct 1-simple curves of `base`, in position order."""
    sites = _one_simple_sites(base)
    if copies > len(sites):
        raise exceptions.SignatureMismatch(base.genus + copies)
    current = base
    pending = sites[:copies]
    while pending:
        site, pending = pending[0], pending[1:]
        current, position_map, _ = connected_sum_map(current, site, TORUS, 0)
        pending = [position_map[position] for position in pending]
    if current.genus != base.genus + copies:
        raise exceptions.SignatureMismatch(base.genus + copies)
    logger.debug(f"Glued {copies} torus copies: genus {current.genus}, S {one_simple_count(current)}.")
    return current


def _glue_with_target(current: GluingPattern, copies: int, target_s: int) -> typing.Optional[GluingPattern]:
    if copies == 0:
        return current if one_simple_count(current) == target_s else None
    candidates = {}
    for position in range(current.size):
        candidate = sum_with_torus(current, position)
        candidates.setdefault(canonical_word(candidate), candidate)
    for candidate in sorted(candidates.values(), key=one_simple_count, reverse=True):
        found = _glue_with_target(candidate, copies - 1, target_s)
        if found is not None:
            return found
    return None


def glue_tori_keeping_curves(base: GluingPattern, copies: int, target_s: int) -> GluingPattern:
    """Glue `copies` tori on `base`, searching the gluing sites for a result with `target_s` 1-simple curves."""
    result = _glue_with_target(base, copies, target_s)
    if result is None:
        raise exceptions.SignatureMismatch(base.genus + copies)
    logger.debug(f"Glued {copies} torus copies: genus {result.genus}, S {target_s}.")
    return result


def chain_x(genus: int) -> GluingPattern:
    """Genus-2g pattern: g tori glued on the necklace of genus g, carrying 2g 1-simple curves."""
    return glue_tori_keeping_curves(necklace(genus), genus, 2 * genus)


def chain_y(genus: int) -> GluingPattern:
    """Genus-2g pattern: g-1 tori glued on 1-simple curves of the necklace of genus g+1."""
    return glue_tori(necklace(genus + 1), genus - 1)


def s_lower_bound(first: GluingPattern, second: GluingPattern) -> fractions.Fraction:
    return fractions.Fraction(abs(one_simple_count(first) - one_simple_count(second)), 2)
