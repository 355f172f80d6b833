import dataclasses
import math
import typing

from . import config
from . import exceptions
from . import logger
from . import scheduler
from .moves import VertexType
from .moves import census_counts
from .moves import curve_decomposition
from .moves import find_simplification
from .moves import one_simple_count
from .moves import vertex_census
from .pattern import CanonicalClass
from .pattern import GluingPattern
from .pattern import rotation_words

NATIVE_INT_MAX = 2 ** 63 - 1
UNPAIRED = -1


@dataclasses.dataclass(frozen=True)
class AtlasRecord:
    canonical_class: CanonicalClass
    s: int
    curve_count: int
    census: typing.Dict[str, int]
    trisections_total: int
    non_simplifiable: bool

    def to_dict(self) -> dict:
        return {
            'word': list(self.canonical_class.canonical_word),
            'orbit_size': self.canonical_class.orbit_size,
            'aut_size': self.canonical_class.aut_size,
            'genus': self.canonical_class.genus,
            'S': self.s,
            'curve_count': self.curve_count,
            'census': dict(self.census),
            'trisections_total': self.trisections_total,
            'non_simplifiable': self.non_simplifiable,
        }


# Counting

def rooted_count_formula(genus: int) -> int:
    if genus < 1:
        raise exceptions.GenusOutOfRange(genus, 1)
    count = math.factorial(4 * genus - 2) // (2 ** (2 * genus - 1) * math.factorial(genus))
    if count > NATIVE_INT_MAX:
        max_genus = genus - 1
        while math.factorial(4 * max_genus - 2) // (2 ** (2 * max_genus - 1) * math.factorial(max_genus)) > NATIVE_INT_MAX:
            max_genus -= 1
        raise exceptions.FormulaOverflow(genus, max_genus)
    return count


def check_genus(genus: int, allow_large: bool = False) -> None:
    if genus < 1:
        raise exceptions.GenusOutOfRange(genus, 1, config.MAX_GENUS)
    if genus > config.MAX_GENUS and not allow_large:
        raise exceptions.GenusOutOfRange(genus, 1, config.MAX_GENUS)


# Rooted enumeration

def _admissible(alpha: typing.List[int], size: int, start: int) -> bool:
    """Check that the partial vertex rotation through `start` is a 4-cycle or an open path of at most 4 positions."""
    length, position = 1, start
    while alpha[position] != UNPAIRED:
        position = (alpha[position] + 1) % size
        if position == start:
            return length == 4
        length += 1
        if length > 4:
            return False
    position = start
    while alpha[(position - 1) % size] != UNPAIRED:
        position = alpha[(position - 1) % size]
        length += 1
        if length > 4:
            return False
    return True


def _word_from_alpha(alpha: typing.Sequence[int]) -> typing.Tuple[int, ...]:
    labels = [0] * len(alpha)
    next_label = 1
    for position, partner in enumerate(alpha):
        if partner > position:
            labels[position] = next_label
            labels[partner] = -next_label
            next_label += 1
    return tuple(labels)


def _extend(alpha: typing.List[int], size: int) -> typing.Iterator[typing.Tuple[int, ...]]:
    try:
        position = alpha.index(UNPAIRED)
    except ValueError:
        yield _word_from_alpha(alpha)
        return
    for partner in range(position + 1, size):
        if alpha[partner] != UNPAIRED:
            continue
        alpha[position], alpha[partner] = partner, position
        if _admissible(alpha, size, position) and _admissible(alpha, size, partner):
            yield from _extend(alpha, size)
        alpha[position] = alpha[partner] = UNPAIRED


def _rooted_branch(job: typing.Tuple[int, int]) -> typing.List[typing.Tuple[int, ...]]:
    """All rooted words of the given size where position 0 is glued to `partner`."""
    size, partner = job
    alpha = [UNPAIRED] * size
    alpha[0], alpha[partner] = partner, 0
    if not (_admissible(alpha, size, 0) and _admissible(alpha, size, partner)):
        return []
    return list(_extend(alpha, size))


def enumerate_rooted(genus: int, workers: int = 1, allow_large: bool = False) -> typing.Iterator[GluingPattern]:
    check_genus(genus, allow_large)
    size = 8 * genus - 4
    branches = scheduler.map_jobs(_rooted_branch, [(size, partner) for partner in range(1, size)], workers)
    words = sorted(word for branch in branches for word in branch)
    logger.info(f"Enumerated {len(words)} rooted pattern(s) of genus {genus}.")
    for word in words:
        yield GluingPattern(word)


# Classes

def atlas_record(canonical_class: CanonicalClass) -> AtlasRecord:
    pattern = canonical_class.pattern()
    census = vertex_census(pattern, 0)
    counts = census_counts(census)
    return AtlasRecord(
        canonical_class=canonical_class,
        s=one_simple_count(pattern),
        curve_count=curve_decomposition(pattern).count,
        census={vtype.value: counts[vtype] for vtype in VertexType},
        trisections_total=sum(info.trisections for info in census),
        non_simplifiable=find_simplification(pattern) is None,
    )


def enumerate_class_list(genus: int, workers: int = 1, allow_large: bool = False) -> typing.List[CanonicalClass]:
    """Deduplicate the rooted patterns into classes, sorted by canonical word."""
    seen = set()
    classes = []
    for pattern in enumerate_rooted(genus, workers, allow_large):
        if pattern.word in seen:
            continue
        words = rotation_words(pattern)
        seen.update(words)
        orbit_size = len(set(words))
        classes.append(CanonicalClass(min(words), orbit_size, pattern.size // orbit_size, genus))
    classes.sort(key=lambda canonical_class: canonical_class.canonical_word)
    logger.info(f"Found {len(classes)} class(es) of genus {genus}.")
    return classes


def enumerate_classes(genus: int, workers: int = 1, allow_large: bool = False) -> typing.List[AtlasRecord]:
    return scheduler.map_jobs(atlas_record, enumerate_class_list(genus, workers, allow_large), workers, chunksize=32)
