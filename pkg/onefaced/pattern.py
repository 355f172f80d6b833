import dataclasses
import functools
import typing

from . import exceptions
from . import utils


class GluingPattern:

    """
    Cyclic word recording how the sides of one polygon are glued into a one-faced 4-valent collection.

    Positions 0..2E-1 address the oriented edges. Labels are presentation only: they are renormalized on
    construction so that the first occurrence of each edge is positive and labels appear in increasing order.
    Instances are immutable once built.
    """

    def __init__(self, labels: typing.Iterable[int]):
        labels = tuple(labels)
        if not labels:
            raise exceptions.EmptyWord()
        _check_pairing(labels)
        self.word = utils.relabel_by_first_appearance(labels)
        self.alpha = _pair_positions(self.word)
        self.cycles = _mu_cycles(self.alpha)

    def __eq__(self, other):
        return isinstance(other, GluingPattern) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __len__(self):
        return len(self.word)

    def __repr__(self):
        return f"GluingPattern({' '.join(map(str, self.word))})"

    @property
    def size(self) -> int:
        return len(self.word)

    @property
    def edge_count(self) -> int:
        return len(self.word) // 2

    @property
    def vertex_count(self) -> int:
        return len(self.cycles)

    @property
    def genus(self) -> int:
        return (self.edge_count - self.vertex_count + 1) // 2

    def check_position(self, position: int) -> int:
        if not 0 <= position < len(self.word):
            raise exceptions.PositionOutOfRange(position, len(self.word))
        return position

    def edge(self, position: int) -> int:
        """Return the edge id (normalized label) of the oriented edge at `position`."""
        return abs(self.word[position])

    def gamma(self, position: int) -> int:
        return (position + 1) % len(self.word)

    def mu(self, position: int) -> int:
        """Vertex rotation: alpha first, then gamma."""
        return (self.alpha[position] + 1) % len(self.word)

    def next_on_curve(self, position: int) -> int:
        return (self.alpha[(position + 1) % len(self.word)] + 1) % len(self.word)

    @functools.cached_property
    def vertex_of(self) -> typing.Tuple[int, ...]:
        """Index into `cycles` of the vertex holding each position."""
        owners = [0] * len(self.word)
        for index, cycle in enumerate(self.cycles):
            for position in cycle:
                owners[position] = index
        return tuple(owners)


@dataclasses.dataclass(frozen=True)
class CanonicalClass:
    canonical_word: typing.Tuple[int, ...]
    orbit_size: int
    aut_size: int
    genus: int

    def pattern(self) -> GluingPattern:
        return GluingPattern(self.canonical_word)


def _check_pairing(labels: typing.Sequence[int]) -> None:
    signs = {}
    for label in labels:
        if label == 0:
            raise exceptions.UnpairedLabel(label)
        signs.setdefault(abs(label), []).append(label > 0)
    for key, occurrences in signs.items():
        if sorted(occurrences) != [False, True]:
            raise exceptions.UnpairedLabel(key)


def _pair_positions(word: typing.Sequence[int]) -> typing.Tuple[int, ...]:
    first_seen = {}
    alpha = [0] * len(word)
    for position, label in enumerate(word):
        key = abs(label)
        if key in first_seen:
            alpha[position] = first_seen[key]
            alpha[first_seen[key]] = position
        else:
            first_seen[key] = position
    return tuple(alpha)


def _mu_cycles(alpha: typing.Sequence[int]) -> typing.Tuple[typing.Tuple[int, ...], ...]:
    size = len(alpha)
    seen = [False] * size
    cycles = []
    for start in range(size):  # Ascending scan: each cycle starts at its minimal position
        if seen[start]:
            continue
        cycle = []
        position = start
        while not seen[position]:
            seen[position] = True
            cycle.append(position)
            position = (alpha[position] + 1) % size
        if len(cycle) != 4:
            raise exceptions.NotFourValent(len(cycle))
        cycles.append(tuple(cycle))
    return tuple(cycles)


TORUS = GluingPattern((1, 2, -1, -2))


# Operations

def genus(pattern: GluingPattern) -> int:
    return pattern.genus


def vertex_cycles(pattern: GluingPattern) -> typing.List[typing.Tuple[int, ...]]:
    return list(pattern.cycles)


def rotate(pattern: GluingPattern, shift: int) -> GluingPattern:
    """Return the pattern read from position `shift` on."""
    shift %= pattern.size
    return GluingPattern(pattern.word[shift:] + pattern.word[:shift])


def rotation_words(pattern: GluingPattern, reflect: bool = False) -> typing.List[typing.Tuple[int, ...]]:
    """All normalized words obtained by reading the pattern from every position (and backwards if `reflect`)."""
    readings = [pattern.word]
    if reflect:
        readings.append(pattern.word[::-1])
    return [
        utils.relabel_by_first_appearance(reading[start:] + reading[:start])
        for reading in readings for start in range(len(reading))
    ]


def canonical_word(pattern: GluingPattern, reflect: bool = False) -> typing.Tuple[int, ...]:
    return min(rotation_words(pattern, reflect))


def canonicalize(pattern: GluingPattern, reflect: bool = False) -> CanonicalClass:
    words = rotation_words(pattern, reflect)
    orbit_size = len(set(words))
    return CanonicalClass(
        canonical_word=min(words),
        orbit_size=orbit_size,
        aut_size=len(words) // orbit_size,
        genus=pattern.genus,
    )
