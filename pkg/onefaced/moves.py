import dataclasses
import enum
import typing

from . import exceptions
from . import logger
from . import utils
from .pattern import GluingPattern
from .pattern import TORUS
from .trace import ReductionTrace
from .trace import TraceStep

BLOCK_LENGTH = 6


class VertexType(enum.Enum):
    TYPE1 = 'Type1'
    TYPE2 = 'Type2'
    TYPE3 = 'Type3'


@dataclasses.dataclass(frozen=True)
class VertexInfo:
    cycle: typing.Tuple[int, ...]  # mu-order, starting at the minimal order index
    vtype: VertexType
    trisections: int


@dataclasses.dataclass(frozen=True)
class CurveDecomposition:
    curves: typing.Tuple[typing.Tuple[int, ...], ...]  # edge ids per curve
    lengths: typing.Tuple[int, ...]
    self_intersections: typing.Tuple[int, ...]
    one_simple: typing.Tuple[bool, ...]

    @property
    def count(self) -> int:
        return len(self.curves)

    @property
    def one_simple_count(self) -> int:
        return sum(self.one_simple)


# Orders and intertwined pairs

def order_index(pattern: GluingPattern, root: int, position: int) -> int:
    return (position - root) % pattern.size


def is_intertwined(pattern: GluingPattern, i: int, j: int) -> bool:
    pattern.check_position(i)
    pattern.check_position(j)
    alpha = pattern.alpha
    if j == i or j == alpha[i]:
        raise exceptions.SameEdge(i, j)
    size = pattern.size
    return utils.in_open_arc(i, j, alpha[i], size) != utils.in_open_arc(i, j, alpha[j], size)


def intertwined_pairs(pattern: GluingPattern, positions: typing.Iterable[int] = None) -> typing.Iterator[typing.Tuple[int, int]]:
    """Yield the intertwined pairs (i, j), i < j, among `positions` (all positions by default) in lexicographic order."""
    candidates = sorted(set(positions)) if positions is not None else range(pattern.size)
    alpha = pattern.alpha
    for index, i in enumerate(candidates):
        for j in candidates[index + 1:]:
            if j != alpha[i] and is_intertwined(pattern, i, j):
                yield i, j


# Surgery

def _surgery_frame(pattern: GluingPattern, i: int, j: int) -> typing.Tuple[int, int, int, int]:
    if not is_intertwined(pattern, i, j):
        raise exceptions.NotIntertwined(i, j)
    alpha = pattern.alpha
    if utils.in_open_arc(i, j, alpha[i], pattern.size):
        return i, alpha[i], j, alpha[j]
    return alpha[i], i, alpha[j], j  # sigma_{x,y} equals sigma_{xbar,ybar}


def _frame_words(pattern: GluingPattern, i: int, j: int):
    x, x_bar, y, y_bar = _surgery_frame(pattern, i, j)
    size = pattern.size
    return (x, x_bar, y, y_bar), (
        utils.open_arc(y_bar, x, size),
        utils.open_arc(x, x_bar, size),
        utils.open_arc(x_bar, y, size),
        utils.open_arc(y, y_bar, size),
    )


def surgery_map(pattern: GluingPattern, i: int, j: int) -> typing.Tuple[GluingPattern, typing.Tuple[int, ...]]:
    """
    Rewrite w1 x w2 xbar w3 y w4 ybar into w3 X w2 Xbar w1 Y w4 Ybar.
    :return: The new pattern and, for every new index, the old position it comes from
    """
    (x, x_bar, y, y_bar), (w1, w2, w3, w4) = _frame_words(pattern, i, j)
    origins = tuple(w3 + [x] + w2 + [x_bar] + w1 + [y] + w4 + [y_bar])
    return GluingPattern(pattern.word[position] for position in origins), origins


def barred_surgery(pattern: GluingPattern, i: int, j: int) -> GluingPattern:
    """Surgery between the reversed edges: w1 x w2 xbar w3 y w4 ybar becomes w1 X w4 Xbar w3 Y w2 Ybar."""
    (x, x_bar, y, y_bar), (w1, w2, w3, w4) = _frame_words(pattern, i, j)
    origins = w1 + [x] + w4 + [x_bar] + w3 + [y] + w2 + [y_bar]
    return GluingPattern(pattern.word[position] for position in origins)


def surgery(pattern: GluingPattern, i: int, j: int) -> GluingPattern:
    return surgery_map(pattern, i, j)[0]


def surgery_images(pattern: GluingPattern, i: int, j: int) -> typing.Tuple[GluingPattern, int, int]:
    """Return the surgered pattern with the new positions of the oriented edges at i and j."""
    result, origins = surgery_map(pattern, i, j)
    return result, origins.index(i), origins.index(j)


# Curves

def next_on_curve(pattern: GluingPattern, position: int) -> int:
    return pattern.next_on_curve(pattern.check_position(position))


def curve_decomposition(pattern: GluingPattern) -> CurveDecomposition:
    size = pattern.size
    curve_of = [-1] * size
    members = []
    for start in range(size):
        if curve_of[start] != -1:
            continue
        curve_of[start] = len(members)
        stack, curve = [start], []
        while stack:
            position = stack.pop()
            curve.append(position)
            for neighbour in (pattern.alpha[position], pattern.next_on_curve(position)):
                if curve_of[neighbour] == -1:
                    curve_of[neighbour] = len(members)
                    stack.append(neighbour)
        members.append(curve)

    self_intersections = [0] * len(members)
    for cycle in pattern.cycles:
        if curve_of[cycle[0]] == curve_of[cycle[1]]:  # Both strands belong to one curve
            self_intersections[curve_of[cycle[0]]] += 1
    edges = [tuple(sorted({pattern.edge(position) for position in curve})) for curve in members]
    return CurveDecomposition(
        curves=tuple(edges),
        lengths=tuple(len(curve_edges) for curve_edges in edges),
        self_intersections=tuple(self_intersections),
        one_simple=tuple(all(pattern.next_on_curve(h) == h for h in curve) for curve in members),
    )


def one_simple_count(pattern: GluingPattern) -> int:
    """S: number of 1-simple curves, i.e. of edges whose sides are fixed by C."""
    return sum(
        1 for position in range(pattern.size)
        if position < pattern.alpha[position] and pattern.next_on_curve(position) == position
    )


# Vertex types

def vertex_census(pattern: GluingPattern, root: int) -> typing.List[VertexInfo]:
    pattern.check_position(root)
    census = []
    for cycle in pattern.cycles:
        start = min(range(4), key=lambda index: order_index(pattern, root, cycle[index]))
        rotated = cycle[start:] + cycle[:start]
        orders = [order_index(pattern, root, position) for position in rotated]
        trisections = sum(1 for index in range(3) if orders[index] > orders[index + 1])
        if orders[0] < orders[1] < orders[2] < orders[3]:
            vtype = VertexType.TYPE1
        elif orders[0] < orders[3] < orders[2] < orders[1]:
            vtype = VertexType.TYPE2
        else:
            vtype = VertexType.TYPE3
        census.append(VertexInfo(cycle=rotated, vtype=vtype, trisections=trisections))
    return census


def census_counts(census: typing.Sequence[VertexInfo]) -> typing.Dict[VertexType, int]:
    counts = {vtype: 0 for vtype in VertexType}
    for info in census:
        counts[info.vtype] += 1
    return counts


# Simplifications

def simplification_gain(pattern: GluingPattern, position: int) -> int:
    """
    Number of 1-simple curves a simplification at `position` creates.
    A curve of two edges leaves both of them 1-simple, any longer curve gives up one.
    """
    successor = pattern.next_on_curve(position)
    return 2 if pattern.next_on_curve(successor) == position else 1


def find_simplification(pattern: GluingPattern) -> typing.Optional[int]:
    for position in range(pattern.size):
        successor = pattern.next_on_curve(position)
        if successor in (position, pattern.alpha[position]):
            continue
        if is_intertwined(pattern, position, successor):
            return position
    return None


def record_step(trace: ReductionTrace, op: str, args, before: GluingPattern, after: GluingPattern) -> None:
    trace.append(TraceStep(
        op=op,
        args=tuple(args),
        before=before.word,
        after=after.word,
        s_before=one_simple_count(before),
        s_after=one_simple_count(after),
    ))


def simplify_cascade(pattern: GluingPattern) -> typing.Tuple[GluingPattern, ReductionTrace]:
    trace = ReductionTrace()
    for _ in range(pattern.edge_count):  # Each step adds a 1-simple curve
        position = find_simplification(pattern)
        if position is None:
            break
        successor = pattern.next_on_curve(position)
        simplified = surgery(pattern, position, successor)
        record_step(trace, 'simplify', (position, successor), pattern, simplified)
        logger.debug(f"Simplified at ({position}, {successor}): S {trace.steps[-1].s_before} -> {trace.steps[-1].s_after}.")
        pattern = simplified
    return pattern, trace


# Connected sums

def connected_sum_map(
    first: GluingPattern, i: int, second: GluingPattern, j: int
) -> typing.Tuple[GluingPattern, typing.Dict[int, int], typing.Dict[int, int]]:
    """
    Build x1 w1 x1bar x2 w2 x2bar y1 w1' y1bar y2 w2' y2bar from x w1 xbar w2 and y w1' ybar w2'.
    :return: The sum and, for each summand, the map old position -> new index (x goes to x1, xbar to x1bar)
    """
    first.check_position(i)
    second.check_position(j)
    offset = first.edge_count
    fresh = first.edge_count + second.edge_count
    x1, x2, y1, y2 = fresh + 1, fresh + 2, fresh + 3, fresh + 4

    def _split(pattern, start, shift, frame_labels, position_map, base):
        order = utils.rotation(start, pattern.size)
        cut = (pattern.alpha[start] - start) % pattern.size
        w1, w2 = order[1:cut], order[cut + 1:]
        labels = pattern.word
        signed = [label + shift if label > 0 else label - shift for label in labels]
        first_label, second_label = frame_labels
        layout = (
            [(start, first_label)] + [(p, signed[p]) for p in w1] + [(order[cut], -first_label), (None, second_label)]
            + [(p, signed[p]) for p in w2] + [(None, -second_label)]
        )
        for index, (position, _) in enumerate(layout):
            if position is not None:
                position_map[position] = base + index
        return [label for _, label in layout]

    first_map, second_map = {}, {}
    labels = _split(first, i, 0, (x1, x2), first_map, 0)
    labels += _split(second, j, offset, (y1, y2), second_map, len(labels))
    return GluingPattern(labels), first_map, second_map


def connected_sum(first: GluingPattern, i: int, second: GluingPattern, j: int) -> GluingPattern:
    return connected_sum_map(first, i, second, j)[0]


def find_torus_blocks(pattern: GluingPattern) -> typing.List[int]:
    size = pattern.size
    alpha = pattern.alpha
    if size < 2 * BLOCK_LENGTH:
        return []
    blocks = []
    for q in range(size):
        if alpha[q] != (q + 2) % size or alpha[(q + 1) % size] != (q + 4) % size \
           or alpha[(q + 3) % size] != (q + 5) % size:
            continue
        partner = alpha[(q - 1) % size]
        if alpha[(partner - 1) % size] == (q + BLOCK_LENGTH) % size:
            blocks.append(q)
    return blocks


def block_frame(pattern: GluingPattern, q: int) -> typing.Tuple[int, int, int, int]:
    """Return the positions of x1, x1bar, x2, x2bar around the torus block at q."""
    if q not in find_torus_blocks(pattern):
        raise exceptions.NotABlock(q)
    size = pattern.size
    x2_bar = (q - 1) % size
    x2 = pattern.alpha[x2_bar]
    return (q + BLOCK_LENGTH) % size, (x2 - 1) % size, x2, x2_bar


def split_torus_summand_map(pattern: GluingPattern, q: int) -> typing.Tuple[GluingPattern, int, typing.Tuple[int, ...]]:
    """Return the complement summand, its marked position and, for every new index, the old position."""
    x1, _, x2, x2_bar = block_frame(pattern, q)
    size = pattern.size
    kept = [x1] + [position for position in utils.open_arc(x1, q, size) if position not in (x2, x2_bar)]
    return GluingPattern(pattern.word[position] for position in kept), 0, tuple(kept)


def split_torus_summand(pattern: GluingPattern, q: int) -> typing.Tuple[GluingPattern, int]:
    summand, marked, _ = split_torus_summand_map(pattern, q)
    return summand, marked


def flip_marked_side(pattern: GluingPattern, q: int) -> GluingPattern:
    """Surgery on the two halves x1, x2 of the marked edge: (G, x) # T becomes (G, xbar) # T."""
    x1, _, x2, _ = block_frame(pattern, q)
    return surgery(pattern, x1, x2)


def sum_with_torus(pattern: GluingPattern, position: int) -> GluingPattern:
    return connected_sum(pattern, position, TORUS, 0)
