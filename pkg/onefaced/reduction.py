import dataclasses
import typing

from . import exceptions
from . import logger
from .moves import VertexType
from .moves import find_simplification
from .moves import find_torus_blocks
from .moves import block_frame
from .moves import intertwined_pairs
from .moves import is_intertwined
from .moves import one_simple_count
from .moves import order_index
from .moves import record_step
from .moves import simplify_cascade
from .moves import split_torus_summand
from .moves import split_torus_summand_map
from .moves import surgery
from .moves import vertex_census
from .pattern import GluingPattern
from .pattern import canonical_word
from .trace import ReductionTrace

ROOT = 0


@dataclasses.dataclass(frozen=True)
class StagePredicates:
    non_simplifiable: bool
    almost_toral: bool
    toral: bool


class _Layout:

    """Vertex types and adjacency of a pattern for one root."""

    def __init__(self, pattern: GluingPattern, root: int = ROOT):
        self.pattern = pattern
        self.root = root
        self.types = [info.vtype for info in vertex_census(pattern, root)]
        owners = pattern.vertex_of
        self.neighbours = [
            {owners[pattern.alpha[position]] for position in cycle} - {index}
            for index, cycle in enumerate(pattern.cycles)
        ]

    def of_type(self, vtype: VertexType) -> typing.List[int]:
        return [index for index, current in enumerate(self.types) if current == vtype]

    def typed_neighbours(self, vertex: int, vtype: VertexType) -> typing.List[int]:
        return sorted(other for other in self.neighbours[vertex] if self.types[other] == vtype)

    def type12_pairs(self) -> typing.List[typing.Tuple[int, int]]:
        return [
            (type1, type2)
            for type1 in self.of_type(VertexType.TYPE1)
            for type2 in self.typed_neighbours(type1, VertexType.TYPE2)
        ]

    def local_positions(self, vertices: typing.Iterable[int]) -> typing.Set[int]:
        positions = set()
        for vertex in vertices:
            for position in self.pattern.cycles[vertex]:
                positions.update((position, self.pattern.alpha[position]))
        return positions


# Local orders

def _shared_edge_roles(pattern: GluingPattern, shared: int) -> typing.Dict[str, int]:
    """
    Read the labels around a Type-1 vertex (cbar d e f) and a Type-2 vertex (g abar b c) sharing edge c.
    Entering edges are keyed by their role name: a, b_bar, d_bar, e_bar, f_bar, g_bar.
    """
    mu, alpha = pattern.mu, pattern.alpha
    g = mu(shared)
    a_bar = mu(g)
    b = mu(a_bar)
    d = mu(alpha[shared])
    e = mu(d)
    f = mu(e)
    return {
        'a': alpha[a_bar], 'b_bar': alpha[b], 'd_bar': alpha[d],
        'e_bar': alpha[e], 'f_bar': alpha[f], 'g_bar': alpha[g],
    }


def _shared_edges(pattern: GluingPattern, type1_cycle, type2_cycle) -> typing.List[int]:
    type1_positions = set(type1_cycle)
    return [position for position in type2_cycle if pattern.alpha[position] in type1_positions]


def _is_good(pattern: GluingPattern, type1_cycle, type2_cycle) -> bool:
    shared_edges = _shared_edges(pattern, type1_cycle, type2_cycle)
    for shared in shared_edges:
        roles = _shared_edge_roles(pattern, shared)
        origin = roles['a']
        g_order = order_index(pattern, origin, roles['g_bar'])
        if any(order_index(pattern, origin, roles[name]) < g_order for name in ('b_bar', 'd_bar', 'e_bar', 'f_bar')):
            return False
    return bool(shared_edges)


def vertices_adjacent(pattern: GluingPattern, v1: typing.Sequence[int], v2: typing.Sequence[int]) -> bool:
    targets = set(v2)
    return any(pattern.alpha[position] in targets for position in v1)


def good_order(pattern: GluingPattern, root: int, v1: typing.Sequence[int], v2: typing.Sequence[int]) -> bool:
    """
    Tell whether the Type-1 vertex v1 and the adjacent Type-2 vertex v2 are in good order.
    The order is read with the minimal entering edge a as origin; with several shared edges, all readings must be good.
    """
    layout = _Layout(pattern, root)
    owners = pattern.vertex_of
    if layout.types[owners[v1[0]]] != VertexType.TYPE1:
        raise exceptions.NotTyped(v1, VertexType.TYPE1.value)
    if layout.types[owners[v2[0]]] != VertexType.TYPE2:
        raise exceptions.NotTyped(v2, VertexType.TYPE2.value)
    return _is_good(pattern, pattern.cycles[owners[v1[0]]], pattern.cycles[owners[v2[0]]])


def stage_predicates(pattern: GluingPattern, root: int = ROOT) -> StagePredicates:
    if find_simplification(pattern) is not None:
        return StagePredicates(non_simplifiable=False, almost_toral=False, toral=False)
    layout = _Layout(pattern, root)
    cycles = pattern.cycles
    almost_toral = not any(layout.typed_neighbours(vertex, VertexType.TYPE2) for vertex in layout.of_type(VertexType.TYPE2)) \
        and all(_is_good(pattern, cycles[type1], cycles[type2]) for type1, type2 in layout.type12_pairs())
    toral = almost_toral and all(
        len(layout.typed_neighbours(vertex, VertexType.TYPE2)) <= 2 for vertex in layout.of_type(VertexType.TYPE1)
    )
    return StagePredicates(non_simplifiable=True, almost_toral=almost_toral, toral=toral)


# Moves toward a toral pattern

def _offending_configurations(layout: _Layout) -> typing.List[typing.Tuple[int, ...]]:
    """Vertex groups preventing the pattern from being almost toral, then those where a minimal co-edge leads to Type 2."""
    pattern = layout.pattern
    configurations = []
    for vertex in layout.of_type(VertexType.TYPE2):
        for other in layout.typed_neighbours(vertex, VertexType.TYPE2):
            if vertex < other:
                configurations.append((vertex, other))
    pairs = layout.type12_pairs()
    for type1, type2 in pairs:
        if not _is_good(pattern, pattern.cycles[type1], pattern.cycles[type2]):
            configurations.append((type1, type2))
    owners = pattern.vertex_of
    for type1, type2 in pairs:
        for shared in _shared_edges(pattern, pattern.cycles[type1], pattern.cycles[type2]):
            roles = _shared_edge_roles(pattern, shared)
            closest = min(
                (roles[name] for name in ('b_bar', 'd_bar', 'e_bar', 'f_bar')),
                key=lambda position: order_index(pattern, roles['a'], position),
            )
            target = owners[closest]
            if target not in (type1, type2) and layout.types[target] == VertexType.TYPE2:
                configurations.append((type1, type2, target))
    return configurations


def _candidate_pairs(pattern: GluingPattern, position_sets: typing.Iterable[typing.Optional[typing.Set[int]]]):
    """Intertwined pairs near each configuration in turn, then every remaining pair, without repetition."""
    tried = set()
    for positions in list(position_sets) + [None]:
        for pair in intertwined_pairs(pattern, positions):
            if pair not in tried:
                tried.add(pair)
                yield pair


def boost_S(pattern: GluingPattern) -> typing.Optional[typing.Tuple[GluingPattern, ReductionTrace]]:
    layout = _Layout(pattern)
    configurations = _offending_configurations(layout)
    if not configurations:
        return None
    s_value = one_simple_count(pattern)
    fallback = None
    for i, j in _candidate_pairs(pattern, (layout.local_positions(group) for group in configurations)):
        candidate = surgery(pattern, i, j)
        simplified, cascade = simplify_cascade(candidate)
        if one_simple_count(simplified) <= s_value:
            continue
        trace = ReductionTrace()
        record_step(trace, 'surgery', (i, j), pattern, candidate)
        trace.extend(cascade)
        if one_simple_count(candidate) >= s_value:
            logger.debug(f"Raised S from {s_value} to {one_simple_count(simplified)} with surgery ({i}, {j}).")
            return simplified, trace
        if fallback is None:
            fallback = simplified, trace
    return fallback


def _type12_pair_count(pattern: GluingPattern) -> int:
    return len(_Layout(pattern).type12_pairs())


def unclutter_type1(pattern: GluingPattern) -> typing.Optional[typing.Tuple[GluingPattern, ReductionTrace]]:
    layout = _Layout(pattern)
    cluttered = [
        vertex for vertex in layout.of_type(VertexType.TYPE1)
        if len(layout.typed_neighbours(vertex, VertexType.TYPE2)) > 2
    ]
    if not cluttered:
        return None
    s_value = one_simple_count(pattern)
    pair_count = len(layout.type12_pairs())
    for i, j in _candidate_pairs(pattern, (layout.local_positions([vertex]) for vertex in cluttered)):
        candidate = surgery(pattern, i, j)
        if one_simple_count(candidate) == s_value and _type12_pair_count(candidate) < pair_count:
            trace = ReductionTrace()
            record_step(trace, 'surgery', (i, j), pattern, candidate)
            return candidate, trace
    return None


# Pipeline

def to_toral(pattern: GluingPattern) -> typing.Tuple[GluingPattern, ReductionTrace]:
    if pattern.genus < 2:
        raise exceptions.GenusOutOfRange(pattern.genus, 2)
    pattern, trace = simplify_cascade(pattern)
    trace.mark('non_simplifiable')
    for _ in range(4 * pattern.edge_count):
        predicates = stage_predicates(pattern)
        if not predicates.non_simplifiable:
            pattern, cascade = simplify_cascade(pattern)
            trace.extend(cascade)
            continue
        if predicates.almost_toral:
            trace.mark('almost_toral')
        if predicates.toral:
            trace.mark('toral')
            break
        boosted = boost_S(pattern)
        if boosted:
            pattern, tail = boosted
            trace.extend(tail)
            continue
        uncluttered = unclutter_type1(pattern) if predicates.almost_toral else None
        if uncluttered:
            pattern, tail = uncluttered
            trace.extend(tail)
            continue
        logger.warning(f"No toral form reached from {pattern!r}.")
        raise exceptions.NoToralWitness(pattern.word)
    else:
        raise exceptions.NoToralWitness(pattern.word)
    return pattern, trace


def make_self_intersection(pattern: GluingPattern) -> typing.Tuple[GluingPattern, ReductionTrace]:
    trace = ReductionTrace()
    if find_torus_blocks(pattern):
        return pattern, trace
    layout = _Layout(pattern)
    witnesses = []
    for vertex in layout.of_type(VertexType.TYPE2):
        type1_neighbours = layout.typed_neighbours(vertex, VertexType.TYPE1)
        if len(type1_neighbours) == 1:
            witnesses.append(type1_neighbours[0])
    for i, j in _candidate_pairs(pattern, (layout.local_positions([vertex]) for vertex in witnesses)):
        candidate = surgery(pattern, i, j)
        if find_torus_blocks(candidate):
            record_step(trace, 'surgery', (i, j), pattern, candidate)
            return candidate, trace
    raise exceptions.NoToralWitness(pattern.word)


def shortest_route_to_block(pattern: GluingPattern, max_depth: int = None) -> typing.Tuple[GluingPattern, ReductionTrace]:
    """Breadth-first search over surgeries for the closest pattern carrying a torus block."""
    trace = ReductionTrace(route='shortest')
    if find_torus_blocks(pattern):
        return pattern, trace
    max_depth = max_depth or 3 * pattern.genus
    seen = {canonical_word(pattern)}
    frontier = [(pattern, [])]
    for _ in range(max_depth):
        next_frontier = []
        for current, path in frontier:
            for i, j in intertwined_pairs(current):
                candidate = surgery(current, i, j)
                route = path + [(current, (i, j), candidate)]
                if find_torus_blocks(candidate):
                    for before, pair, after in route:
                        record_step(trace, 'surgery', pair, before, after)
                    return candidate, trace
                key = canonical_word(candidate)
                if key not in seen:
                    seen.add(key)
                    next_frontier.append((candidate, route))
        frontier = next_frontier
    raise exceptions.NoToralWitness(pattern.word)


def extract_torus_summand(pattern: GluingPattern) -> typing.Tuple[GluingPattern, int, ReductionTrace]:
    genus = pattern.genus
    if genus < 2:
        raise exceptions.GenusOutOfRange(genus, 2)
    budget = 3 * genus - 1
    try:
        toral, trace = to_toral(pattern)
        blocked, tail = make_self_intersection(toral)
        trace.extend(tail)
        staged = trace.surgery_count <= budget
    except exceptions.NoToralWitness:
        staged = False
    if not staged:
        logger.info(f"Staged reduction of {pattern!r} missed its budget, using the shortest route.")
        blocked, trace = shortest_route_to_block(pattern)
    block = find_torus_blocks(blocked)[0]
    summand, marked = split_torus_summand(blocked, block)
    record_step(trace, 'split', (block,), blocked, summand)
    logger.debug(f"Extracted a torus summand with {trace.surgery_count} surgeries ({trace.route}).")
    return summand, marked, trace


def summand_path(pattern: GluingPattern) -> typing.List[typing.Tuple[GluingPattern, int, ReductionTrace]]:
    """Extract torus summands level by level down to genus 1."""
    levels = []
    while pattern.genus > 1:
        pattern, marked, trace = extract_torus_summand(pattern)
        levels.append((pattern, marked, trace))
    return levels


def lift_surgery(pattern: GluingPattern, block: int, i: int, j: int) -> GluingPattern:
    """Lift a surgery on the complement of the torus block at `block` to the whole pattern."""
    summand, marked, origins = split_torus_summand_map(pattern, block)
    target = canonical_word(surgery(summand, i, j))
    x1, x1_bar, x2, x2_bar = block_frame(pattern, block)
    marked_bar = summand.alpha[marked]

    def _lifts(position):
        if position == marked:
            return x1, x2
        if position == marked_bar:
            return x1_bar, x2_bar
        return origins[position],

    for lifted_i in _lifts(i):
        for lifted_j in _lifts(j):
            if not is_intertwined(pattern, lifted_i, lifted_j):
                continue
            lifted = surgery(pattern, lifted_i, lifted_j)
            for candidate_block in find_torus_blocks(lifted):
                if canonical_word(split_torus_summand(lifted, candidate_block)[0]) == target:
                    return lifted
    raise exceptions.NotIntertwined(i, j)
