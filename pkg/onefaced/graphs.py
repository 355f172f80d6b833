import json
import typing

import networkx as nx

from . import atlas
from . import exceptions
from . import logger
from . import scheduler
from .moves import intertwined_pairs
from .moves import one_simple_count
from .moves import sum_with_torus
from .moves import surgery
from .pattern import CanonicalClass
from .pattern import GluingPattern
from .pattern import canonical_word
from .pattern import canonicalize

SURGERY_EDGE = 'surgery'
SUM_EDGE = 'sum'

Word = typing.Tuple[int, ...]


class SurgeryGraph:

    """
    Classes of one-faced collections joined by surgeries (and by torus sums across genera for the hat variant).
    Nodes are canonical words carrying `genus`, `orbit_size`, `aut_size` and `S`; edges carry `kind`.
    """

    def __init__(self, graph: nx.Graph = None):
        self.graph = graph if graph is not None else nx.Graph()

    def __len__(self):
        return self.graph.number_of_nodes()

    @property
    def nodes(self) -> typing.List[Word]:
        return sorted(self.graph.nodes, key=lambda word: (len(word), word))

    @property
    def edges(self) -> typing.List[typing.Tuple[Word, Word, str]]:
        index = {word: position for position, word in enumerate(self.nodes)}
        ordered = []
        for first, second, kind in self.graph.edges(data='kind'):
            if index[first] > index[second]:
                first, second = second, first
            ordered.append((first, second, kind))
        return sorted(ordered, key=lambda edge: (index[edge[0]], index[edge[1]]))

    def level(self, word: Word) -> int:
        return self.graph.nodes[word]['genus']

    def canonical_class(self, word: Word) -> CanonicalClass:
        attributes = self.graph.nodes[word]
        return CanonicalClass(word, attributes['orbit_size'], attributes['aut_size'], attributes['genus'])

    def level_graph(self, genus: int) -> nx.Graph:
        words = [word for word, level in self.graph.nodes(data='genus') if level == genus]
        return self.graph.subgraph(words)

    def add_class(self, canonical_class: CanonicalClass, s_value: int) -> None:
        self.graph.add_node(
            canonical_class.canonical_word,
            genus=canonical_class.genus,
            orbit_size=canonical_class.orbit_size,
            aut_size=canonical_class.aut_size,
            S=s_value,
        )


# Construction

def neighbors(pattern: GluingPattern) -> typing.Set[CanonicalClass]:
    own_word = canonical_word(pattern)
    classes = {canonicalize(surgery(pattern, i, j)) for i, j in intertwined_pairs(pattern)}
    return {canonical_class for canonical_class in classes if canonical_class.canonical_word != own_word}


def neighbour_words(word: Word) -> typing.Set[Word]:
    pattern = GluingPattern(word)
    return {canonical_word(surgery(pattern, i, j)) for i, j in intertwined_pairs(pattern)} - {word}


def sum_words(word: Word) -> typing.Set[Word]:
    pattern = GluingPattern(word)
    return {canonical_word(sum_with_torus(pattern, position)) for position in range(pattern.size)}


def _class_s_value(word: Word) -> int:
    return one_simple_count(GluingPattern(word))


def build_surgery_graph(genus: int, workers: int = 1) -> SurgeryGraph:
    classes = atlas.enumerate_class_list(genus, workers)
    words = [canonical_class.canonical_word for canonical_class in classes]
    surgery_graph = SurgeryGraph()
    for canonical_class, s_value in zip(classes, scheduler.map_jobs(_class_s_value, words, workers, chunksize=32)):
        surgery_graph.add_class(canonical_class, s_value)
    for word, adjacent in zip(words, scheduler.map_jobs(neighbour_words, words, workers, chunksize=16)):
        for other in adjacent:
            if other not in surgery_graph.graph:
                logger.error(f"Surgery on {word} left the atlas of genus {genus}: {other}.")
                continue
            surgery_graph.graph.add_edge(word, other, kind=SURGERY_EDGE)
    logger.info(
        f"Built K_{genus}: {surgery_graph.graph.number_of_nodes()} node(s), "
        f"{surgery_graph.graph.number_of_edges()} edge(s)."
    )
    return surgery_graph


def build_hat_graph(genus: int, workers: int = 1) -> SurgeryGraph:
    hat_graph = SurgeryGraph()
    for level in range(1, genus + 1):
        hat_graph.graph = nx.compose(hat_graph.graph, build_surgery_graph(level, workers).graph)
    for level in range(1, genus):
        words = sorted(hat_graph.level_graph(level).nodes)
        for word, summed in zip(words, scheduler.map_jobs(sum_words, words, workers, chunksize=16)):
            for other in summed:
                hat_graph.graph.add_edge(word, other, kind=SUM_EDGE)
    logger.info(f"Built the hat graph up to genus {genus}: {hat_graph.graph.number_of_edges()} edge(s).")
    return hat_graph


# Metrics

def is_connected(surgery_graph: SurgeryGraph, genus: int = None) -> bool:
    graph = surgery_graph.graph if genus is None else surgery_graph.level_graph(genus)
    return graph.number_of_nodes() > 0 and nx.is_connected(graph)


def diameter(surgery_graph: SurgeryGraph, genus: int) -> int:
    graph = surgery_graph.level_graph(genus)
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        raise exceptions.Disconnected(nx.number_connected_components(graph))
    return nx.diameter(graph)


def distances(surgery_graph: SurgeryGraph, genus: int) -> typing.Dict[Word, typing.Dict[Word, int]]:
    return dict(nx.all_pairs_shortest_path_length(surgery_graph.level_graph(genus)))


def shortest_path(surgery_graph: SurgeryGraph, source: Word, target: Word) -> typing.List[Word]:
    try:
        return nx.shortest_path(surgery_graph.graph, source, target)
    except nx.NetworkXNoPath:
        raise exceptions.Disconnected(nx.number_connected_components(surgery_graph.graph))


# Export

def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def export(surgery_graph: SurgeryGraph, output_format: str) -> str:
    nodes = surgery_graph.nodes
    index = {word: position for position, word in enumerate(nodes)}
    if output_format == 'dot':
        lines = ['graph K {']
        for word in nodes:
            attributes = surgery_graph.graph.nodes[word]
            lines.append(
                f"    n{index[word]} [label={_quote(' '.join(map(str, word)))}, "
                f"genus={attributes['genus']}, S={attributes['S']}];"
            )
        for first, second, kind in surgery_graph.edges:
            lines.append(f"    n{index[first]} -- n{index[second]} [kind={kind}];")
        lines.append('}')
        return '\n'.join(lines) + '\n'
    if output_format == 'json':
        adjacency = {str(index[word]): sorted(index[other] for other in surgery_graph.graph[word]) for word in nodes}
        return json.dumps({
            'nodes': [
                {
                    'id': index[word],
                    'word': list(word),
                    'genus': surgery_graph.graph.nodes[word]['genus'],
                    'orbit_size': surgery_graph.graph.nodes[word]['orbit_size'],
                    'aut_size': surgery_graph.graph.nodes[word]['aut_size'],
                    'S': surgery_graph.graph.nodes[word]['S'],
                }
                for word in nodes
            ],
            'edges': [
                {'source': index[first], 'target': index[second], 'kind': kind}
                for first, second, kind in surgery_graph.edges
            ],
            'adjacency': adjacency,
        }, sort_keys=True)
    raise exceptions.MisformattedArgument(output_format, "dot or json")


def load_graph_json(text: str) -> SurgeryGraph:
    data = json.loads(text)
    surgery_graph = SurgeryGraph()
    words = {}
    for node in data['nodes']:
        words[node['id']] = tuple(node['word'])
        surgery_graph.add_class(
            CanonicalClass(tuple(node['word']), node['orbit_size'], node['aut_size'], node['genus']), node['S']
        )
    for edge in data['edges']:
        surgery_graph.graph.add_edge(words[edge['source']], words[edge['target']], kind=edge['kind'])
    return surgery_graph


def diameter_witness(surgery_graph: SurgeryGraph, genus: int) -> typing.List[Word]:
    """One geodesic between two classes at maximal distance, the first such pair in node order."""
    diameter(surgery_graph, genus)
    lengths = distances(surgery_graph, genus)
    order = [word for word in surgery_graph.nodes if word in lengths]
    source, target = max(
        ((first, second) for first in order for second in order),
        key=lambda pair: lengths[pair[0]][pair[1]],
    )
    return shortest_path(surgery_graph, source, target)
