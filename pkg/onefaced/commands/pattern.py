from onefaced import converter
from onefaced import utils
from onefaced.moves import census_counts
from onefaced.moves import curve_decomposition
from onefaced.moves import vertex_census
from onefaced.pattern import canonicalize
from . import _command

WORD_ARGUMENT = _command.argument('word', help="gluing word, e.g. \"1 2 -1 -2\"")


class Pattern(_command.Command):

    """Commands reading a single gluing word."""

    DISPLAY_NAME = "Gluing patterns"
    DISPLAY_SEQUENCE = 1

    @_command.command(
        name='validate',
        brief="Check that a word is a one-faced 4-valent gluing pattern",
        arguments=[WORD_ARGUMENT],
    )
    def validate(self, args):
        pattern = converter.parse_word(args.word)
        summary = {
            'valid': True,
            'word': list(pattern.word),
            'genus': pattern.genus,
            'edges': pattern.edge_count,
            'vertices': pattern.vertex_count,
        }
        if args.json:
            self.emit_json(summary)
        else:
            self.emit(f"valid: genus {pattern.genus}, E={pattern.edge_count}, V={pattern.vertex_count}")

    @_command.command(
        name='canon',
        brief="Print the canonical representative of a word",
        help="The canonical word is the lexicographically smallest relabeled rotation. With --reflect, "
             "words read backwards are also taken into account.",
        arguments=[WORD_ARGUMENT, _command.argument('--reflect', action='store_true', help="also quotient by reversal")],
    )
    def canon(self, args):
        canonical_class = canonicalize(converter.parse_word(args.word), reflect=args.reflect)
        if args.json:
            self.emit_json(converter.class_to_dict(canonical_class))
        else:
            self.emit(converter.word_to_text(canonical_class.canonical_word))

    @_command.command(
        name='info',
        brief="Describe curves and vertex types of a word",
        help="Positions are 0-based. The vertex census is taken relative to the given root (0 by default).",
        arguments=[WORD_ARGUMENT, _command.argument('--root', default='0', help="root position of the census")],
    )
    def info(self, args):
        pattern = converter.parse_word(args.word)
        root = converter.to_position(args.root, pattern)
        decomposition = curve_decomposition(pattern)
        census = vertex_census(pattern, root)
        counts = census_counts(census)
        trisections = sum(vertex.trisections for vertex in census)
        if args.json:
            self.emit_json({
                'word': list(pattern.word),
                'genus': pattern.genus,
                'S': decomposition.one_simple_count,
                'curves': [
                    {'edges': list(edges), 'length': length, 'self_intersections': crossings, 'one_simple': simple}
                    for edges, length, crossings, simple in zip(
                        decomposition.curves, decomposition.lengths,
                        decomposition.self_intersections, decomposition.one_simple,
                    )
                ],
                'root': root,
                'census': {vtype.value: count for vtype, count in counts.items()},
                'vertices': [
                    {'cycle': list(vertex.cycle), 'type': vertex.vtype.value, 'trisections': vertex.trisections}
                    for vertex in census
                ],
                'trisections': trisections,
            })
            return
        self.emit(utils.make_key_values([
            ('genus', pattern.genus),
            ('S', decomposition.one_simple_count),
            ('curves', decomposition.count),
            ('census', ', '.join(f"{count} {vtype.value}" for vtype, count in counts.items())),
            ('trisections', trisections),
        ]))
        self.emit('')
        self.emit(utils.make_table(
            [(list(vertex.cycle), vertex.vtype.value, vertex.trisections) for vertex in census],
            headers=['cycle', 'type', 'trisections'],
        ))


def setup(subparsers):
    return Pattern().register(subparsers)
