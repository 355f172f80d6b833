from onefaced import atlas
from onefaced import converter
from onefaced import families
from onefaced import utils
from . import _command

GENUS_ARGUMENT = _command.argument('--genus', type=int, required=True)


class Atlas(_command.Command):

    """Exhaustive enumeration and named families."""

    DISPLAY_NAME = "Atlas"
    DISPLAY_SEQUENCE = 4

    @_command.command(
        name='enumerate',
        brief="Enumerate the one-faced collections of a genus",
        help="Lists one record per class, or counts rooted patterns with --rooted. Genera above "
             "ONEFACED_MAX_GENUS need --allow-large.",
        arguments=[
            GENUS_ARGUMENT,
            _command.argument('--rooted', action='store_true', help="count rooted patterns instead of classes"),
            _command.argument('--words', action='store_true', help="print one word per line"),
            _command.argument('--allow-large', action='store_true', help="lift the genus cap"),
        ],
    )
    def enumerate(self, args):
        workers = self.workers(args)
        if args.rooted:
            patterns = list(atlas.enumerate_rooted(args.genus, workers, args.allow_large))
            if args.words:
                for pattern in patterns:
                    self.emit(converter.serialize(pattern))
            elif args.json:
                self.emit_json({'genus': args.genus, 'count': len(patterns)})
            else:
                self.emit(f"{len(patterns)} rooted pattern(s) of genus {args.genus}")
            return
        records = atlas.enumerate_classes(args.genus, workers, args.allow_large)
        if args.words:
            for record in records:
                self.emit(converter.word_to_text(record.canonical_class.canonical_word))
        elif args.json:
            self.emit_json([record.to_dict() for record in records])
        else:
            self.emit(utils.make_table(
                [
                    (
                        converter.word_to_text(record.canonical_class.canonical_word),
                        record.canonical_class.orbit_size, record.s, record.curve_count,
                        'yes' if record.non_simplifiable else 'no',
                    )
                    for record in records
                ],
                headers=['word', 'orbit', 'S', 'curves', 'non-simplifiable'],
            ))

    @_command.command(
        name='necklace',
        brief="Build the necklace of a genus",
        arguments=[GENUS_ARGUMENT],
    )
    def necklace(self, args):
        self._emit_pattern(families.necklace(args.genus), args)

    @_command.command(
        name='chain',
        brief="Build the genus-2g pattern X or Y used for the distance lower bound",
        help="X glues g tori on the genus-g necklace, Y glues g-1 tori on the genus-(g+1) necklace.",
        arguments=[GENUS_ARGUMENT, _command.argument('--kind', choices=['x', 'y'], default='x')],
    )
    def chain(self, args):
        build = families.chain_x if args.kind == 'x' else families.chain_y
        self._emit_pattern(build(args.genus), args)

    def _emit_pattern(self, pattern, args):
        signature = families.necklace_signature(pattern)
        if args.json:
            self.emit_json({'word': list(pattern.word), 'genus': pattern.genus, 'S': signature.s,
                            'curve_count': signature.curve_count})
        else:
            self.emit(converter.serialize(pattern))


def setup(subparsers):
    return Atlas().register(subparsers)
