from onefaced import converter
from onefaced import exceptions
from onefaced import reduction
from onefaced.moves import connected_sum
from onefaced.moves import find_torus_blocks
from onefaced.moves import simplify_cascade
from onefaced.moves import split_torus_summand
from onefaced.moves import surgery_images
from . import _command
from .pattern import WORD_ARGUMENT


class Moves(_command.Command):

    """Commands applying one move to a gluing word. Positions are 0-based."""

    DISPLAY_NAME = "Moves"
    DISPLAY_SEQUENCE = 2

    @_command.command(
        name='surgery',
        brief="Apply the surgery at two intertwined positions",
        arguments=[WORD_ARGUMENT, _command.argument('i'), _command.argument('j')],
    )
    def surgery(self, args):
        pattern = converter.parse_word(args.word)
        i, j = converter.to_position(args.i, pattern), converter.to_position(args.j, pattern)
        result, image_i, image_j = surgery_images(pattern, i, j)
        if args.json:
            self.emit_json({'word': list(result.word), 'images': [image_i, image_j]})
        else:
            self.emit(converter.serialize(result))

    @_command.command(
        name='simplify',
        brief="Apply simplifications until none is left",
        arguments=[WORD_ARGUMENT],
    )
    def simplify(self, args):
        result, trace = simplify_cascade(converter.parse_word(args.word))
        if args.json:
            self.emit_json({'word': list(result.word), 'steps': trace.to_dicts()})
            return
        for step in trace.steps:
            self.emit(f"simplify {step.args[0]} {step.args[1]}: S {step.s_before} -> {step.s_after}")
        self.emit(converter.serialize(result))

    @_command.command(
        name='sum',
        brief="Connected sum of two words at marked positions",
        arguments=[
            _command.argument('first'), _command.argument('i'),
            _command.argument('second'), _command.argument('j'),
        ],
    )
    def sum(self, args):
        first, second = converter.parse_word(args.first), converter.parse_word(args.second)
        result = connected_sum(first, converter.to_position(args.i, first), second, converter.to_position(args.j, second))
        if args.json:
            self.emit_json({'word': list(result.word), 'genus': result.genus})
        else:
            self.emit(converter.serialize(result))

    @_command.command(
        name='split',
        brief="Split a torus summand off a word",
        help="Splits at the given torus block, or at the first one found. Words without a torus block "
             "are first reduced until one appears.",
        arguments=[WORD_ARGUMENT, _command.argument('--block', help="position of the 6-letter torus block")],
    )
    def split(self, args):
        pattern = converter.parse_word(args.word)
        surgeries = 0
        if args.block is not None:
            block = converter.to_position(args.block, pattern)
            summand, marked = split_torus_summand(pattern, block)
        elif find_torus_blocks(pattern):
            block = find_torus_blocks(pattern)[0]
            summand, marked = split_torus_summand(pattern, block)
        elif pattern.genus < 2:
            raise exceptions.GenusOutOfRange(pattern.genus, 2)
        else:
            summand, marked, trace = reduction.extract_torus_summand(pattern)
            block, surgeries = trace.steps[-1].args[0], trace.surgery_count
        if args.json:
            self.emit_json({'word': list(summand.word), 'marked': marked, 'block': block, 'surgeries': surgeries})
        else:
            self.emit(f"{converter.serialize(summand)} (marked {marked})")


def setup(subparsers):
    return Moves().register(subparsers)
