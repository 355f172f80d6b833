from onefaced import converter
from onefaced import reduction
from . import _command
from .pattern import WORD_ARGUMENT


class Reduction(_command.Command):

    """Reduction of a word to the torus, one summand at a time."""

    DISPLAY_NAME = "Reduction"
    DISPLAY_SEQUENCE = 3

    @_command.command(
        name='reduce',
        brief="Print the moves reducing a word to genus 1, one JSON object per line",
        help="Each line holds op, args, before and after. Every level ends with a split step; "
             "--json adds the level, the stages reached before the move and the route to each line.",
        arguments=[WORD_ARGUMENT],
    )
    def reduce(self, args):
        pattern = converter.parse_word(args.word)
        for level, (_, _, trace) in enumerate(reduction.summand_path(pattern)):
            stages = {}
            for stage, index in trace.stage_markers.items():
                stages.setdefault(index, []).append(stage)
            for index, step in enumerate(trace.steps):
                line = step.to_dict()
                if args.json:
                    line.update(level=level, genus=pattern.genus - level, route=trace.route, stages=stages.get(index, []))
                self.emit_json(line)


def setup(subparsers):
    return Reduction().register(subparsers)
