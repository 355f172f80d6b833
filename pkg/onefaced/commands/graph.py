from onefaced import converter
from onefaced import graphs
from . import _command
from .atlas import GENUS_ARGUMENT


class Graph(_command.Command):

    """Surgery graphs of the classes of a genus."""

    DISPLAY_NAME = "Surgery graphs"
    DISPLAY_SEQUENCE = 5

    @_command.command(
        name='graph',
        brief="Export the surgery graph of a genus as DOT (default) or JSON",
        help="With --hat, all genera up to the given one are included and joined by torus sums.",
        arguments=[
            GENUS_ARGUMENT,
            _command.argument('--hat', action='store_true', help="include lower genera and sum edges"),
            _command.argument('--dot', action='store_true', help="print DOT (default)"),
        ],
    )
    def graph(self, args):
        build = graphs.build_hat_graph if args.hat else graphs.build_surgery_graph
        surgery_graph = build(args.genus, self.workers(args))
        self.emit(graphs.export(surgery_graph, 'json' if args.json else 'dot').rstrip('\n'))

    @_command.command(
        name='diameter',
        brief="Print the diameter of the surgery graph of a genus with one geodesic",
        arguments=[GENUS_ARGUMENT],
    )
    def diameter(self, args):
        surgery_graph = graphs.build_surgery_graph(args.genus, self.workers(args))
        path = graphs.diameter_witness(surgery_graph, args.genus)
        if args.json:
            self.emit_json({
                'genus': args.genus,
                'diameter': len(path) - 1,
                'nodes': len(surgery_graph),
                'path': [list(word) for word in path],
            })
            return
        self.emit(f"diameter {len(path) - 1} over {len(surgery_graph)} class(es)")
        for word in path:
            self.emit(f"  {converter.word_to_text(word)}")


def setup(subparsers):
    return Graph().register(subparsers)
