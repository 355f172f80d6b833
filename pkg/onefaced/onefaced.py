import argparse
import importlib
import typing

from . import error_handler
from . import logger

__version__ = '1.0.0'

COMMANDS = [
    'onefaced.commands.pattern',
    'onefaced.commands.moves',
    'onefaced.commands.reduction',
    'onefaced.commands.atlas',
    'onefaced.commands.graph',
    'onefaced.commands.verify',
]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='onefaced',
        description="Gluing patterns of one-faced curve collections: moves, reduction, atlases and surgery graphs. "
                    "Positions in words are 0-based.",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--threads', type=int, default=None, help="worker cap (overrides ONEFACED_THREADS)")
    subparsers = parser.add_subparsers(dest='command', metavar='command', required=True)
    groups = []
    for module_path in COMMANDS:
        module = importlib.import_module(module_path)
        groups.append(module.setup(subparsers))
        logger.debug(f"Loaded command group '{module_path.split('.')[-1]}'.")
    parser.epilog = '\n'.join(
        f"{group.DISPLAY_NAME}: {', '.join(group.names)}"
        for group in sorted(groups, key=lambda group: group.DISPLAY_SEQUENCE)
    )
    parser.formatter_class = argparse.RawDescriptionHelpFormatter
    return parser


def run(argv: typing.Sequence[str] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:  # Usage errors and --help
        return exit_request.code if isinstance(exit_request.code, int) else 0
    try:
        args.handler(args)
    except Exception as error:  # Reported on stderr, exit code 1
        return error_handler.handle(error)
    return 0
