import argparse
import sys
import typing

from onefaced import config
from onefaced import converter


def argument(*flags: str, **kwargs) -> typing.Tuple[typing.Tuple[str, ...], dict]:
    return flags, kwargs


def command(name: str, brief: str, help: str = None, arguments: typing.Sequence = ()):
    """Mark a group method as a subcommand handler taking the parsed namespace."""

    def decorator(handler):
        handler.command_spec = {'name': name, 'brief': brief, 'help': help or brief, 'arguments': arguments}
        return handler

    return decorator


class Command:

    """Superclass of command groups for inherited constants."""

    DISPLAY_NAME = "Undefined display name"
    DISPLAY_SEQUENCE = 99

    def __init__(self):
        self.names = []

    def register(self, subparsers: argparse._SubParsersAction) -> 'Command':
        for attribute in vars(type(self)).values():
            spec = getattr(attribute, 'command_spec', None)
            if spec is None:
                continue
            parser = subparsers.add_parser(spec['name'], help=spec['brief'], description=spec['help'])
            for flags, kwargs in spec['arguments']:
                parser.add_argument(*flags, **kwargs)
            parser.add_argument('--json', action='store_true', help="print JSON instead of text")
            parser.set_defaults(handler=getattr(self, attribute.__name__))
            self.names.append(spec['name'])
        return self

    @staticmethod
    def workers(args: argparse.Namespace) -> int:
        return config.get_threads(getattr(args, 'threads', None))

    @staticmethod
    def emit(text: str) -> None:
        sys.stdout.write(text + '\n')

    @staticmethod
    def emit_json(data) -> None:
        sys.stdout.write(converter.to_json(data) + '\n')
