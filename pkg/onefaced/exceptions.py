import typing


class OneFacedError(Exception):
    """Base class of the domain errors surfaced by the command line with exit code 1."""


class Disconnected(OneFacedError):
    def __init__(self, component_count: int):
        self.component_count = component_count


class EmptyWord(OneFacedError):
    pass


class FormulaOverflow(OneFacedError):
    def __init__(self, genus: int, max_genus: int):
        self.genus = genus
        self.max_genus = max_genus


class GenusOutOfRange(OneFacedError):
    def __init__(self, genus: int, min_genus: int, max_genus: typing.Optional[int] = None):
        self.genus = genus
        self.min_genus = min_genus
        self.max_genus = max_genus


class MisformattedArgument(OneFacedError):
    def __init__(self, argument, correct_format: str):
        self.argument = argument
        self.correct_format = correct_format


class NoToralWitness(OneFacedError):
    def __init__(self, word: typing.Sequence[int]):
        self.word = tuple(word)


class NotABlock(OneFacedError):
    def __init__(self, position: int):
        self.position = position


class NotFourValent(OneFacedError):
    def __init__(self, cycle_length: int):
        self.cycle_length = cycle_length


class NotIntertwined(OneFacedError):
    def __init__(self, i: int, j: int):
        self.i = i
        self.j = j


class NotTyped(OneFacedError):
    def __init__(self, cycle: typing.Sequence[int], expected_type: str):
        self.cycle = tuple(cycle)
        self.expected_type = expected_type


class PositionOutOfRange(OneFacedError):
    def __init__(self, position: int, word_length: int):
        self.position = position
        self.word_length = word_length


class SameEdge(OneFacedError):
    def __init__(self, i: int, j: int):
        self.i = i
        self.j = j


class SignatureMismatch(OneFacedError):
    def __init__(self, genus: int):
        self.genus = genus


class UnpairedLabel(OneFacedError):
    def __init__(self, label: int):
        self.label = label


class VerificationFailed(OneFacedError):
    def __init__(self, failed_checks: typing.List[str]):
        self.failed_checks = failed_checks
