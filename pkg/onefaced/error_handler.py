import json
import sys

from . import exceptions
from . import logger

DOMAIN_ERROR_EXIT_CODE = 1
UNHANDLED_ERROR_EXIT_CODE = 1  # Same code as domain errors, the JSON report tells them apart


def handle(error: Exception) -> int:
    """Report the error on stderr as one JSON object and return the process exit code."""
    exit_code = DOMAIN_ERROR_EXIT_CODE

    # Pattern construction

    if isinstance(error, exceptions.EmptyWord):
        message = "The word is empty."
    elif isinstance(error, exceptions.MisformattedArgument):
        message = f"Misformatted argument `{error.argument}`, expected format: {error.correct_format}."
    elif isinstance(error, exceptions.NotFourValent):
        message = f"Found a vertex cycle of length {error.cycle_length}, all vertices must be 4-valent."
    elif isinstance(error, exceptions.UnpairedLabel):
        message = f"Label {error.label} does not occur exactly once with each sign."

    # Moves

    elif isinstance(error, exceptions.PositionOutOfRange):
        message = f"Position {error.position} is outside the word (0..{error.word_length - 1})."
    elif isinstance(error, exceptions.SameEdge):
        message = f"Positions {error.i} and {error.j} are two sides of the same edge."
    elif isinstance(error, exceptions.NotIntertwined):
        message = f"Positions {error.i} and {error.j} are not intertwined, surgery would split the face."
    elif isinstance(error, exceptions.NotABlock):
        message = f"No framed torus block starts at position {error.position}."

    # Reduction

    elif isinstance(error, exceptions.NotTyped):
        message = f"Vertex {list(error.cycle)} is not of {error.expected_type}."
    elif isinstance(error, exceptions.NoToralWitness):
        message = f"No toral pattern or torus block reached from {' '.join(map(str, error.word))}."
        logger.error(f"Reduction guarantee violated on {error.word}.")

    # Atlas and graphs

    elif isinstance(error, exceptions.GenusOutOfRange):
        bound = f"{error.min_genus}..{error.max_genus}" if error.max_genus else f">= {error.min_genus}"
        message = f"Genus {error.genus} is outside the supported range ({bound})."
    elif isinstance(error, exceptions.FormulaOverflow):
        message = f"Genus {error.genus} exceeds the counting range (max {error.max_genus})."
    elif isinstance(error, exceptions.Disconnected):
        message = f"The graph level has {error.component_count} connected components."
    elif isinstance(error, exceptions.SignatureMismatch):
        message = f"No gluing of genus {error.genus} reaches the requested 1-simple curves."
    elif isinstance(error, exceptions.VerificationFailed):
        message = f"Failed check(s): {', '.join(error.failed_checks)}."

    # Unhandled exceptions

    else:
        message = f"Unexpected error: {error}"
        exit_code = UNHANDLED_ERROR_EXIT_CODE
        logger.error(error, exc_info=True)

    sys.stderr.write(json.dumps({'error': type(error).__name__, 'message': message}) + '\n')
    return exit_code
