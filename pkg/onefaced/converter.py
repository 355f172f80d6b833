import json
import re
import typing

from . import exceptions
from . import pattern as pattern_module

WORD_FORMAT = "whitespace or comma separated nonzero integers, e.g. \"1 2 -1 -2\""
TOKEN_SEPARATOR = re.compile(r'[\s,]+')


# Gluing words

def to_labels(text: str) -> typing.List[int]:
    tokens = [token for token in TOKEN_SEPARATOR.split(text.strip().strip('[]')) if token]
    if not tokens:
        raise exceptions.EmptyWord()
    try:
        labels = [int(token) for token in tokens]
    except ValueError:
        raise exceptions.MisformattedArgument(text, WORD_FORMAT)
    if 0 in labels:
        raise exceptions.MisformattedArgument(text, WORD_FORMAT)
    return labels


def parse_word(text: str) -> pattern_module.GluingPattern:
    return pattern_module.GluingPattern(to_labels(text))


def serialize(pattern: pattern_module.GluingPattern) -> str:
    return word_to_text(pattern.word)


def word_to_text(word: typing.Sequence[int]) -> str:
    return ' '.join(str(label) for label in word)


def to_position(text: str, pattern: pattern_module.GluingPattern) -> int:
    try:
        position = int(text)
    except ValueError:
        raise exceptions.MisformattedArgument(text, "0-based position in the word")
    return pattern.check_position(position)


# JSON encodings

def class_to_dict(canonical_class: pattern_module.CanonicalClass) -> dict:
    return {
        'word': list(canonical_class.canonical_word),
        'orbit_size': canonical_class.orbit_size,
        'aut_size': canonical_class.aut_size,
        'genus': canonical_class.genus,
    }


def class_from_dict(data: dict) -> pattern_module.CanonicalClass:
    return pattern_module.CanonicalClass(
        canonical_word=tuple(data['word']),
        orbit_size=data['orbit_size'],
        aut_size=data['aut_size'],
        genus=data['genus'],
    )


def to_json(data) -> str:
    return json.dumps(data, sort_keys=True)
