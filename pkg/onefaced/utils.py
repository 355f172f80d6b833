import typing


# Cyclic arithmetic

def in_open_arc(start: int, end: int, position: int, length: int) -> bool:
    """Return True if `position` lies strictly between `start` and `end` walking forward on the cycle."""
    return 0 < (position - start) % length < (end - start) % length


def open_arc(start: int, end: int, length: int) -> typing.List[int]:
    """List the positions strictly between `start` and `end` walking forward on the cycle."""
    return [(start + step) % length for step in range(1, (end - start) % length)]


def rotation(start: int, length: int) -> typing.List[int]:
    return [(start + step) % length for step in range(length)]


def relabel_by_first_appearance(labels: typing.Sequence[int]) -> typing.Tuple[int, ...]:
    """
    Rename labels in order of first appearance, the first occurrence positive and its partner negative.
    :param labels: A sequence in which every absolute value occurs exactly twice
    :return: The normalized sequence
    """
    renaming = {}
    normalized = []
    for label in labels:
        key = abs(label)
        if key in renaming:
            normalized.append(-renaming[key])
        else:
            renaming[key] = len(renaming) + 1
            normalized.append(renaming[key])
    return tuple(normalized)


# Text output

def make_table(rows: typing.Sequence[typing.Sequence], headers: typing.Sequence[str]) -> str:
    """Render rows as a left-aligned plain-text table."""
    cells = [[str(header) for header in headers]] + [[str(cell) for cell in row] for row in rows]
    widths = [max(len(row[column]) for row in cells) for column in range(len(headers))]
    lines = ['  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, '  '.join('-' * width for width in widths))
    return '\n'.join(lines)


def make_key_values(pairs: typing.Sequence[typing.Tuple[str, typing.Any]]) -> str:
    width = max(len(key) for key, _ in pairs)
    return '\n'.join(f"{key.ljust(width)}  {value}" for key, value in pairs)
