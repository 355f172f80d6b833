from __future__ import annotations

import json

import pytest

from onefaced import converter
from onefaced import error_handler
from onefaced import exceptions


@pytest.mark.parametrize(
    'error',
    [
        exceptions.EmptyWord(),
        exceptions.NotIntertwined(0, 1),
        exceptions.GenusOutOfRange(9, 1, 3),
        exceptions.GenusOutOfRange(1, 2),
        exceptions.FormulaOverflow(7, 6),
        exceptions.VerificationFailed(['diameter']),
        exceptions.NoToralWitness((1, 2, -1, -2)),
    ],
)
def test_domain_errors_exit_with_1(error: exceptions.OneFacedError, capsys: pytest.CaptureFixture) -> None:
    assert error_handler.handle(error) == error_handler.DOMAIN_ERROR_EXIT_CODE
    report = json.loads(capsys.readouterr().err.splitlines()[-1])
    assert report['error'] == type(error).__name__
    assert report['message']


def test_unexpected_errors_exit_with_1(capsys: pytest.CaptureFixture) -> None:
    assert error_handler.handle(ZeroDivisionError("boom")) == 1
    report = json.loads(capsys.readouterr().err.splitlines()[-1])
    assert report["error"] == "ZeroDivisionError"
    assert report["message"].startswith("Unexpected error")


def test_misformatted_word_message(capsys: pytest.CaptureFixture) -> None:
    with pytest.raises(exceptions.MisformattedArgument) as error:
        converter.to_labels("1 two -1")
    error_handler.handle(error.value)
    assert converter.WORD_FORMAT in json.loads(capsys.readouterr().err.splitlines()[-1])['message']
