from onefaced import checker
from onefaced import exceptions
from onefaced import utils
from . import _command
from .atlas import GENUS_ARGUMENT


class Verify(_command.Command):

    """Acceptance checks over a whole genus."""

    DISPLAY_NAME = "Verification"
    DISPLAY_SEQUENCE = 6

    @_command.command(
        name='verify',
        brief="Run the acceptance checks that apply to a genus",
        arguments=[GENUS_ARGUMENT],
    )
    def verify(self, args):
        results = checker.verify(args.genus, self.workers(args))
        if args.json:
            self.emit_json([
                {'name': result.name, 'passed': result.passed, 'detail': result.detail} for result in results
            ])
        else:
            self.emit(utils.make_table(
                [(result.name, 'ok' if result.passed else 'FAILED', result.detail) for result in results],
                headers=['check', 'status', 'detail'],
            ))
        failed = [result.name for result in results if not result.passed]
        if failed:
            raise exceptions.VerificationFailed(failed)


def setup(subparsers):
    return Verify().register(subparsers)
