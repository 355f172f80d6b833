import dataclasses
import typing


@dataclasses.dataclass(frozen=True)
class TraceStep:
    op: str  # surgery | simplify | split | sum
    args: typing.Tuple[int, ...]
    before: typing.Tuple[int, ...]
    after: typing.Tuple[int, ...]
    s_before: int
    s_after: int

    def to_dict(self) -> dict:
        return {'op': self.op, 'args': list(self.args), 'before': list(self.before), 'after': list(self.after)}


@dataclasses.dataclass
class ReductionTrace:

    """Ordered record of the moves applied to a pattern, with the indices where each stage was reached."""

    STAGES = ('non_simplifiable', 'almost_toral', 'toral')
    SURGERY_OPS = ('surgery', 'simplify')

    steps: typing.List[TraceStep] = dataclasses.field(default_factory=list)
    stage_markers: typing.Dict[str, int] = dataclasses.field(default_factory=dict)
    route: str = 'staged'

    def __len__(self):
        return len(self.steps)

    @property
    def surgery_count(self) -> int:
        return sum(1 for step in self.steps if step.op in self.SURGERY_OPS)

    def append(self, step: TraceStep) -> None:
        self.steps.append(step)

    def extend(self, other: 'ReductionTrace') -> None:
        offset = len(self.steps)
        for stage, index in other.stage_markers.items():
            self.stage_markers.setdefault(stage, offset + index)
        self.steps.extend(other.steps)

    def mark(self, stage: str) -> None:
        self.stage_markers.setdefault(stage, len(self.steps))

    def to_dicts(self) -> typing.List[dict]:
        return [step.to_dict() for step in self.steps]
