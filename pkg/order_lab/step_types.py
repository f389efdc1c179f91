from dataclasses import dataclass
from enum import Enum

from errors import InvalidStepError

class StepKind(Enum):
    ADDITION = 1
    TRANSFER = 2

@dataclass(frozen=True)
class ElementaryStep:
    '''
    An elementary step on a multiset.

    Fields:
        kind: ADDITION ((x-1)-increment then (y-1)-increment, x <= y <= max(E)+1)
            or TRANSFER (x-decrement then (y-1)-increment, x > max(k,y) or x < y <= k).
        x: Positive integer.
        y: Positive integer.
    '''
    kind: StepKind
    x: int
    y: int

    def __post_init__(self):
        if self.x < 1 or self.y < 1:
            raise InvalidStepError(f'step parameters must be positive, got x={self.x}, y={self.y}')

    def apply(self, E, k: int):
        # local import: elementary_steps imports this module
        from order_lab.elementary_steps import addition_step, transfer_step

        if self.kind == StepKind.ADDITION:
            return addition_step(E, self.x, self.y)
        return transfer_step(E, self.x, self.y, k)

    def to_json(self) -> dict:
        return {'kind': self.kind.name.lower(), 'x': self.x, 'y': self.y}

    def __str__(self):
        return f'({self.x},{self.y})-{self.kind.name.lower()}'
