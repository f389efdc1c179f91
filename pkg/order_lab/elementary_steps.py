from typing import List, Tuple

from errors import InvalidStepError
from multiset_core.helpers import check_k
from multiset_core.multiset_types import DegreeSequence
from order_lab.step_types import ElementaryStep, StepKind

def apply_decrement(E: DegreeSequence, x: int) -> DegreeSequence:
    """
    Replace one copy of x by x-1. On profiles this subtracts 1_x.
    """

    if x <= 0:
        raise InvalidStepError(f'{x}-decrement needs a positive x')
    if x not in E:
        raise InvalidStepError(f'{x}-decrement needs {x} in {E}')
    return E.replace_one(x, x - 1)

def apply_increment(E: DegreeSequence, x: int) -> DegreeSequence:
    """
    Replace one copy of x by x+1. On profiles this adds 1_{x+1}.
    """

    if x < 0:
        raise InvalidStepError(f'{x}-increment needs a nonnegative x')
    if x not in E:
        raise InvalidStepError(f'{x}-increment needs {x} in {E}')
    return E.replace_one(x, x + 1)

def addition_step(E: DegreeSequence, x: int, y: int) -> DegreeSequence:
    if x < 1 or y < 1:
        raise InvalidStepError(f'addition step needs positive x and y, got x={x}, y={y}')
    if E.is_empty:
        raise InvalidStepError('addition step needs a nonempty multiset')
    if x > y:
        raise InvalidStepError(f'addition step needs x <= y, got x={x}, y={y}')
    if y > E.max_value + 1:
        raise InvalidStepError(f'addition step needs y <= max(E)+1 = {E.max_value + 1}, got y={y}')
    if x - 1 not in E:
        raise InvalidStepError(f'addition step needs x-1 = {x - 1} in {E}')

    first = E.replace_one(x - 1, x)
    if y - 1 not in first:
        raise InvalidStepError(f'addition step needs y-1 = {y - 1} after the first increment')
    return first.replace_one(y - 1, y)

def is_transfer_pair(x: int, y: int, k: int) -> bool:
    return x > max(k, y) or x < y <= k

def transfer_step(E: DegreeSequence, x: int, y: int, k: int) -> DegreeSequence:
    check_k(k)
    if x < 1 or y < 1:
        raise InvalidStepError(f'transfer step needs positive x and y, got x={x}, y={y}')
    if not is_transfer_pair(x, y, k):
        raise InvalidStepError(
            f'transfer step needs x > max(k,y) or x < y <= k, got x={x}, y={y}, k={k}')
    if x not in E:
        raise InvalidStepError(f'transfer step needs x = {x} in {E}')

    first = E.replace_one(x, x - 1)
    if y - 1 not in first:
        raise InvalidStepError(f'transfer step needs y-1 = {y - 1} after the decrement')
    return first.replace_one(y - 1, y)

def enumerate_steps(E: DegreeSequence, k: int, include_additions: bool = True) -> List[Tuple[ElementaryStep, DegreeSequence]]:
    """
    Every elementary step applicable to E, paired with its result.
    """

    check_k(k)
    if E.is_empty:
        return []

    top = E.max_value
    present = sorted(E.counts)
    steps = []

    if include_additions:
        for x in [value + 1 for value in present]:
            first = E.replace_one(x - 1, x)
            for y in range(x, top + 2):
                if y - 1 in first:
                    steps.append((ElementaryStep(StepKind.ADDITION, x, y), first.replace_one(y - 1, y)))

    for x in present:
        if x == 0:
            continue
        first = E.replace_one(x, x - 1)
        for y in range(1, top + 2):
            if is_transfer_pair(x, y, k) and y - 1 in first:
                steps.append((ElementaryStep(StepKind.TRANSFER, x, y), first.replace_one(y - 1, y)))

    return steps
