import logging
from typing import Dict, List

from config import OMEGA_MAX_SUM
from errors import EmptySequenceError, NotGraphicalError, ResourceLimitError, TrivialSequenceError
from multiset_core.helpers import check_k, is_graphical, is_trivial
from multiset_core.multiset_types import DegreeSequence
from omega_engine.omega_types import BTrace, DecrementTrace

logger = logging.getLogger(__name__)

class DecrementRunner:
    '''
    Applies the decrement schedule to a value -> multiplicity table in place.
    While the maximum exceeds k the maximum is decremented, otherwise the
    smallest positive element is. Both choices are value-determined, so the
    schedule has no ties to break.

    Fields:
        cells: cells[v] is the multiplicity of v.
        top: Current maximum (0 once everything is exhausted).
        low: Every value in [1, low) currently has multiplicity 0.
    '''
    def __init__(self, counts: Dict[int, int], k: int):
        self.k = k
        self.top = max(counts) if counts else 0
        self.cells = [0] * (self.top + 1)
        for value, multiplicity in counts.items():
            self.cells[value] = multiplicity
        self.low = 1

    def step(self) -> int:
        if self.top > self.k:
            x = self.top
        else:
            while self.low <= self.top and self.cells[self.low] == 0:
                self.low += 1
            if self.low > self.top:
                raise RuntimeError('decrement requested with no positive element left')
            x = self.low

        self.cells[x] -= 1
        self.cells[x - 1] += 1
        if 1 <= x - 1 < self.low:
            self.low = x - 1
        while self.top > 0 and self.cells[self.top] == 0:
            self.top -= 1
        return x

    def snapshot(self) -> DegreeSequence:
        return DegreeSequence({value: mult for value, mult in enumerate(self.cells) if mult})

def _is_degenerate(A0: DegreeSequence, m: int, k: int) -> bool:
    # same precedence as the definition: both tests happen before any decrement
    if A0.is_empty:
        return True
    return A0.total < m + 2 * k or A0.max_value < k

def _check_input(D: DegreeSequence, k: int):
    check_k(k)
    if D.is_empty:
        raise EmptySequenceError('Omega is undefined on the empty sequence')
    if not is_graphical(D):
        raise NotGraphicalError(f'{D} is not graphical (sum must be even and at least twice the maximum)')

def trace_omega(D: DegreeSequence, k: int, full: bool = False) -> DecrementTrace:
    """
    Run the Omega construction on a nonempty graphical D. With full=False
    only the first max(D) decrements are performed, which is all Omega needs.
    Sums above KINDEP_OMEGA_MAX_SUM raise ResourceLimitError.
    """

    _check_input(D, k)
    if D.total > OMEGA_MAX_SUM:
        raise ResourceLimitError(f'Omega is limited to sums <= {OMEGA_MAX_SUM}, got {D.total}')

    m = D.max_value
    A0 = D.without_max()
    s = A0.total

    if _is_degenerate(A0, m, k):
        return DecrementTrace(k, D, m, A0, s, [], DegreeSequence.zeros(D.order - 1), True)

    runner = DecrementRunner(A0.counts, k)
    steps = s if full else m
    a = []
    omega_value = None
    for i in range(1, steps + 1):
        a.append(runner.step())
        if i == m:
            omega_value = runner.snapshot()
    return DecrementTrace(k, D, m, A0, s, a, omega_value, False)

def decrement_sequence(D: DegreeSequence, k: int) -> DecrementTrace:
    """
    Full decrement sequence (a_1, ..., a_s) of a graphical, nontrivial D,
    together with Omega(D).
    """

    _check_input(D, k)
    if is_trivial(D, k):
        raise TrivialSequenceError(f'{D} is trivial for k={k} (max {D.max_value} < {k})')
    return trace_omega(D, k, full=True)

def omega(D: DegreeSequence, k: int) -> DegreeSequence:
    return trace_omega(D, k).omega

def b(D: DegreeSequence, k: int) -> BTrace:
    """
    Iterate Omega until the first trivial term. b = |D| - p, where p is the
    number of applications.
    """

    check_k(k)
    if not is_graphical(D):
        raise NotGraphicalError(f'{D} is not graphical (sum must be even and at least twice the maximum)')

    chain: List[DegreeSequence] = [D]
    steps: List[DecrementTrace] = []
    current = D
    while not is_trivial(current, k):
        step = trace_omega(current, k)
        steps.append(step)
        current = step.omega
        chain.append(current)

    result = BTrace(k, chain, steps)
    logger.debug('b_%d(%s) = %d after %d Omega steps', k, D, result.b, result.p)
    return result
