import logging
from typing import Iterable, Iterator, List, Tuple

from multiset_core.helpers import is_graphical, is_trivial
from multiset_core.multiset_types import DegreeSequence
from omega_engine.omega import b, trace_omega
from order_lab.elementary_steps import enumerate_steps
from order_lab.partial_order import precedes
from order_lab.pseudo_reductions import pseudo_reductions

logger = logging.getLogger(__name__)

def graphical_sequences(max_order: int, max_sum: int, min_order: int = 1) -> Iterator[DegreeSequence]:
    """
    Every graphical multiset with min_order <= order <= max_order and sum <= max_sum.
    """

    def extend(prefix: List[int], remaining_slots: int, floor: int, budget: int):
        if remaining_slots == 0:
            yield prefix
            return
        # nondecreasing fill: every later slot is at least `value`
        for value in range(floor, budget // remaining_slots + 1):
            yield from extend(prefix + [value], remaining_slots - 1, value, budget - value)

    for order in range(min_order, max_order + 1):
        for values in extend([], order, 0, max_sum):
            D = DegreeSequence.from_values(values)
            if is_graphical(D):
                yield D

class LemmaSuite:
    '''
    Exhaustive checks of the order-theoretic facts behind the bound, run over
    every graphical sequence of bounded order and sum and every k in `ks`.
    '''
    STEP_PRESERVATION = 'step preservation'
    B_MONOTONICITY = 'b monotonicity'
    OMEGA_PROPERTIES = 'omega properties'
    DEGENERATE_OMEGA = 'degenerate omega'
    OMEGA_BELOW_PSEUDO_REDUCTIONS = 'omega below pseudo-reductions'
    OMEGA_STEP_REFINEMENT = 'omega step refinement'
    CATEGORIES = [STEP_PRESERVATION, B_MONOTONICITY, OMEGA_PROPERTIES, DEGENERATE_OMEGA,
                  OMEGA_BELOW_PSEUDO_REDUCTIONS, OMEGA_STEP_REFINEMENT]

    def __init__(self, max_order: int = 6, max_sum: int = 14, ks: Iterable[int] = (1, 2, 3)):
        """Initializes a LemmaSuite object

        Args:
            max_order (int): largest order in the corpus
            max_sum (int): largest sum in the corpus
            ks (iterable): values of k to check
        """
        self.max_order = max_order
        self.max_sum = max_sum
        self.ks = list(ks)
        self.corpus = list(graphical_sequences(max_order, max_sum))
        self.results = {}

    def _record(self, category: str, ok: bool, witness):
        checked, violations = self.results.get(category, (0, []))
        if not ok:
            violations.append(witness)
        self.results[category] = (checked + 1, violations)

    def _check_steps(self, E: DegreeSequence, k: int, steps: List[Tuple]):
        """
        Step preservation on nontrivial E, and b monotonicity on every graphical step result.
        """

        nontrivial = not is_trivial(E, k)
        b_E = b(E, k).b
        slack_E = E.total - 2 * E.max_value

        for step, D in steps:
            if nontrivial:
                ok = is_graphical(D) and D.max_value >= k and D.total - 2 * D.max_value >= slack_E
                self._record(self.STEP_PRESERVATION, ok, (k, E, str(step), D))
            if is_graphical(D):
                self._record(self.B_MONOTONICITY, b(D, k).b <= b_E, (k, E, str(step), D))

    def _check_omega(self, E: DegreeSequence, k: int, steps: List[Tuple]):
        trace = trace_omega(E, k)
        reductions = pseudo_reductions(E, k)

        if trace.degenerate:
            ok = all(is_trivial(R, k) for R in reductions)
            self._record(self.DEGENERATE_OMEGA, ok, (k, E))
            return

        W = trace.omega
        ok = (is_graphical(W) and W.order == E.order - 1
              and W.total == E.total - 2 * E.max_value and W.max_value >= k)
        self._record(self.OMEGA_PROPERTIES, ok, (k, E, W))

        for R in reductions:
            if not is_trivial(R, k):
                self._record(self.OMEGA_BELOW_PSEUDO_REDUCTIONS, precedes(W, R, k), (k, E, R))

        one_step = {result for _, result in enumerate_steps(W, k)}
        for step, D in steps:
            W_D = trace_omega(D, k).omega
            self._record(self.OMEGA_STEP_REFINEMENT, W_D == W or W_D in one_step, (k, E, str(step), D))

    def evaluate(self) -> dict:
        """
        Returns dict mapping each category to (number of checks, list of violations)
        """

        self.results = {category: (0, []) for category in self.CATEGORIES}
        for k in self.ks:
            for E in self.corpus:
                steps = enumerate_steps(E, k)
                self._check_steps(E, k, steps)
                if not is_trivial(E, k):
                    self._check_omega(E, k, steps)
            logger.debug('finished k=%d over %d sequences', k, len(self.corpus))
        return self.results

    def print_report(self):
        result = '=' * 80 + '\n'
        result += f'Lemma suite (order <= {self.max_order}, sum <= {self.max_sum}, k in {self.ks}):\n'
        for category in self.CATEGORIES:
            checked, violations = self.results.get(category, (0, []))
            result += f'\tcategory: {category}\n'
            result += f'\tchecks: {checked}\n'
            result += f'\tviolations: {len(violations)}\n'
            for witness in violations[:5]:
                result += f'\t\t{witness}\n'
            result += '\n'
        result += '=' * 80 + '\n'
        print(result)
