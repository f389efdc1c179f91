import logging
from collections import deque

from config import PRECEDES_MAX_ORDER, PRECEDES_MAX_SUM
from errors import InputError, ResourceLimitError
from multiset_core.helpers import check_k
from multiset_core.multiset_types import DegreeSequence
from order_lab.elementary_steps import enumerate_steps

logger = logging.getLogger(__name__)

def precedes(D: DegreeSequence, E: DegreeSequence, k: int) -> bool:
    """
    Decide D <= E, i.e. whether D is reachable from E by elementary steps.

    This is a verification oracle: a breadth-first search over every multiset
    of order |E| with sum at most sum(D) and maximum at most
    max(max(E), k) + (sum(D) - sum(E)) / 2, which is exponential in the
    order. Sizes beyond the configured guards raise ResourceLimitError.
    """

    check_k(k)
    if D.order != E.order:
        raise InputError(f'precedes compares multisets of equal order, got {D.order} and {E.order}')
    if D == E:
        return True

    if D.order > PRECEDES_MAX_ORDER or max(D.total, E.total) > PRECEDES_MAX_SUM:
        raise ResourceLimitError(
            f'precedes is limited to order <= {PRECEDES_MAX_ORDER} and sums <= {PRECEDES_MAX_SUM}')

    # additions add 2 to the sum and transfers preserve it
    gap = D.total - E.total
    if gap < 0 or gap % 2 == 1:
        return False

    # transfers never lift the maximum past max(current max, k)
    cap = max(E.max_value, k) + gap // 2
    if D.max_value > cap:
        return False

    seen = {E}
    frontier = deque([E])
    while frontier:
        current = frontier.popleft()
        room_for_addition = current.total + 2 <= D.total
        for _, successor in enumerate_steps(current, k, include_additions=room_for_addition):
            if successor.max_value > cap:
                continue
            if successor == D:
                logger.debug('found %s below %s after %d states', D, E, len(seen))
                return True
            if successor not in seen:
                seen.add(successor)
                frontier.append(successor)

    logger.debug('%s not below %s; explored %d states', D, E, len(seen))
    return False
