from typing import List

from errors import NotGraphicalError, TrivialSequenceError
from multiset_core.helpers import check_k, from_sigma, is_graphical, is_trivial, sigma
from multiset_core.multiset_types import DegreeSequence

def pseudo_reductions(E: DegreeSequence, k: int) -> List[DegreeSequence]:
    """
    Every graphical E' with sum(E') = sum(A0) - max(E) and
    sigma_E'(z) <= sigma_A0(z) for all z >= 1, where A0 = E minus one copy of
    max(E). Every reduction of E is among them.

    Candidates are built column by column on the conjugate profile: each
    column depth is bounded by the previous column and by A0's column, and
    branches that cannot reach the target sum are cut.
    """

    check_k(k)
    if not is_graphical(E):
        raise NotGraphicalError(f'{E} is not graphical')
    if is_trivial(E, k):
        raise TrivialSequenceError(f'{E} is trivial for k={k}')

    A0 = E.without_max()
    target = A0.total - E.max_value
    order = E.order - 1
    bounds = sigma(A0)
    last = len(bounds.values) - 1

    # suffix[z] = total room in columns z..last
    suffix = [0] * (last + 2)
    for z in range(last, 0, -1):
        suffix[z] = suffix[z + 1] + bounds(z)

    results = []

    def extend(z, previous, remaining, columns):
        if remaining == 0:
            candidate = from_sigma([order] + columns)
            if is_graphical(candidate):
                results.append(candidate)
            return
        if z > last or remaining > suffix[z]:
            return
        for depth in range(min(previous, bounds(z), remaining), 0, -1):
            left = remaining - depth
            if left > depth * (last - z) or left > suffix[z + 1]:
                continue
            extend(z + 1, depth, left, columns + [depth])

    extend(1, order, target, [])
    return sorted(results, key=lambda D: D.values())
