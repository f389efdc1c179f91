import numpy as np

from config import BRUTEFORCE_MAX_ORDER
from errors import NotGraphicalError, ResourceLimitError
from graph_engine.graph_types import Multigraph
from multiset_core.helpers import check_k
from multiset_core.multiset_types import DegreeSequence

def alpha_k_min_loops(D: DegreeSequence, k: int) -> int:
    """
    Given D with even sum, return the minimum k-independence number over
    all loop multigraphs with degree sequence D.

    With s positive values below k and c values equal to k, the minimum is s
    for even k and max(s, ceil((s + c) / 2)) for odd k. Every zero adds one,
    since an isolated vertex joins every k-independent set.
    """

    check_k(k)
    if D.total % 2 == 1:
        raise NotGraphicalError(f'{D} has odd sum {D.total}, so no loop multigraph realizes it')

    zeros = D.multiplicity(0)
    s = sum(multiplicity for value, multiplicity in D.counts.items() if 0 < value < k)
    c = D.multiplicity(k)

    if k % 2 == 0:
        return s + zeros
    return max(s, -(-(s + c) // 2)) + zeros

def alpha_k_bruteforce(G: Multigraph, k: int) -> int:
    """
    Exact k-independence number: the largest vertex subset whose induced
    (loop) multigraph has maximum degree below k. Loops count 2. Tries all
    2^n subsets at once, so n is capped by KINDEP_BRUTEFORCE_MAX_ORDER.
    """

    check_k(k)
    if G.n > BRUTEFORCE_MAX_ORDER:
        raise ResourceLimitError(f'alpha_k_bruteforce is limited to {BRUTEFORCE_MAX_ORDER} vertices, got {G.n}')

    adjacency = G.adjacency()
    masks = np.arange(2 ** G.n, dtype=np.int64)
    members = ((masks[:, None] >> np.arange(G.n)) & 1).astype(np.int64)

    # induced[S, v] = degree of v inside subset S
    induced = members @ adjacency
    too_high = ((induced >= k) & (members == 1)).any(axis=1)
    sizes = members.sum(axis=1)
    return int(sizes[~too_high].max())
