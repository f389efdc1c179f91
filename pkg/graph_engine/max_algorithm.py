import logging
from typing import Callable, Dict, List, Sequence, Tuple, Union

import numpy as np

from config import WORST_CASE_MAX_ORDER
from errors import InvalidScriptError, ResourceLimitError
from graph_engine.graph_types import MaxRunResult, Multigraph, WorstCaseResult
from multiset_core.helpers import check_k

logger = logging.getLogger(__name__)

Chooser = Callable[[List[int]], int]

def lowest_index_chooser(candidates: List[int]) -> int:
    return candidates[0]

class ScriptedChooser:
    '''
    Replays a fixed deletion script, checking each entry is a legal choice.

    Fields:
        script: Vertex labels in deletion order.
        position: Index of the next entry to replay.
    '''
    def __init__(self, script: Sequence[int]):
        self.script = list(script)
        self.position = 0

    def __call__(self, candidates: List[int]) -> int:
        if self.position >= len(self.script):
            raise InvalidScriptError(
                f'script ended after {len(self.script)} deletions but the maximum degree is still >= k')
        vertex = self.script[self.position]
        if vertex not in candidates:
            raise InvalidScriptError(
                f'deletion {self.position} picks vertex {vertex}, which is not of maximum degree '
                f'(candidates: {candidates})')
        self.position += 1
        return vertex

    @property
    def finished(self) -> bool:
        return self.position == len(self.script)

class RandomChooser:
    def __init__(self, seed: Union[int, np.random.Generator, None] = None):
        self.rng = np.random.default_rng(seed)

    def __call__(self, candidates: List[int]) -> int:
        return int(candidates[self.rng.integers(len(candidates))])

def max_run(G: Multigraph, k: int, chooser: Chooser = lowest_index_chooser) -> MaxRunResult:
    """
    Run MAX on G: while some remaining vertex has degree >= k, delete a vertex
    of maximum degree picked by `chooser` from the sorted candidate labels.
    Labels in the result refer to G.
    """

    check_k(k)
    adjacency = G.adjacency()
    alive = np.ones(G.n, dtype=bool)
    degrees = adjacency.sum(axis=1)
    log: List[Tuple[int, int]] = []

    while alive.any():
        top = int(degrees[alive].max())
        if top < k:
            break
        candidates = [int(v) for v in np.flatnonzero(alive & (degrees == top))]
        vertex = chooser(candidates)
        if vertex not in candidates:
            raise InvalidScriptError(f'chooser picked {vertex}, which is not among {candidates}')
        log.append((vertex, top))
        alive[vertex] = False
        degrees = degrees - adjacency[:, vertex]

    return MaxRunResult([int(v) for v in np.flatnonzero(alive)], log)

def replay_script(G: Multigraph, k: int, script: Sequence[int]) -> MaxRunResult:
    """
    Replay a deletion script as a MAX run. The script must be legal and must
    end exactly when MAX stops.
    """

    chooser = ScriptedChooser(script)
    result = max_run(G, k, chooser)
    if not chooser.finished:
        raise InvalidScriptError(
            f'MAX stopped after {chooser.position} deletions but the script has {len(chooser.script)}')
    return result

def _canonical_key(adjacency: np.ndarray) -> Tuple[int, bytes]:
    """
    Adjacency matrix under a cheap vertex ordering: colour by degree, refine
    twice by the multiset of (neighbour colour, multiplicity), then sort by
    colour and index. Isomorphic graphs may still get different keys; equal
    keys always mean isomorphic graphs.
    """

    size = adjacency.shape[0]
    colours = [int(d) for d in adjacency.sum(axis=1)]
    for _ in range(2):
        signatures = []
        for v in range(size):
            neighbours = np.flatnonzero(adjacency[v])
            signatures.append((colours[v], tuple(sorted((colours[u], int(adjacency[v, u])) for u in neighbours))))
        ranks = {signature: rank for rank, signature in enumerate(sorted(set(signatures)))}
        colours = [ranks[signature] for signature in signatures]

    order = sorted(range(size), key=lambda v: (colours[v], v))
    return size, np.ascontiguousarray(adjacency[np.ix_(order, order)]).tobytes()

def max_worst_case(G: Multigraph, k: int) -> WorstCaseResult:
    """
    Given G and k, return the minimum size of a set MAX can output over every
    sequence of legal maximum-degree choices, and one deletion script reaching
    it. Exhaustive, so G.n is capped by KINDEP_WORST_CASE_MAX_ORDER.
    """

    check_k(k)
    if G.n > WORST_CASE_MAX_ORDER:
        raise ResourceLimitError(
            f'max_worst_case is limited to {WORST_CASE_MAX_ORDER} vertices, got {G.n}')

    adjacency = G.adjacency()
    memo: Dict[Tuple[int, bytes], int] = {}

    def candidates_of(alive: Tuple[int, ...]) -> List[int]:
        sub = adjacency[np.ix_(alive, alive)]
        degrees = sub.sum(axis=1)
        if len(alive) == 0 or degrees.max() < k:
            return []
        top = degrees.max()
        return [alive[i] for i in np.flatnonzero(degrees == top)]

    def solve(alive: Tuple[int, ...]) -> int:
        key = _canonical_key(adjacency[np.ix_(alive, alive)])
        if key in memo:
            return memo[key]
        candidates = candidates_of(alive)
        if not candidates:
            value = len(alive)
        else:
            value = min(solve(tuple(u for u in alive if u != v)) for v in candidates)
        memo[key] = value
        return value

    alive = tuple(range(G.n))
    best = solve(alive)

    script = []
    while True:
        candidates = candidates_of(alive)
        if not candidates:
            break
        for v in candidates:
            child = tuple(u for u in alive if u != v)
            if solve(child) == best:
                script.append(v)
                alive = child
                break

    logger.debug('max_worst_case: n=%d k=%d size=%d over %d residual graphs', G.n, k, best, len(memo))
    return WorstCaseResult(best, script, len(memo))
