import logging
from typing import Dict, Iterator, List

from config import REALIZATIONS_MAX_ORDER, REALIZATIONS_MAX_SUM
from errors import InputError, NotGraphicalError, ResourceLimitError
from graph_engine.graph_types import Multigraph, Pair
from loop_variant.loop_types import LoopMultigraph
from multiset_core.helpers import check_k
from multiset_core.multiset_types import DegreeSequence

logger = logging.getLogger(__name__)

def loop_degree_sequence_of(G: Multigraph) -> DegreeSequence:
    # adjacency() already counts each loop twice
    return DegreeSequence.from_values(G.degrees())

def _check_loop_sequence(D: DegreeSequence):
    if D.total % 2 == 1:
        raise NotGraphicalError(f'{D} has odd sum {D.total}, so no loop multigraph realizes it')

def _add_edge(edges: Dict[Pair, int], u: int, v: int, multiplicity: int = 1):
    pair = (min(u, v), max(u, v))
    edges[pair] = edges.get(pair, 0) + multiplicity

def _fill_with_loops(degrees: List[int], edges: Dict[Pair, int]) -> LoopMultigraph:
    used = [0] * len(degrees)
    for (u, v), multiplicity in edges.items():
        used[u] += multiplicity
        used[v] += multiplicity
    for v, degree in enumerate(degrees):
        left = degree - used[v]
        if left < 0 or left % 2 == 1:
            raise RuntimeError(f'vertex {v} cannot be completed with loops (degree {degree}, used {used[v]})')
        if left:
            _add_edge(edges, v, v, left // 2)
    return LoopMultigraph(len(degrees), edges)

def construct_extremal_loop_multigraph(D: DegreeSequence, k: int) -> LoopMultigraph:
    """
    Given a positive D with even sum, return a loop multigraph with degree
    sequence D whose k-independence number is as small as possible. Vertex i
    gets the i-th smallest value.

    Even k: odd-degree vertices are paired by single edges and everything
    else is loops, so a vertex of degree >= k carries at least k/2 loops.

    Odd k: with s values below k and c equal to k, a first matching joins
    each vertex of degree k to a distinct low vertex (and, once low vertices
    run out, vertices of degree k to each other); a second matching fixes
    parity, and the rest is loops.
    """

    check_k(k)
    if 0 in D:
        raise InputError(f'{D} has a zero element; extremal constructions need positive degrees')
    _check_loop_sequence(D)

    degrees = D.values()
    n = len(degrees)
    edges: Dict[Pair, int] = {}

    if k % 2 == 0:
        odd = [v for v in range(n) if degrees[v] % 2 == 1]
        for i in range(0, len(odd), 2):
            _add_edge(edges, odd[i], odd[i + 1])
        return _fill_with_loops(degrees, edges)

    s = sum(1 for x in degrees if x < k)
    c = sum(1 for x in degrees if x == k)

    first = [(i, s + i) for i in range(min(c, s))]
    if c > s:
        first += [(2 * s + 2 * i, 2 * s + 2 * i + 1) for i in range((c - s) // 2)]
    matched = {v for pair in first for v in pair}

    # parity fix: even-degree vertices already matched, odd-degree ones not yet
    second_vertices = [v for v in range(n) if (v in matched) == (degrees[v] % 2 == 0)]
    second = [(second_vertices[i], second_vertices[i + 1]) for i in range(0, len(second_vertices), 2)]

    for u, v in first + second:
        _add_edge(edges, u, v)
    logger.debug('odd k=%d: s=%d c=%d, first matching %s, second matching %s', k, s, c, first, second)
    return _fill_with_loops(degrees, edges)

def enumerate_loop_realizations(D: DegreeSequence) -> Iterator[LoopMultigraph]:
    """
    Every loop multigraph on labelled vertices 0..n-1 where vertex i has the
    i-th smallest value of D. No isomorphism reduction. Vertex by vertex a
    loop count is chosen, then the rest of its degree is spread over
    higher-labelled vertices.
    """

    if D.order > REALIZATIONS_MAX_ORDER or D.total > REALIZATIONS_MAX_SUM:
        raise ResourceLimitError(
            f'enumerate_loop_realizations is limited to order <= {REALIZATIONS_MAX_ORDER} '
            f'and sum <= {REALIZATIONS_MAX_SUM}')
    if D.total % 2 == 1:
        return

    degrees = D.values()
    n = len(degrees)
    residual = list(degrees)
    edges: Dict[Pair, int] = {}

    def spread(u: int, j: int, remaining: int) -> Iterator[None]:
        if remaining == 0:
            yield from place(u + 1)
            return
        if j >= n or sum(residual[j:]) < remaining:
            return
        for multiplicity in range(min(remaining, residual[j]), -1, -1):
            if multiplicity:
                residual[j] -= multiplicity
                edges[(u, j)] = multiplicity
            yield from spread(u, j + 1, remaining - multiplicity)
            if multiplicity:
                residual[j] += multiplicity
                del edges[(u, j)]

    def place(u: int) -> Iterator[None]:
        if u == n:
            yield
            return
        own = residual[u]
        for loops in range(own // 2, -1, -1):
            if loops:
                edges[(u, u)] = loops
            residual[u] = 0
            yield from spread(u, u + 1, own - 2 * loops)
            residual[u] = own
            if loops:
                del edges[(u, u)]

    for _ in place(0):
        yield LoopMultigraph(n, dict(edges))
