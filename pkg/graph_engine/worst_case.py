import logging
from typing import Dict, List

import numpy as np

from errors import NotGraphicalError
from graph_engine.graph_types import Multigraph, Pair, Witness
from graph_engine.multigraph import realize
from multiset_core.helpers import check_k, is_graphical, is_trivial
from multiset_core.multiset_types import DegreeSequence
from omega_engine.omega import b
from omega_engine.omega_types import DecrementTrace

logger = logging.getLogger(__name__)

def _attach_max_vertex(G: Multigraph, step: DecrementTrace) -> Multigraph:
    """
    Undo one Omega application: G realizes Omega(E); add a new last vertex u
    and walk the decrement sequence backwards, joining u to a vertex of degree
    a_i - 1 (lowest index first) so that vertex climbs back to a_i. The result
    realizes E and u has degree max(E).
    """

    u = G.n
    degrees = G.degrees().astype(np.int64)
    edges: Dict[Pair, int] = dict(G.edges)

    for x in reversed(step.a[:step.m]):
        targets = np.flatnonzero(degrees == x - 1)
        if targets.size == 0:
            raise RuntimeError(f'no vertex of degree {x - 1} to attach while rebuilding {step.source}')
        v = int(targets[0])
        degrees[v] += 1
        edges[(v, u)] = edges.get((v, u), 0) + 1

    return Multigraph(u + 1, edges)

def construct_worst_case(D: DegreeSequence, k: int) -> Witness:
    """
    Given a graphical D, return a multigraph with degree sequence D and a MAX
    deletion script on it whose surviving set has exactly b_k(D) vertices.

    The graph is built from the far end of the Omega chain. The last
    nontrivial term has the all-zero Omega, so it is realized directly:
    deleting any maximum-degree vertex from it already leaves a trivial
    graph. Each earlier level is rebuilt by re-attaching its deleted
    maximum-degree vertex. At every level the re-attached vertex is
    the last label, so the script deletes n-1, n-2, ... in turn.
    """

    check_k(k)
    if not is_graphical(D):
        raise NotGraphicalError(f'{D} is not graphical (sum must be even and at least twice the maximum)')
    if is_trivial(D, k):
        return Witness(realize(D), [], D.order)

    trace = b(D, k)
    steps = trace.steps
    p = trace.p

    # a non-degenerate Omega keeps the maximum at least k, so the chain
    # always ends on a degenerate step
    G = realize(trace.chain[p - 1])
    for i in range(p - 2, -1, -1):
        G = _attach_max_vertex(G, steps[i])
        logger.debug('rebuilt level %d: order %d', i, G.n)

    script: List[int] = [D.order - 1 - i for i in range(p)]
    return Witness(G, script, trace.b)
