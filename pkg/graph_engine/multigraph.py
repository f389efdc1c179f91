import heapq
import json
import logging
from typing import Dict, List, Union

import numpy as np

from errors import GraphFormatError, InputError, InvalidScriptError, NotGraphicalError
from graph_engine.graph_types import Multigraph, Pair
from multiset_core.helpers import is_graphical
from multiset_core.multiset_types import DegreeSequence

logger = logging.getLogger(__name__)

def degree_sequence_of(G: Multigraph) -> DegreeSequence:
    return DegreeSequence.from_values(G.degrees())

def realize(D: DegreeSequence) -> Multigraph:
    """
    Given a graphical D, return a multigraph with degree sequence D. Vertex i
    gets the i-th smallest value, so the last vertex has maximum degree. Edges
    are laid by repeatedly joining the two vertices of largest residual degree,
    ties going to the lower index.
    """

    if not is_graphical(D):
        raise NotGraphicalError(f'{D} is not graphical (sum must be even and at least twice the maximum)')

    values = D.values()
    heap = [(-value, vertex) for vertex, value in enumerate(values) if value > 0]
    heapq.heapify(heap)

    edges: Dict[Pair, int] = {}
    while heap:
        first_residual, u = heapq.heappop(heap)
        second_residual, v = heapq.heappop(heap)
        pair = (min(u, v), max(u, v))
        edges[pair] = edges.get(pair, 0) + 1
        if first_residual + 1 < 0:
            heapq.heappush(heap, (first_residual + 1, u))
        if second_residual + 1 < 0:
            heapq.heappush(heap, (second_residual + 1, v))

    return Multigraph(len(values), edges)

def delete_vertex(G: Multigraph, v: int) -> Multigraph:
    """
    G - v, with vertices above v shifted down by one
    """

    if not 0 <= v < G.n:
        raise InputError(f'vertex {v} is outside 0..{G.n - 1}')

    def relabel(u):
        return u - 1 if u > v else u

    edges = {(relabel(a), relabel(c)): multiplicity
             for (a, c), multiplicity in G.edges.items() if v not in (a, c)}
    return type(G)(G.n - 1, edges)

def perturb(G: Multigraph, swaps: int, rng: Union[int, np.random.Generator, None] = None) -> Multigraph:
    """
    Apply up to `swaps` random 2-edge swaps (u,v),(x,y) -> (u,x),(v,y). Swaps
    that would create a loop are skipped. Degrees are preserved.
    """

    rng = np.random.default_rng(rng)
    stubs: List[List[int]] = []
    for (u, v), multiplicity in sorted(G.edges.items()):
        stubs.extend([u, v] for _ in range(multiplicity))
    if len(stubs) < 2:
        return G

    accepted = 0
    for _ in range(swaps):
        i, j = rng.choice(len(stubs), size=2, replace=False)
        u, v = stubs[i]
        x, y = stubs[j]
        if rng.random() < 0.5:
            x, y = y, x
        if u == x or v == y:
            continue
        stubs[i] = [u, x]
        stubs[j] = [v, y]
        accepted += 1

    edges: Dict[Pair, int] = {}
    for u, v in stubs:
        pair = (min(u, v), max(u, v))
        edges[pair] = edges.get(pair, 0) + 1
    logger.debug('perturb: %d of %d swaps accepted', accepted, swaps)
    return Multigraph(G.n, edges)

def read_graph(filepath: str, graph_class=Multigraph) -> Multigraph:
    """
    Graph file: {"n": int, "edges": [[u, v, mult], ...]}, or a witness file
    with the graph under "graph".
    """

    try:
        with open(filepath, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f'{filepath} is not valid JSON: {e}') from e
    except OSError as e:
        raise GraphFormatError(f'cannot read graph file {filepath}: {e}') from e
    if isinstance(data, dict) and 'graph' in data:
        data = data['graph']
    return graph_class.from_json(data)

def read_script(filepath: str) -> List[int]:
    """
    Deletion script file: {"deletions": [int, ...]}
    """

    try:
        with open(filepath, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise InvalidScriptError(f'{filepath} is not valid JSON: {e}') from e
    except OSError as e:
        raise InvalidScriptError(f'cannot read script file {filepath}: {e}') from e
    if not isinstance(data, dict) or not isinstance(data.get('deletions'), list):
        raise InvalidScriptError('script JSON must be an object with a "deletions" array')
    script = data['deletions']
    if not all(isinstance(vertex, int) and not isinstance(vertex, bool) for vertex in script):
        raise InvalidScriptError('deletions must be integers')
    return script
