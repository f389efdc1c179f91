from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from errors import GraphFormatError

Pair = Tuple[int, int]

class Multigraph:
    '''
    A loopless multigraph on vertices 0..n-1.

    Fields:
        n: Number of vertices.
        edges: Read-only mapping from a pair (u, v) with u < v to its multiplicity (>= 1).
    '''
    allows_loops = False

    __slots__ = ('_n', '_edges', '_key')

    def __init__(self, n: int, edges: Optional[Mapping[Pair, int]] = None):
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
            raise GraphFormatError(f'vertex count must be a nonnegative integer, got {n!r}')
        self._n = int(n)

        cleaned: Dict[Pair, int] = {}
        for pair, multiplicity in (edges or {}).items():
            u, v = (int(endpoint) for endpoint in pair)
            if u > v:
                u, v = v, u
            multiplicity = int(multiplicity)
            if multiplicity == 0:
                continue
            cleaned[(u, v)] = cleaned.get((u, v), 0) + multiplicity
        self._edges = cleaned
        self._key = (self._n, tuple(sorted(cleaned.items())))
        self.__check_rep()

    def __check_rep(self):
        for (u, v), multiplicity in self._edges.items():
            if u < 0 or v >= self._n:
                raise GraphFormatError(f'edge ({u},{v}) has an endpoint outside 0..{self._n - 1}')
            if u == v and not self.allows_loops:
                raise GraphFormatError(f'loop at vertex {u} in a loopless multigraph')
            if multiplicity < 0:
                raise GraphFormatError(f'edge ({u},{v}) has negative multiplicity {multiplicity}')

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> Mapping[Pair, int]:
        return MappingProxyType(self._edges)

    def adjacency(self) -> np.ndarray:
        """
        Symmetric integer matrix of edge multiplicities. The diagonal holds
        twice the number of loops, so row sums are degrees.
        """

        matrix = np.zeros((self._n, self._n), dtype=np.int64)
        for (u, v), multiplicity in self._edges.items():
            if u == v:
                matrix[u, u] += 2 * multiplicity
            else:
                matrix[u, v] += multiplicity
                matrix[v, u] += multiplicity
        return matrix

    def degrees(self) -> np.ndarray:
        return self.adjacency().sum(axis=1)

    def degree(self, v: int) -> int:
        return int(self.degrees()[v])

    def edge_count(self) -> int:
        return sum(self._edges.values())

    def to_json(self) -> dict:
        return {'n': self._n, 'edges': [[u, v, multiplicity] for (u, v), multiplicity in self._key[1]]}

    @classmethod
    def from_json(cls, data) -> 'Multigraph':
        if not isinstance(data, dict) or 'n' not in data or 'edges' not in data:
            raise GraphFormatError('graph JSON must be an object with "n" and "edges"')
        if not isinstance(data['edges'], list):
            raise GraphFormatError('"edges" must be an array of [u, v, multiplicity] entries')
        edges: Dict[Pair, int] = {}
        for entry in data['edges']:
            if not isinstance(entry, list) or len(entry) != 3:
                raise GraphFormatError(f'edge entries must be [u, v, multiplicity], got {entry!r}')
            if not all(isinstance(item, int) and not isinstance(item, bool) for item in entry):
                raise GraphFormatError(f'edge entries must hold integers, got {entry!r}')
            u, v, multiplicity = entry
            if multiplicity < 1:
                raise GraphFormatError(f'edge ({u},{v}) needs a positive multiplicity, got {multiplicity}')
            key = (min(u, v), max(u, v))
            edges[key] = edges.get(key, 0) + multiplicity
        return cls(data['n'], edges)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f'{type(self).__name__}(n={self._n}, edges={dict(self._key[1])})'

class MaxRunResult:
    '''
    Outcome of one run of the MAX algorithm.

    Fields:
        survivors: Vertex labels left when the maximum degree drops below k.
        log: (vertex, degree at deletion) for each deleted vertex, in order.
    '''
    def __init__(self, survivors: List[int], log: List[Tuple[int, int]]):
        self.survivors = survivors
        self.log = log

    @property
    def size(self) -> int:
        return len(self.survivors)

    @property
    def deletions(self) -> List[int]:
        return [vertex for vertex, _ in self.log]

    def to_json(self) -> dict:
        return {
            'size': self.size,
            'survivors': list(self.survivors),
            'deletions': [{'vertex': vertex, 'degree': degree} for vertex, degree in self.log],
        }

    def __repr__(self) -> str:
        return f'MaxRunResult(size={self.size}, deletions={self.deletions})'

class WorstCaseResult:
    '''
    The smallest k-independent set MAX can return on a graph.

    Fields:
        size: Minimum output size over every sequence of legal choices.
        script: One deletion script reaching that size.
        states: Number of distinct residual graphs evaluated.
    '''
    def __init__(self, size: int, script: List[int], states: int):
        self.size = size
        self.script = script
        self.states = states

    def to_json(self) -> dict:
        return {'size': self.size, 'deletions': list(self.script), 'states': self.states}

    def __repr__(self) -> str:
        return f'WorstCaseResult(size={self.size}, script={self.script})'

class Witness:
    '''
    A multigraph with a prescribed degree sequence and a MAX run on it whose
    output has exactly b_k(D) vertices.

    Fields:
        graph: The multigraph.
        script: Deletion labels, replayable with a ScriptedChooser.
        b: The bound the run attains.
    '''
    def __init__(self, graph: Multigraph, script: List[int], b: int):
        self.graph = graph
        self.script = script
        self.b = b

    def to_json(self) -> dict:
        return {'graph': self.graph.to_json(), 'deletions': list(self.script), 'b': self.b}

    def __iter__(self):
        return iter((self.graph, self.script))

    def __repr__(self) -> str:
        return f'Witness(b={self.b}, graph={self.graph!r}, script={self.script})'
