from graph_engine.graph_types import Multigraph

class LoopMultigraph(Multigraph):
    '''
    A multigraph in which loops are allowed. A loop adds 2 to the degree of
    its vertex, and the adjacency diagonal holds twice the loop count.

    Fields:
        n: Number of vertices.
        edges: Read-only mapping from a pair (u, v) with u <= v to its
            multiplicity; (u, u) is a loop at u.
    '''
    allows_loops = True

    __slots__ = ()

    def loops(self, v: int) -> int:
        return self.edges.get((v, v), 0)
