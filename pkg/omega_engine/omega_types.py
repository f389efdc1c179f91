from typing import List

from multiset_core.multiset_types import DegreeSequence

class DecrementTrace:
    '''
    One application of Omega to a degree sequence.

    Fields:
        k: The independence parameter.
        source: The input degree sequence D.
        m: max(D).
        A0: D with one copy of max(D) removed.
        s: Sum of A0, the full length of the decrement sequence.
        a: The decrement sequence. Empty in the degenerate branch; only the
            first m entries unless the full sequence was requested.
        omega: A_m, or the all-zero sequence of order |D| - 1 when degenerate.
        degenerate: True when every reduction of D is trivial and Omega(D) is
            the all-zero sequence.
    '''
    def __init__(self, k: int, source: DegreeSequence, m: int, A0: DegreeSequence, s: int,
                 a: List[int], omega: DegreeSequence, degenerate: bool):
        self.k = k
        self.source = source
        self.m = m
        self.A0 = A0
        self.s = s
        self.a = a
        self.omega = omega
        self.degenerate = degenerate

    def intermediates(self) -> List[DegreeSequence]:
        """
        Rebuild A_0, A_1, ... by replaying the recorded decrements. The
        intermediate multisets need not be degree sequences.
        """

        result = [self.A0]
        current = self.A0
        for x in self.a:
            current = current.replace_one(x, x - 1)
            result.append(current)
        return result

    def to_json(self) -> dict:
        return {
            'k': self.k,
            'degrees': self.source.to_json(),
            'm': self.m,
            's': self.s,
            'a': list(self.a),
            'omega': self.omega.to_json(),
            'degenerate': self.degenerate,
        }

    def __repr__(self) -> str:
        if self.degenerate:
            return f'DecrementTrace(k={self.k}, D={self.source}, degenerate)'
        return f'DecrementTrace(k={self.k}, D={self.source}, a={tuple(self.a)}, omega={self.omega})'

class BTrace:
    '''
    The Omega-iteration chain of a degree sequence and the resulting bound.

    Fields:
        k: The independence parameter.
        chain: [D, Omega(D), ..., Omega^p(D)], where only the last term is trivial.
        p: Number of Omega applications.
        b: |Omega^p(D)| = |D| - p.
        steps: The DecrementTrace of each Omega application, in chain order.
    '''
    def __init__(self, k: int, chain: List[DegreeSequence], steps: List[DecrementTrace]):
        self.k = k
        self.chain = chain
        self.steps = steps
        self.p = len(chain) - 1
        self.b = chain[0].order - self.p

    def to_json(self) -> dict:
        return {
            'k': self.k,
            'b': self.b,
            'p': self.p,
            'chain': [D.to_json() for D in self.chain],
        }

    def __repr__(self) -> str:
        return f'BTrace(k={self.k}, b={self.b}, p={self.p})'
