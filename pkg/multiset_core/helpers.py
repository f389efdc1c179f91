import json
from typing import Iterable, List, Optional, Union

from errors import InputError
from multiset_core.multiset_types import DegreeSequence, SigmaProfile

FERRERS_CELL = '■'
FERRERS_RULE = '┊'

def make_degree_sequence(values: Iterable[int]) -> DegreeSequence:
    return DegreeSequence.from_values(values)

def parse_degree_sequence(text: str) -> DegreeSequence:
    """
    Accept either the comma form ("1,2,2,4") or a JSON array ("[1, 2, 2, 4]").
    """

    text = text.strip()
    if text.startswith('['):
        try:
            values = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f'malformed JSON degree list: {e}') from e
        if not isinstance(values, list):
            raise InputError('JSON degree list must be an array of integers')
        return make_degree_sequence(values)

    if text == '':
        return make_degree_sequence([])

    values = []
    for token in text.split(','):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise InputError(f'not an integer in degree list: {token!r}')
    return make_degree_sequence(values)

def union(D: DegreeSequence, E: DegreeSequence) -> DegreeSequence:
    return D.union(E)

def difference(D: DegreeSequence, E: DegreeSequence) -> DegreeSequence:
    return D.difference(E)

def is_graphical(D: DegreeSequence) -> bool:
    """
    True iff D is the degree sequence of a loopless multigraph: the sum is even
    and at least twice the maximum. The empty multiset is graphical.
    """

    if D.is_empty:
        return True
    return D.total % 2 == 0 and D.total >= 2 * D.max_value

def check_k(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InputError(f'k must be a positive integer, got {k!r}')
    return k

def is_trivial(D: DegreeSequence, k: int) -> bool:
    check_k(k)
    if D.is_empty:
        return True
    return D.max_value < k

def sigma(D: DegreeSequence) -> SigmaProfile:
    if D.is_empty:
        return SigmaProfile([0])

    top = D.max_value
    at_least = [0] * (top + 2)
    for value, multiplicity in D.counts.items():
        at_least[value] += multiplicity
    for z in range(top, -1, -1):
        at_least[z] += at_least[z + 1]
    return SigmaProfile(at_least[:top + 1])

def from_sigma(p: Union[SigmaProfile, List[int]]) -> DegreeSequence:
    if not isinstance(p, SigmaProfile):
        p = SigmaProfile(p)

    counts = {}
    for z in range(len(p.values)):
        multiplicity = p(z) - p(z + 1)
        if multiplicity > 0:
            counts[z] = multiplicity
    return DegreeSequence(counts)

def mu(D: DegreeSequence, z: int) -> int:
    return D.multiplicity(z)

def render_ferrers(D: DegreeSequence, k: Optional[int] = None) -> str:
    """
    Ferrers diagram with one row per element, longest row first. When k is
    given a rule column is drawn after the k-th cell of every row.
    """

    rows = []
    for length in sorted(D.values(), reverse=True):
        if k is None:
            rows.append(FERRERS_CELL * length)
            continue
        left = FERRERS_CELL * min(length, k)
        right = FERRERS_CELL * max(length - k, 0)
        rows.append(left.ljust(k) + FERRERS_RULE + right)
    return '\n'.join(rows)

def print_sequences(title: str, sequences, k: Optional[int] = None):
    result = '=' * 80 + '\n'
    result += f'{title}:\n'
    for label, D in sequences:
        result += f'{label} = {D}\n'
        result += render_ferrers(D, k) + '\n\n'
    result += '=' * 80 + '\n'
    print(result)
