from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping

import numpy as np

from config import MAX_DEGREE, MAX_TOTAL
from errors import DegreeOverflowError, EmptySequenceError, InputError, InvalidProfileError

def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise InputError(f'{what} must be an integer, got {value!r}')
    return int(value)

class DegreeSequence:
    '''
    A finite multiset of nonnegative integers, the central object D. Houses
    degree sequences as well as the intermediate multisets of the decrement
    procedure, which need not be graphical.

    Fields:
        counts: Read-only mapping from value to multiplicity (every multiplicity >= 1).
        order: Number of elements, counting multiplicity.
        total: Sum of the elements.
    '''
    __slots__ = ('_counts', '_order', '_total', '_key')

    def __init__(self, counts: Mapping[int, int]):
        cleaned: Dict[int, int] = {}
        for value, multiplicity in counts.items():
            value = _as_int(value, 'degree')
            multiplicity = _as_int(multiplicity, 'multiplicity')
            if multiplicity == 0:
                continue
            cleaned[value] = cleaned.get(value, 0) + multiplicity
        self._counts = cleaned
        self._order = sum(cleaned.values())
        self._total = sum(value * mult for value, mult in cleaned.items())
        self._key = tuple(sorted(cleaned.items()))
        self.__check_rep()

    @classmethod
    def from_values(cls, values: Iterable[int]) -> 'DegreeSequence':
        counts: Dict[int, int] = {}
        for value in values:
            value = _as_int(value, 'degree')
            counts[value] = counts.get(value, 0) + 1
        return cls(counts)

    @classmethod
    def zeros(cls, n: int) -> 'DegreeSequence':
        return cls({0: n} if n > 0 else {})

    def __check_rep(self):
        for value, multiplicity in self._counts.items():
            if value < 0:
                raise InputError(f'degrees must be nonnegative, got {value}')
            if value > MAX_DEGREE:
                raise DegreeOverflowError(f'degree {value} exceeds the cap {MAX_DEGREE}')
            if multiplicity < 0:
                raise InputError(f'multiplicity of {value} is negative ({multiplicity})')
        if self._total > MAX_TOTAL:
            raise DegreeOverflowError(f'sum {self._total} exceeds the cap {MAX_TOTAL}')

    @property
    def counts(self) -> Mapping[int, int]:
        return MappingProxyType(self._counts)

    @property
    def order(self) -> int:
        return self._order

    @property
    def total(self) -> int:
        return self._total

    @property
    def is_empty(self) -> bool:
        return self._order == 0

    @property
    def max_value(self) -> int:
        if self.is_empty:
            raise EmptySequenceError('max of the empty multiset is undefined')
        return self._key[-1][0]

    def multiplicity(self, value: int) -> int:
        return self._counts.get(value, 0)

    def values(self) -> List[int]:
        '''
        Canonical serialized form: the nondecreasing value list.
        '''
        result = []
        for value, multiplicity in self._key:
            result.extend([value] * multiplicity)
        return result

    def is_all_zero(self) -> bool:
        return all(value == 0 for value in self._counts)

    def union(self, other: 'DegreeSequence') -> 'DegreeSequence':
        counts = dict(self._counts)
        for value, multiplicity in other._counts.items():
            counts[value] = counts.get(value, 0) + multiplicity
        return DegreeSequence(counts)

    def difference(self, other: 'DegreeSequence') -> 'DegreeSequence':
        counts = {}
        for value, multiplicity in self._counts.items():
            remaining = multiplicity - other._counts.get(value, 0)
            if remaining > 0:
                counts[value] = remaining
        return DegreeSequence(counts)

    def replace_one(self, old: int, new: int) -> 'DegreeSequence':
        '''
        Replace one copy of `old` by `new`. The caller checks membership.
        '''
        counts = dict(self._counts)
        counts[old] -= 1
        if counts[old] == 0:
            del counts[old]
        counts[new] = counts.get(new, 0) + 1
        return DegreeSequence(counts)

    def without_max(self) -> 'DegreeSequence':
        return self.difference(DegreeSequence({self.max_value: 1}))

    def to_text(self) -> str:
        return ','.join(str(value) for value in self.values())

    def to_json(self) -> List[int]:
        return self.values()

    def __contains__(self, value) -> bool:
        return value in self._counts

    def __len__(self) -> int:
        return self._order

    def __iter__(self) -> Iterator[int]:
        return iter(self.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, DegreeSequence):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __str__(self) -> str:
        return '{' + ','.join(str(value) for value in self.values()) + '}'

    def __repr__(self) -> str:
        return f'DegreeSequence({self})'

class SigmaProfile:
    '''
    The conjugate profile of a multiset: values[z] is the number of elements
    that are at least z. Trailing zeros past index 0 are dropped, so the
    profile of the empty multiset is [0].

    Fields:
        values: Nonincreasing tuple [sigma(0), sigma(1), ..., sigma(M)].
    '''
    __slots__ = ('_values',)

    def __init__(self, values: Iterable[int]):
        values = [_as_int(value, 'profile entry') for value in values]
        while len(values) > 1 and values[-1] == 0:
            values.pop()
        if not values:
            values = [0]
        self._values = tuple(values)
        self.__check_rep()

    def __check_rep(self):
        if any(value < 0 for value in self._values):
            raise InvalidProfileError(f'profile entries must be nonnegative: {list(self._values)}')
        for z in range(len(self._values) - 1):
            if self._values[z] < self._values[z + 1]:
                raise InvalidProfileError(
                    f'profile is not nonincreasing at z={z}: {list(self._values)}')

    @property
    def values(self):
        return self._values

    def __call__(self, z: int) -> int:
        if z < 0:
            raise InputError(f'profile argument must be nonnegative, got {z}')
        return self._values[z] if z < len(self._values) else 0

    def add_indicator(self, x: int, sign: int = 1) -> 'SigmaProfile':
        '''
        Return sigma + sign * 1_x. Raises InvalidProfileError when the result
        is not a profile.
        '''
        length = max(len(self._values), x + 1)
        values = [self(z) for z in range(length)]
        values[x] += sign
        return SigmaProfile(values)

    def to_list(self) -> List[int]:
        return list(self._values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SigmaProfile):
            return NotImplemented
        return self._values == other._values

    def __hash__(self) -> int:
        return hash(self._values)

    def __repr__(self) -> str:
        return f'SigmaProfile({list(self._values)})'
