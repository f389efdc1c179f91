from typing import Optional

from errors import CoveringParameterError
from multiset_core.multiset_types import DegreeSequence

class CoveringParams:
    '''
    Parameters of a pair covering: every pair of the v points lies in at
    least lam blocks of size kappa.

    Fields:
        v: Number of points.
        kappa: Block size, 3 <= kappa < v.
        lam: Pair multiplicity, >= 1.
    '''
    def __init__(self, v: int, kappa: int, lam: int = 1):
        self.v = v
        self.kappa = kappa
        self.lam = lam
        self.__check_rep()

    def __check_rep(self):
        for name, value in (('v', self.v), ('kappa', self.kappa), ('lambda', self.lam)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise CoveringParameterError(f'{name} must be an integer, got {value!r}')
        if not 3 <= self.kappa < self.v:
            raise CoveringParameterError(f'need 3 <= kappa < v, got kappa={self.kappa}, v={self.v}')
        if self.lam < 1:
            raise CoveringParameterError(f'lambda must be positive, got {self.lam}')

    @property
    def r(self) -> int:
        """Lower bound on the number of blocks through each point."""
        return -(-self.lam * (self.v - 1) // (self.kappa - 1))

    @property
    def d(self) -> int:
        """Slack in lam * (v - 1) = r * (kappa - 1) - d, 0 <= d < kappa - 1."""
        return self.r * (self.kappa - 1) - self.lam * (self.v - 1)

    def to_json(self) -> dict:
        return {'v': self.v, 'kappa': self.kappa, 'lambda': self.lam}

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoveringParams):
            return NotImplemented
        return (self.v, self.kappa, self.lam) == (other.v, other.kappa, other.lam)

    def __hash__(self) -> int:
        return hash((self.v, self.kappa, self.lam))

    def __repr__(self) -> str:
        return f'CoveringParams(v={self.v}, kappa={self.kappa}, lambda={self.lam})'

class CoveringBoundReport:
    '''
    One test of whether a covering with z blocks can exist.

    Fields:
        params: The covering parameters.
        z: Tested number of blocks.
        r, d: From lam * (v - 1) = r * (kappa - 1) - d.
        s, ell: From kappa * z = (r + s) * v + ell, 0 <= ell < v.
        D: ell copies of d + (s+1)(kappa-1) and v - ell copies of d + s(kappa-1).
        k: r - lam.
        b: b_k(D), or None while not yet computed or when D is not graphical.
        contradiction: True when b > z, so no covering with z blocks exists.
    '''
    def __init__(self, params: CoveringParams, z: int, s: int, ell: int, D: DegreeSequence):
        self.params = params
        self.z = z
        self.r = params.r
        self.d = params.d
        self.s = s
        self.ell = ell
        self.D = D
        self.k = params.r - params.lam
        self.b: Optional[int] = None
        self.contradiction = False

    def to_json(self) -> dict:
        return {
            **self.params.to_json(),
            'z': self.z,
            'r': self.r,
            'd': self.d,
            's': self.s,
            'ell': self.ell,
            'k': self.k,
            'degrees': {str(value): multiplicity for value, multiplicity in sorted(self.D.counts.items())},
            'b': self.b,
            'contradiction': self.contradiction,
        }

    def __repr__(self) -> str:
        return (f'CoveringBoundReport({self.params!r}, z={self.z}, r={self.r}, d={self.d}, '
                f's={self.s}, ell={self.ell}, k={self.k}, b={self.b}, contradiction={self.contradiction})')
