import logging
from typing import List, Tuple

from covering_bounds.covering_types import CoveringBoundReport, CoveringParams
from errors import CoveringParameterError
from multiset_core.helpers import is_graphical
from multiset_core.multiset_types import DegreeSequence
from omega_engine.omega import b

logger = logging.getLogger(__name__)

def schonheim(v: int, kappa: int, lam: int = 1) -> int:
    """
    ceil(v * r / kappa) with r = ceil(lam * (v - 1) / (kappa - 1))
    """

    params = CoveringParams(v, kappa, lam)
    return -(-params.v * params.r // params.kappa)

def excess_profile(params: CoveringParams, z: int) -> CoveringBoundReport:
    """
    Given parameters and a candidate block count z, return the report with
    r, d, s, ell and the excess degree sequence D filled in (b left unset).
    """

    if isinstance(z, bool) or not isinstance(z, int):
        raise CoveringParameterError(f'z must be an integer, got {z!r}')
    surplus = params.kappa * z - params.r * params.v
    if surplus < 0:
        raise CoveringParameterError(
            f'kappa*z = {params.kappa * z} < r*v = {params.r * params.v}: '
            f'no covering has {z} blocks since every point lies in at least r={params.r} blocks')

    s, ell = divmod(surplus, params.v)
    high = params.d + (s + 1) * (params.kappa - 1)
    low = params.d + s * (params.kappa - 1)
    D = DegreeSequence({high: ell, low: params.v - ell})
    return CoveringBoundReport(params, z, s, ell, D)

def evaluate(report: CoveringBoundReport) -> CoveringBoundReport:
    # non-graphical D: b stays None and no contradiction is claimed
    if is_graphical(report.D):
        report.b = b(report.D, report.k).b
        report.contradiction = report.b > report.z
    return report

def covering_lower_bound(params: CoveringParams, z0: int) -> Tuple[int, List[CoveringBoundReport]]:
    """
    Given parameters and a known lower bound z0, raise the bound while the
    excess argument rules out coverings with z blocks.

    Returns:
    - the smallest z >= z0 for which no contradiction is found
    - the report of every tested z, in order
    """

    reports = []
    z = z0
    while True:
        report = evaluate(excess_profile(params, z))
        reports.append(report)
        logger.debug('%r z=%d: b_%d = %s', params, z, report.k, report.b)
        if not report.contradiction:
            return z, reports
        z += 1
