import logging
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Tuple

import pandas as pd

from config import SCAN_WORKERS
from covering_bounds.bounds import covering_lower_bound, schonheim
from covering_bounds.covering_types import CoveringParams
from covering_bounds.csv_helpers import Prior
from errors import CoveringParameterError

logger = logging.getLogger(__name__)

SCAN_COLUMNS = ['kappa', 'v', 'd', 'r', 'ell', 'previous', 'source', 'new']

# source label of rows whose baseline is the Schonheim bound
SCHONHEIM_SOURCE = 'schonheim'

def scan_range(kappa: int, lam: int = 1) -> range:
    """
    Point counts v with 13*kappa/4 < v <= (kappa-1)^2/lam + 1. Below the range
    the covering numbers are already known; above it r >= kappa and the excess
    argument cannot beat Schonheim.
    """

    return range(13 * kappa // 4 + 1, (kappa - 1) ** 2 // lam + 2)

def _scan_cell(cell: Tuple[int, int, int, Optional[Prior]]) -> Optional[dict]:
    kappa, v, lam, prior = cell
    params = CoveringParams(v, kappa, lam)

    previous = schonheim(v, kappa, lam)
    source = SCHONHEIM_SOURCE
    if prior is not None and prior[0] > previous:
        previous, source = prior

    new, reports = covering_lower_bound(params, previous)
    if new <= previous:
        return None
    return {
        'kappa': kappa,
        'v': v,
        'd': params.d,
        'r': params.r,
        'ell': reports[0].ell,
        'previous': previous,
        'source': source,
        'new': new,
    }

def _cells(kappa_min: int, kappa_max: int, lam: int, priors: Dict) -> Iterator[tuple]:
    for kappa in range(kappa_min, kappa_max + 1):
        for v in scan_range(kappa, lam):
            yield kappa, v, lam, priors.get((kappa, v, lam))

def scan_table(kappa_min: int, kappa_max: int, lam: int = 1, priors: Optional[Dict] = None,
               workers: int = SCAN_WORKERS) -> pd.DataFrame:
    """
    Given a block-size range, try every (kappa, v) cell in scan_range and keep
    the cells where the excess argument beats the baseline. The baseline is
    Schonheim, or the prior bound for the cell when one is supplied and larger.

    Returns a DataFrame with columns kappa,v,d,r,ell,previous,source,new in
    (kappa, v) order, whatever the number of workers.
    """

    if kappa_min < 5 or kappa_max < kappa_min:
        raise CoveringParameterError(f'need 5 <= kappa_min <= kappa_max, got {kappa_min}..{kappa_max}')
    if lam < 1:
        raise CoveringParameterError(f'lambda must be positive, got {lam}')

    cells = list(_cells(kappa_min, kappa_max, lam, priors or {}))
    logger.debug('scanning %d cells with %d worker(s)', len(cells), workers)

    if workers > 1:
        with Pool(processes=workers) as pool:
            results = pool.map(_scan_cell, cells, chunksize=16)
    else:
        results = [_scan_cell(cell) for cell in cells]

    rows: List[dict] = [row for row in results if row is not None]
    return pd.DataFrame(rows, columns=SCAN_COLUMNS)

def format_table(rows: pd.DataFrame, fmt: str = 'text') -> str:
    if fmt == 'csv':
        return rows.to_csv(index=False)
    if fmt == 'text':
        if rows.empty:
            return 'no improvements'
        return rows.to_string(index=False)
    raise ValueError(f'unknown table format: {fmt}')
