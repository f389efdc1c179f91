import time
from typing import Iterable, List

import numpy as np
import pandas as pd
from scipy.stats import linregress

from multiset_core.multiset_types import DegreeSequence
from omega_engine.omega import b

DEFAULT_TS = (8, 16, 32, 64, 128)

def square_sequence(t: int) -> DegreeSequence:
    """
    t copies of t, the family used to check that b runs in time linear in the sum
    """

    return DegreeSequence({t: t})

def time_b(D: DegreeSequence, k: int, repeats: int = 5) -> float:
    """
    Best-of-`repeats` wall time of one b computation, in seconds
    """

    best = float('inf')
    for _ in range(repeats):
        start = time.perf_counter()
        b(D, k)
        best = min(best, time.perf_counter() - start)
    return best

def measure_scaling(ts: Iterable[int] = DEFAULT_TS, k: int = 3, repeats: int = 5) -> dict:
    """
    Time b on {t copies of t} for each t and fit log(time) against log(sum).

    Returns a dict with:
    - table (pd.DataFrame): columns t, total, b, seconds, ratio (time over the previous row's time)
    - exponent (float): slope of the log-log fit; about 1 for linear growth in the sum
    """

    rows: List[dict] = []
    previous = None
    for t in ts:
        D = square_sequence(t)
        seconds = time_b(D, k, repeats)
        rows.append({
            't': t,
            'total': D.total,
            'b': b(D, k).b,
            'seconds': seconds,
            'ratio': seconds / previous if previous else np.nan,
        })
        previous = seconds

    table = pd.DataFrame(rows)
    fit = linregress(np.log(table['total']), np.log(table['seconds']))
    return {'table': table, 'exponent': float(fit.slope)}
