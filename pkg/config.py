import os
from dotenv import load_dotenv

load_dotenv()

def _int_setting(name, default):
    value = os.environ.get(name)
    if value is None or value.strip() == "":
        return default
    return int(value)

# breadth-first search behind order_lab.precedes
PRECEDES_MAX_ORDER = _int_setting("KINDEP_PRECEDES_MAX_ORDER", 8)
PRECEDES_MAX_SUM = _int_setting("KINDEP_PRECEDES_MAX_SUM", 30)

# exhaustive MAX search behind graph_engine.max_worst_case
WORST_CASE_MAX_ORDER = _int_setting("KINDEP_WORST_CASE_MAX_ORDER", 10)

# the decrement runner keeps a count array as long as max(D)
OMEGA_MAX_SUM = _int_setting("KINDEP_OMEGA_MAX_SUM", 10**7)

# loop_variant oracles
BRUTEFORCE_MAX_ORDER = _int_setting("KINDEP_BRUTEFORCE_MAX_ORDER", 14)
REALIZATIONS_MAX_ORDER = _int_setting("KINDEP_REALIZATIONS_MAX_ORDER", 6)
REALIZATIONS_MAX_SUM = _int_setting("KINDEP_REALIZATIONS_MAX_SUM", 24)

DEFAULT_SEED = _int_setting("KINDEP_DEFAULT_SEED", 0)
SCAN_WORKERS = _int_setting("KINDEP_SCAN_WORKERS", 1)

# degrees are capped so serialized sequences stay within 32-bit tooling
MAX_DEGREE = 2**31 - 1
MAX_TOTAL = 2**63 - 1
