"""Exact hump statistics of Dyck and Motzkin paths, and hook-restricted SYT sums."""
from humplab.combinat import CapExceeded, ConsistencyError, binomial, catalan, factorial, motzkin
from humplab.formulas import (
    hc_closed,
    hc_recurrence,
    hm_closed,
    hm_recurrence,
    hs40,
    hs40_closed,
    sd_closed,
    sm_closed,
    sm_recurrence,
)
from humplab.partitions import (
    HookConstraint,
    Partition,
    generate_hook_partitions,
    generate_partitions,
    hook_sum,
    s11_closed,
    s21_closed,
    strip_sum_closed,
    syt_count,
    syt_enumerate,
)
from humplab.paths import (
    FamilyKind,
    LatticePath,
    PathFamily,
    enumerate_paths,
    first_return_split,
    hump_count,
    total_humps,
)

__version__ = "0.1.0"
