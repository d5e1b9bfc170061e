"""Integer codes for the 13 Allen relations, shared by both kernel backends.

The order matches the reliable/possible condition table used throughout the
package; state arrays produced by the kernels are indexed by these codes.
"""

import numpy as np

(
    BEFORE,
    AFTER,
    DURING,
    CONTAINS,
    OVERLAPS,
    OVERLAPPED_BY,
    MEETS,
    MET_BY,
    STARTS,
    STARTED_BY,
    FINISHES,
    FINISHED_BY,
    EQUALS,
) = range(13)

N_RELATIONS = 13

NAMES = (
    "before",
    "after",
    "during",
    "contains",
    "overlaps",
    "overlapped-by",
    "meets",
    "met-by",
    "starts",
    "started-by",
    "finishes",
    "finished-by",
    "equals",
)

# INVERSE[i] is the code of the inverse relation of code i (an involution).
INVERSE = np.array(
    [
        AFTER,
        BEFORE,
        CONTAINS,
        DURING,
        OVERLAPPED_BY,
        OVERLAPS,
        MET_BY,
        MEETS,
        STARTED_BY,
        STARTS,
        FINISHED_BY,
        FINISHES,
        EQUALS,
    ],
    dtype=np.int64,
)
