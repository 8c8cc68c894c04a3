"""Pure-Python fallback for the exhaustive tally loop.

Same contract as the compiled extension in ``_kernels.pyx``; the package
selects between the two at import time (see ``kernels.py``).
"""

from __future__ import annotations

from itertools import product


def count_outputs(low: int, high: int, length: int, threshold: int, second_hit: bool) -> list:
    """Tally accepted prices of a threshold rule over every sequence.

    Walks all ``(high - low + 1) ** length`` price sequences in
    lexicographic order, simulates the first-hit (or second-hit) rule on
    each, and returns ``counts`` where ``counts[k - low]`` is the number of
    sequences whose accepted price is ``k``.  The caller bounds the total.
    """
    width = high - low + 1
    counts = [0] * width
    needed = 2 if second_hit else 1
    for seq in product(range(low, high + 1), repeat=length):
        accepted = seq[-1]
        seen = 0
        for price in seq:
            if price >= threshold:
                seen += 1
                if seen == needed:
                    accepted = price
                    break
        counts[accepted - low] += 1
    return counts
