# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled tally loop for exhaustive sequence enumeration.

Mirrors ``_pykernels.count_outputs`` exactly; kept free of any closed-form
shortcuts so the enumeration side of every cross-check stays an honest
brute-force walk.
"""

from libc.stdlib cimport free, malloc


def count_outputs(int low, int high, int length, int threshold, bint second_hit):
    """Tally accepted prices of a threshold rule over every sequence.

    Same semantics as the pure-Python fallback: walks all
    ``(high - low + 1) ** length`` sequences in lexicographic order and
    returns a list of counts indexed by ``price - low``.
    """
    cdef int width = high - low + 1
    cdef int needed = 2 if second_hit else 1
    cdef long long *counts = <long long *> malloc(width * sizeof(long long))
    cdef int *digits = <int *> malloc(length * sizeof(int))
    if counts == NULL or digits == NULL:
        if counts != NULL:
            free(counts)
        if digits != NULL:
            free(digits)
        raise MemoryError()

    cdef int i, pos, seen, accepted, price
    for i in range(width):
        counts[i] = 0
    for i in range(length):
        digits[i] = 0

    try:
        while True:
            accepted = digits[length - 1]
            seen = 0
            for pos in range(length):
                price = digits[pos]
                if price + low >= threshold:
                    seen += 1
                    if seen == needed:
                        accepted = price
                        break
            counts[accepted] += 1

            # Advance the odometer, rightmost digit fastest.
            pos = length - 1
            while pos >= 0:
                digits[pos] += 1
                if digits[pos] < width:
                    break
                digits[pos] = 0
                pos -= 1
            if pos < 0:
                break
        return [counts[i] for i in range(width)]
    finally:
        free(counts)
        free(digits)
