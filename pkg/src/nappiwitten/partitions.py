"""Integer partitions.

Partitions are tuples of weakly decreasing positive parts throughout the
engine.  The multiplicity form ``((part, mult), ...)`` used by the singular
systems is available through ``multiplicity_form``.
"""
from collections import Counter
from functools import lru_cache


@lru_cache(maxsize=None)
def partitions_bounded(n: int, max_parts=None, max_part=None) -> tuple:
    """Partitions of n with at most ``max_parts`` parts, each at most ``max_part``.

    Returned in reverse-lexicographic order, largest first part first.
    """
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_parts is not None and max_parts <= 0:
        return ()
    top = n if max_part is None else min(n, max_part)
    rest_parts = None if max_parts is None else max_parts - 1
    out = []
    for first in range(top, 0, -1):
        for tail in partitions_bounded(n - first, rest_parts, first):
            out.append((first,) + tail)
    return tuple(out)


def partitions(n: int) -> list:
    """All partitions of n >= 1, in reverse-lexicographic order, in multiplicity form."""
    if n < 1:
        raise ValueError("partitions are only listed for n >= 1")
    return [multiplicity_form(p) for p in partitions_bounded(n)]


def multiplicity_form(parts) -> tuple:
    counts = Counter(parts)
    return tuple((p, counts[p]) for p in sorted(counts, reverse=True))


def parts_of(partition) -> tuple:
    """Expand a multiplicity-form partition to its weakly decreasing parts."""
    out = []
    for part, mult in partition:
        out.extend([part] * mult)
    return tuple(out)


def weight(partition) -> int:
    return sum(p * q for p, q in partition)


def remove_part(parts: tuple, part: int):
    """Drop one copy of ``part``; None if it does not occur."""
    if part not in parts:
        return None
    i = parts.index(part)
    return parts[:i] + parts[i + 1:]


def colored_partition_counts(colors: int, top: int) -> list:
    """Coefficients of prod_{n>=1} (1 - q^n)^(-colors) up to q^top.

    Computed by repeated multiplication with the geometric series, so it is
    independent of any basis enumeration.
    """
    coeffs = [1] + [0] * top
    for n in range(1, top + 1):
        for _ in range(colors):
            for k in range(n, top + 1):
                coeffs[k] += coeffs[k - n]
    return coeffs
